function syncCart(cart) {
  console.log("cart payload", cart);
  console.debug("sync begin");
  alert("sync done");
  return pushCart(cart);
}
syncCart([]);
