function toCents(amount) {
  return Math.round(amount * 100);
}
function toAmount(cents) {
  return cents / 100;
}
printLedger(toCents(19.99), toAmount(1999));
