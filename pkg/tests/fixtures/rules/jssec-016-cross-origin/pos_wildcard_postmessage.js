function broadcastTheme(theme) {
  window.parent.postMessage({ theme: theme }, "*");
}
broadcastTheme("dark");
