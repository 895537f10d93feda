window.addEventListener("message", function (event) {
  applyPreferences(event.data);
});
