window.addEventListener("message", function (event) {
  if (event.origin !== "https://widgets.example.com") {
    return;
  }
  applyWidgetState(event.data);
});
otherFrame.postMessage({ ping: 1 }, "https://widgets.example.com");
