function openHelpOverlay() {
  location.href = "javascript:showHelp()";
}
function mirrorFallback() {
  location.assign("//mirror.example.net/app");
}
openHelpOverlay();
mirrorFallback();
