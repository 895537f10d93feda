function showAnchorPreview() {
  var anchorName = location.hash.substring(1);
  document.getElementById("preview").innerHTML = anchorName;
}
showAnchorPreview();
