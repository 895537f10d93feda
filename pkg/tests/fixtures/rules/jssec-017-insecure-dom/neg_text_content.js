function setGreeting(visitorName) {
  document.getElementById("greeting").textContent = visitorName;
}
setGreeting(location.hash.substring(1));
