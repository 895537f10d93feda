function rememberSession(token) {
  document.cookie = "sid=" + token + "; path=/";
}
rememberSession(freshToken());
