function rememberConsent(level) {
  document.cookie = "consent=" + level + "; Secure; SameSite=Strict; path=/";
}
rememberConsent("all");
