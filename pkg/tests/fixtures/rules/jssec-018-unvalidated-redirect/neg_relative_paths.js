function goHome() {
  location.href = "/dashboard";
}
function retryLogin() {
  location.assign("/login?retry=1");
}
goHome();
retryLogin();
