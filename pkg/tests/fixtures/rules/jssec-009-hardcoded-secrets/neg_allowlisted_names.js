var passwordField = "account-password-input";
var keyCode = "Enter";
var userAgent = "uploader/2.1";
bindField(passwordField, keyCode, userAgent);
