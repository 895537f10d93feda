function verifyLogin(accountName, password) {
  console.log("login attempt", accountName, password);
  return checkCredentials(accountName, password);
}
verifyLogin("ada", readInput());
