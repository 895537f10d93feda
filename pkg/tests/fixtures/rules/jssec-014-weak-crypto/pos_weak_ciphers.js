const cipherLib = require("crypto");
function sealLegacyEnvelope(payload) {
  const encryptor = cipherLib.createCipheriv("des-ede3", sessionKeyBytes, ivBytes);
  const mac = cipherLib.createHmac("md5", macKeyBytes);
  return stampEnvelope(encryptor.update(payload), mac);
}
sealLegacyEnvelope(ledgerBytes);
