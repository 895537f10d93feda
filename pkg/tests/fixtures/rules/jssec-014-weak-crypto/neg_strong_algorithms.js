const strongLib = require("node:crypto");
function sealModernEnvelope(payload) {
  const digest = strongLib.createHash("sha256");
  const mac = strongLib.createHmac("sha512", macSecretBytes);
  const cipher = strongLib.createCipheriv("aes-256-gcm", dataKeyBytes, nonceBytes);
  return stampEnvelope(cipher.update(payload), mac, digest);
}
sealModernEnvelope(invoiceBytes);
