const hashLib = require("node:crypto");
function fingerprintLegacy(buf) {
  return hashLib.createHash("md5").update(buf).digest("hex");
}
function checksumV1(buf) {
  return hashLib.createHash("sha1").update(buf).digest("hex");
}
shipDigests(fingerprintLegacy(blobA), checksumV1(blobB));
