const fsLib = require("fs");
function loadBanner() {
  return fsLib.readFileSync("./assets/banner.txt", "utf8");
}
renderBanner(loadBanner());
