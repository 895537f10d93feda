const fs = require("fs");
function sendAttachment(req, res) {
  fs.readFile(req.query.path, function (readFault, body) {
    res.end(body);
  });
}
registerHandler(sendAttachment);
