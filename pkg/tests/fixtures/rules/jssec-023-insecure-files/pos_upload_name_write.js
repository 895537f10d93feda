const fsApi = require("fs");
function storeUpload(req, res) {
  var uploaded = req.files.avatar;
  fsApi.writeFileSync("/srv/uploads/" + uploaded.originalname, uploaded.data);
  res.end("stored");
}
registerHandler(storeUpload);
