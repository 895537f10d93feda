const fixedFs = require("fs");
function storeNote(req, res) {
  var safeName = sanitizeFilename(req.params.noteId);
  fixedFs.writeFile("/srv/notes/" + safeName, req.body.text, reportWrite);
  res.end("ok");
}
registerHandler(storeNote);
