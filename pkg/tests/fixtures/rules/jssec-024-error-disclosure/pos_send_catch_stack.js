function renderReport(req, res) {
  try {
    res.send(buildReport(req.query));
  } catch (renderErr) {
    res.send("<pre>" + renderErr.stack + "</pre>");
  }
}
registerHandler(renderReport);
