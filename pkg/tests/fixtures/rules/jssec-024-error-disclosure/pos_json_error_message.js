function updateProfile(req, res) {
  saveProfile(req.body).catch(function (err) {
    res.json({ error: err.message, hint: "see trace" });
  });
}
registerHandler(updateProfile);
