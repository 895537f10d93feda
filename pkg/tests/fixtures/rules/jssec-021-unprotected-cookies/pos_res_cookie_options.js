function issueSession(res, token) {
  res.cookie("sid", token, { httpOnly: true });
  res.cookie("theme", "light");
}
issueSession(expressResponse, mintToken());
