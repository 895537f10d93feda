function issueSecureSession(res, token) {
  res.cookie("sid", token, { secure: true, httpOnly: true, sameSite: "strict" });
}
issueSecureSession(expressResponse, mintToken());
