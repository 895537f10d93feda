loadManifest("app", function (manifest) {
  fetchBundle(manifest.main, function (bundle) {
    verifyChecksum(bundle, function (okFlag) {
      installBundle(bundle, function (outcome) {
        reportInstall(okFlag, outcome);
      });
    });
  });
});
