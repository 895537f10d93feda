if (false) {
  launchLegacyUi();
}
startModernUi();
