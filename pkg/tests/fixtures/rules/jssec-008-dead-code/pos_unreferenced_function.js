function formatLegacyDate(stamp) {
  return stamp.toISOString();
}
function formatModernDate(stamp) {
  return stamp.toLocaleString();
}
exportReport(formatModernDate);
