function clampValue(v, lo, hi) {
  if (v < lo) { return lo; }
  if (v > hi) { return hi; }
  return v;
}
function midpoint(a, b) {
  return (a + b) / 2;
}
midpoint(clampValue(4, 0, 9), 6);
