class ChartBuilder {
  plot(canvas, series, xMin, xMax, yMin, yMax, strokeColor, fillColor) {
    return [canvas, series, xMin, xMax, yMin, yMax, strokeColor, fillColor];
  }
}
new ChartBuilder().plot(null, [], 0, 1, 0, 1, "#000", "#fff");
