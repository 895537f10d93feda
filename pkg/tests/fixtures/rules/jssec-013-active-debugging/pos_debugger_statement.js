function inspectLayout(panel) {
  debugger;
  return panel.rect();
}
inspectLayout(mainPanel());
