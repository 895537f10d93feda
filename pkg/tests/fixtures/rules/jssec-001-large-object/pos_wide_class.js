class WorksheetModel {
  loadRows() {}
  saveRows() {}
  insertRow() {}
  deleteRow() {}
  insertColumn() {}
  deleteColumn() {}
  mergeCells() {}
  splitCells() {}
  formatCell() {}
  clearFormat() {}
  sortRange() {}
  filterRange() {}
  copyRange() {}
  pasteRange() {}
  undoEdit() {}
  redoEdit() {}
  exportCsv() {}
  importCsv() {}
  freezePane() {}
  unfreezePane() {}
  recalculate() {}
}
new WorksheetModel();
