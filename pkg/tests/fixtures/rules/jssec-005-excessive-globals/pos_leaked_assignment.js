function tallyVisit(page) {
  visitTally = (typeof visitTally === "undefined" ? 0 : visitTally) + 1;
  return page + ":" + visitTally;
}
tallyVisit("/home");
