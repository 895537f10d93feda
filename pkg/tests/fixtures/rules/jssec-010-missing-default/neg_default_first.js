function priorityFor(level) {
  switch (level) {
    default:
      return 10;
    case "high":
      return 1;
  }
}
priorityFor("high");
