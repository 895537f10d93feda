function route(verb, path) {
  switch (verb) {
    case "GET":
      return readResource(path);
    default:
      return rejectVerb(verb);
  }
}
function describePhase(phase) {
  switch (phase) {
    case "start":
      return 1;
    case "end":
      return 2;
  }
}
route("GET", "/");
describePhase("start");
