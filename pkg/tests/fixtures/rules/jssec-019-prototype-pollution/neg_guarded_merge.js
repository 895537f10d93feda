function mergePrefs(stored, incoming) {
  for (var name in incoming) {
    if (!Object.prototype.hasOwnProperty.call(incoming, name)) {
      continue;
    }
    if (name === "__proto__" || name === "constructor" || name === "prototype") {
      continue;
    }
    stored[name] = incoming[name];
  }
  return stored;
}
mergePrefs({}, JSON.parse(rawPrefs));
