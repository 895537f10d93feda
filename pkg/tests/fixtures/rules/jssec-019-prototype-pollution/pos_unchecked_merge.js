function applySettings(settingsJson) {
  var incoming = JSON.parse(settingsJson);
  var current = {};
  for (var prop in incoming) {
    current[prop] = incoming[prop];
  }
  return current;
}
applySettings('{"__proto__": {"maliciousProp": "payload"}}');
