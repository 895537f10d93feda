function buildAuditPayload(action, at) {
  return JSON.stringify({ action: action, at: at });
}
queuePayload(buildAuditPayload("save", 1700000000));
