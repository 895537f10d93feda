async function hashToken(token) {
  const bytes = new TextEncoder().encode(token);
  return crypto.subtle.digest("SHA-1", bytes);
}
hashToken("t-123");
