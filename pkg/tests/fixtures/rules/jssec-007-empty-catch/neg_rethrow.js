function loadProfileStrict(id) {
  try {
    return loadProfile(id);
  } catch (cause) {
    throw new Error("profile load failed: " + id, { cause: cause });
  }
}
loadProfileStrict(7);
