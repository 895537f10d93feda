function refreshBadgeSafe() {
  try {
    refreshBadge();
  } catch (failure) {
    recordFailure(failure);
    showFallbackBadge();
  }
}
refreshBadgeSafe();
