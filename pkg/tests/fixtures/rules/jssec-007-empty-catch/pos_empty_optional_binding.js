function stopTimer(timer) {
  try {
    timer.stop();
  } catch {
  }
}
stopTimer(null);
