function describeState(code) {
  switch (code) {
    case 0:
      return "idle";
    case 1:
      return "busy";
  }
  return "unknown";
}
describeState(0);
