function iconFor(kind) {
  switch (kind) {
    case "folder":
      return "📁";
    case "image":
      return "🖼";
    default:
      return "📄";
  }
}
iconFor("folder");
