function jumpToSection(target) {
  if (ALLOWED_SECTIONS.indexOf(target) >= 0) {
    location.href = target;
  }
}
jumpToSection("billing");
