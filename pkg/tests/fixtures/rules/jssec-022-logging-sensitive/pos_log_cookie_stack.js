function reportContext(failure) {
  console.info("request context", document.cookie);
  console.warn("details", failure.stack);
}
reportContext(buildFailure());
