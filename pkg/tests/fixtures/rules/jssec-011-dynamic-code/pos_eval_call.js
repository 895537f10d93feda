function runSnippet(snippet) {
  return eval(snippet);
}
runSnippet("1 + 1");
