var docsNote = "full API docs at http://intranet.example/docs (vpn only)";
renderFooter(docsNote);
