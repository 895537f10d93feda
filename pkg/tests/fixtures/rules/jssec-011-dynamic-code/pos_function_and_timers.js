var compiled = new Function("doc", "return doc.title;");
setTimeout("refreshBadge()", 5000);
setInterval("pollQueue();", 60000);
compiled({});
