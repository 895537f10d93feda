function continueToNext() {
  var target = location.search.slice(6);
  location.href = target;
}
continueToNext();
