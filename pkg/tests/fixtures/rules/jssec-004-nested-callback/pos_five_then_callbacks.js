fetchCatalog("toys")
  .then(function (catalog) { return catalog.items; })
  .then(function (items) { return items.filter(Boolean); })
  .then(function (kept) { return kept.map(describe); })
  .then(function (cards) { return cards.join(", "); })
  .then(function (text) { display(text); });
