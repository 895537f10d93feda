var sharedFormatter = function (cents) {
  return String(cents / 100);
};
sharedFormatter(250);
