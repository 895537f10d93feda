var sharedFormatter = function (cents) {
  return (cents / 100).toFixed(2);
};
sharedFormatter(199);
