function grantBadge(profile, badge) {
  profile.__proto__.badge = badge;
}
Object.prototype.describeAll = function () { return "***"; };
grantBadge({}, "admin");
