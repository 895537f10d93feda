// eval() is forbidden by our style guide; see docs/code-review.md
var guidance = "never call eval() on user input";
showBanner(guidance);
