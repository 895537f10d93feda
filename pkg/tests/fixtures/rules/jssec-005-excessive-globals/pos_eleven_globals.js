var appTitle = 0;
var buildNumber = 1;
var releaseChannel = 2;
var maxRetries = 3;
var pollSeconds = 4;
var menuDepth = 5;
var gridColumns = 6;
var gridRows = 7;
var themeName = 8;
var animationMillis = 9;
var startupDelay = 10;
bootstrap(appTitle);
