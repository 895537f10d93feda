var cartLimit = 1;
var taxPercent = 2;
var shipFlat = 3;
var skuPrefix = 4;
var warehouseZone = 5;
var restockDays = 6;
var labelWidth = 7;
var labelHeight = 8;
var binCapacity = 9;
var dockCount = 10;
printManifest(cartLimit);
