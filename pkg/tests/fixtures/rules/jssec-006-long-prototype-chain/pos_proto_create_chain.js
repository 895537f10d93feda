function Stage0() {}
function Stage1() {}
Stage1.prototype = Object.create(Stage0.prototype);
function Stage2() {}
Stage2.prototype = Object.create(Stage1.prototype);
function Stage3() {}
Stage3.prototype = Object.create(Stage2.prototype);
function Stage4() {}
Stage4.prototype = Object.create(Stage3.prototype);
function Stage5() {}
Stage5.prototype = Object.create(Stage4.prototype);
function Stage6() {}
Stage6.prototype = Object.create(Stage5.prototype);
function Stage7() {}
Stage7.prototype = Object.create(Stage6.prototype);
function Stage8() {}
Stage8.prototype = Object.create(Stage7.prototype);
new Stage8();
