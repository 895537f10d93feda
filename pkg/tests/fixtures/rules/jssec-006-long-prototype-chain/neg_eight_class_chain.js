class Panel0 { draw() {} }
class Panel1 extends Panel0 { draw() { super.draw(); } }
class Panel2 extends Panel1 { draw() { super.draw(); } }
class Panel3 extends Panel2 { draw() { super.draw(); } }
class Panel4 extends Panel3 { draw() { super.draw(); } }
class Panel5 extends Panel4 { draw() { super.draw(); } }
class Panel6 extends Panel5 { draw() { super.draw(); } }
class Panel7 extends Panel6 { draw() { super.draw(); } }
new Panel7().draw();
