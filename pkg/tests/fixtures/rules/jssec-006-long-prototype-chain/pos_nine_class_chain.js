class Layer0 { paint() {} }
class Layer1 extends Layer0 { paint() { super.paint(); } }
class Layer2 extends Layer1 { paint() { super.paint(); } }
class Layer3 extends Layer2 { paint() { super.paint(); } }
class Layer4 extends Layer3 { paint() { super.paint(); } }
class Layer5 extends Layer4 { paint() { super.paint(); } }
class Layer6 extends Layer5 { paint() { super.paint(); } }
class Layer7 extends Layer6 { paint() { super.paint(); } }
class Layer8 extends Layer7 { paint() { super.paint(); } }
new Layer8().paint();
