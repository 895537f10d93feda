"""Taint propagation: sources, hops, sanitizers, value-kind filtering."""
from jssec.parser import parse_text
from jssec.taint import analyze_function, message_event_seeds


def taint_at(src, marker, seeds=None, sanitizers=None, upload_fields=None):
    """Taint info of the expression starting at the first occurrence of marker."""
    tree = parse_text(src)
    ft = analyze_function(tree.root, seeds=seeds, sanitizers=sanitizers,
                          upload_fields=upload_fields)
    pos = src.index(marker)
    from jssec.nodes import walk
    candidates = [n for n in walk(tree.root) if n.start == pos]
    for node in sorted(candidates, key=lambda n: -n.end):
        info = ft.taint_of(node)
        if info is not None:
            return info
    return None


def test_location_identifier_is_source():
    info = taint_at("var u = location; sink(u);", "u)", )
    assert info is not None and info.kind == "location"


def test_location_hash_member_source():
    info = taint_at("var frag = location.hash; show(frag);", "frag)")
    assert info.kind == "location"
    assert info.description == "location.hash"


def test_window_prefix_stripped():
    info = taint_at("var s = window.location.search; use(s);", "s)")
    assert info.kind == "location"


def test_document_sources():
    assert taint_at("var c = document.cookie; f(c);", "c)").kind == "cookie"
    assert taint_at("var r = document.referrer; f(r);", "r)").kind == "document"
    assert taint_at("var u = document.URL; f(u);", "u)").kind == "document"


def test_request_object_sources():
    assert taint_at("var q = req.query.id; f(q);", "q)").kind == "request"
    assert taint_at("var b = request.body; f(b);", "b)").kind == "request"
    assert taint_at("var k = req.cookies.sid; f(k);", "k)").kind == "cookie"


def test_plain_variable_not_tainted():
    assert taint_at("var a = 'safe'; f(a);", "a)") is None


def test_hops_accumulate_through_rebinding():
    src = "var a = location.hash; var b = a; var c = b; f(c);"
    info = taint_at(src, "c)")
    assert info is not None
    descriptions = [h.description for h in info.hops]
    assert descriptions == [
        "source: location.hash",
        "flows into 'a'",
        "flows into 'b'",
        "flows into 'c'",
    ]


def test_concatenation_keeps_taint():
    info = taint_at("var p = 'x=' + location.search; f(p);", "p)")
    assert info is not None and info.kind == "location"


def test_template_literal_keeps_taint():
    info = taint_at("var t = `q=${location.hash}`; f(t);", "t)")
    assert info is not None


def test_string_methods_keep_taint():
    info = taint_at("var s = location.hash.slice(1).toLowerCase(); f(s);", "s)")
    assert info is not None and info.kind == "location"


def test_numeric_conversion_clears_taint():
    assert taint_at("var n = parseInt(location.hash, 10); f(n);", "n)") is None
    assert taint_at("var m = Number(location.search); f(m);", "m)") is None


def test_sanitizer_call_clears_taint():
    assert taint_at("var s = escapeHtml(location.hash); f(s);", "s)") is None
    assert taint_at("var t = DOMPurify.sanitize(location.hash); f(t);", "t)") is None


def test_custom_sanitizer_names():
    src = "var s = scrub(location.hash); f(s);"
    assert taint_at(src, "s)") is not None
    assert taint_at(src, "s)", sanitizers=["scrub"]) is None


def test_dom_element_value_is_tainted_but_element_is_not():
    src = "var el = document.getElementById('n'); var v = el.value; f(el); g(v);"
    assert taint_at(src, "el)") is None
    info = taint_at(src, "v)")
    assert info is not None and info.kind == "dom-value"


def test_dom_element_other_props_not_tainted():
    src = "var el = document.getElementById('n'); var t = el.tagName; f(t);"
    assert taint_at(src, "t)") is None


def test_message_event_seed():
    tree = parse_text("addEventListener('message', function(ev) { use(ev.data); });")
    handler = tree.root.body[0].expression.arguments[1]
    seeds = message_event_seeds(handler)
    assert list(seeds) == ["ev"]
    ft = analyze_function(handler.body, seeds=seeds)
    from jssec.nodes import walk
    member = next(n for n in walk(handler.body) if n.type == "MemberExpression")
    info = ft.taint_of(member)
    assert info is not None and info.kind == "message-data"


def test_message_event_non_data_props_clean():
    tree = parse_text("addEventListener('message', function(ev) { use(ev.origin); });")
    handler = tree.root.body[0].expression.arguments[1]
    ft = analyze_function(handler.body, seeds=message_event_seeds(handler))
    from jssec.nodes import walk
    member = next(n for n in walk(handler.body) if n.type == "MemberExpression")
    assert ft.taint_of(member) is None


def test_upload_field_names():
    src = "var n = photo.originalname; f(n);"
    assert taint_at(src, "n)") is None
    info = taint_at(src, "n)", upload_fields=["originalname"])
    assert info is not None and info.kind == "upload"


def test_assignment_rebinds_taint():
    info = taint_at("var x; x = document.cookie; f(x);", "x)")
    assert info is not None and info.kind == "cookie"


def test_augmented_assignment_keeps_existing_taint():
    info = taint_at("var x = location.hash; x += '!'; f(x);", "x)")
    assert info is not None and info.kind == "location"


def test_nested_functions_not_entered():
    src = "var x = location.hash; function inner() { var y = 1; } f(x);"
    info = taint_at(src, "x)")
    assert info is not None
