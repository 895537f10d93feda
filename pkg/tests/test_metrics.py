"""Metric calculations: logical LOC, callbacks, object members, prototypes."""
from jssec.metrics import (
    build_prototype_graph,
    callback_chains,
    measure_functions,
    measure_objects,
    unit_logical_loc,
)
from jssec.parser import parse_text
from jssec.scopes import build_scope_table
from jssec.source import SourceUnit, UnitKind


def prep(src, path="u.js"):
    unit = SourceUnit(unit_id=path, path=path, kind=UnitKind.JS_FILE, text=src)
    tree = parse_text(src)
    return unit, tree, build_scope_table(tree)


# --- logical lines ---


def test_logical_loc_skips_comments_and_blanks():
    src = (
        "// header comment\n"
        "var a = 1;\n"
        "\n"
        "/* block\n"
        "   comment */\n"
        "var b = 2;\n"
    )
    unit, tree, _ = prep(src)
    assert unit_logical_loc(tree, unit) == 2


def test_logical_loc_counts_template_covered_lines():
    unit, tree, _ = prep("const t = `a\nb\nc`;\n")
    assert unit_logical_loc(tree, unit) == 3


def test_logical_loc_empty_unit():
    unit, tree, _ = prep("")
    assert unit_logical_loc(tree, unit) == 0


def test_function_logical_loc_and_braces():
    src = (
        "function f() {\n"
        "  // only a comment\n"
        "  let a = 1;\n"
        "\n"
        "  return a;\n"
        "}\n"
    )
    unit, tree, _ = prep(src)
    fns = measure_functions(tree, unit)
    assert len(fns) == 1
    assert fns[0].logical_loc == 4  # signature, two statements, closing brace
    assert fns[0].name == "f"


def test_parameter_counting():
    unit, tree, _ = prep("function g(a, {b, c}, [d], e = 1, ...rest) {}")
    fns = measure_functions(tree, unit)
    assert fns[0].parameter_count == 5


def test_function_names():
    src = (
        "function decl() {}\n"
        "var assigned = function() {};\n"
        "app.handlers.save = function() {};\n"
        "const obj = { method() {} };\n"
        "setTimeout(function() {}, 10);\n"
    )
    unit, tree, _ = prep(src)
    names = [f.name for f in measure_functions(tree, unit)]
    assert names == ["decl", "assigned", "app.handlers.save", "method", "<anonymous>"]


# --- callback chains ---


def test_nested_callbacks_depth():
    src = "a(function() { b(function() { c(function() { done(); }); }); });"
    _, tree, _ = prep(src)
    chains = callback_chains(tree)
    assert len(chains) == 1
    assert chains[0].depth == 3
    assert chains[0].root_call.start == 0


def test_promise_then_chain_counts_each_link():
    src = "p.then(a => a).then(b => b).then(c => c);"
    _, tree, _ = prep(src)
    chains = callback_chains(tree)
    assert len(chains) == 1
    assert chains[0].depth == 3


def test_mixed_nesting_and_innermost():
    src = (
        "getData(function(res) {\n"
        "  process(res, function(out) { save(out); });\n"
        "});\n"
    )
    _, tree, _ = prep(src)
    chains = callback_chains(tree)
    assert len(chains) == 1
    assert chains[0].depth == 2
    inner = chains[0].innermost
    assert inner.type == "FunctionExpression"
    assert inner.params[0].name == "out"


def test_plain_calls_are_not_chains():
    _, tree, _ = prep("f(1);\ng(h(2));\n")
    assert callback_chains(tree) == []


def test_sibling_callbacks_take_max_not_sum():
    src = "run(function() { a(function() {}); b(function() {}); });"
    _, tree, _ = prep(src)
    chains = callback_chains(tree)
    assert [c.depth for c in chains] == [2]


# --- object member counts ---


def test_object_literal_members_exclude_spread():
    src = "var cfg = { host: 'h', port: 80, ...extra };"
    _, tree, scopes = prep(src)
    objs = measure_objects(tree, scopes)
    assert len(objs) == 1
    assert (objs[0].kind, objs[0].name, objs[0].member_count) == ("literal", "cfg", 2)


def test_constructor_counts_this_and_prototype_members():
    src = (
        "function Point(x, y) { this.x = x; this.y = y; }\n"
        "Point.prototype.move = function() {};\n"
        "Point.prototype.draw = function() {};\n"
    )
    _, tree, scopes = prep(src)
    ctor = next(o for o in measure_objects(tree, scopes) if o.kind == "constructor")
    assert ctor.name == "Point"
    assert ctor.member_count == 4


def test_prototype_object_literal_merges():
    src = (
        "function Shape() { this.id = 0; }\n"
        "Shape.prototype = { area: function() {}, perimeter: function() {} };\n"
    )
    _, tree, scopes = prep(src)
    ctor = next(o for o in measure_objects(tree, scopes) if o.kind == "constructor")
    assert ctor.member_count == 3


def test_class_members_include_constructor_this_writes():
    src = (
        "class Widget {\n"
        "  static kind = 'w';\n"
        "  constructor() { this.state = 1; }\n"
        "  render() {}\n"
        "  get value() { return 1; }\n"
        "}\n"
    )
    _, tree, scopes = prep(src)
    cls = next(o for o in measure_objects(tree, scopes) if o.kind == "class")
    assert cls.member_count == 4  # kind, render, value, state


def test_plain_function_without_this_writes_not_an_object():
    _, tree, scopes = prep("function util(a) { return a + 1; }")
    assert measure_objects(tree, scopes) == []


# --- prototype graph ---


def test_extends_chain_depth():
    src = "class A {}\nclass B extends A {}\nclass C extends B {}\n"
    unit, tree, scopes = prep(src)
    graph = build_prototype_graph([(unit, tree, scopes)])
    assert graph.chain_depth("C") == 2
    assert graph.chain_depth("B") == 1
    assert graph.chain_depth("A") == 0


def test_object_create_and_new_edges():
    src = (
        "function Base() { this.a = 1; }\n"
        "function Mid() { this.b = 2; }\n"
        "function Leaf() { this.c = 3; }\n"
        "Mid.prototype = Object.create(Base.prototype);\n"
        "Leaf.prototype = new Mid();\n"
    )
    unit, tree, scopes = prep(src)
    graph = build_prototype_graph([(unit, tree, scopes)])
    assert graph.parents == {"Mid": "Base", "Leaf": "Mid"}
    assert graph.chain_depth("Leaf") == 2


def test_set_prototype_of_edge():
    src = (
        "function P() { this.x = 1; }\n"
        "function C() { this.y = 2; }\n"
        "Object.setPrototypeOf(C, P);\n"
    )
    unit, tree, scopes = prep(src)
    graph = build_prototype_graph([(unit, tree, scopes)])
    assert graph.parents == {"C": "P"}


def test_unknown_parent_pruned_and_recorded():
    src = "class Page extends ExternalComponent {}"
    unit, tree, scopes = prep(src)
    graph = build_prototype_graph([(unit, tree, scopes)])
    assert "Page" not in graph.parents
    assert ("Page", unit.unit_id) in graph.unknown_parents
    assert graph.chain_depth("Page") == 0


def test_cycle_detected_with_warning():
    src = (
        "function A() { this.a = 1; }\n"
        "function B() { this.b = 2; }\n"
        "Object.setPrototypeOf(A, B);\n"
        "Object.setPrototypeOf(B, A);\n"
    )
    unit, tree, scopes = prep(src)
    graph = build_prototype_graph([(unit, tree, scopes)])
    depth = graph.chain_depth("A")
    assert depth == 2
    assert any("cycle" in w for w in graph.warnings)


def test_graph_merges_across_units():
    base = prep("class Base {}", path="base.js")
    derived = prep("class Derived extends Base {}", path="derived.js")
    graph = build_prototype_graph([base, derived])
    assert graph.parents == {"Derived": "Base"}
    assert graph.nodes["Base"].path == "base.js"
    assert graph.nodes["Derived"].path == "derived.js"
