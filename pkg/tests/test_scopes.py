"""Scope table construction: bindings, references, implicit globals."""
from jssec.parser import parse_text
from jssec.scopes import HOST_GLOBALS, build_scope_table


def table_for(src):
    return build_scope_table(parse_text(src))


def test_top_level_declarations_are_global_bindings():
    table = table_for("var a = 1; let b = 2; const c = 3; function f() {} class K {}")
    names = {b.name: b.kind for b in table.global_bindings()}
    assert names == {"a": "var", "b": "let", "c": "const", "f": "function", "K": "class"}


def test_module_has_no_global_bindings():
    table = table_for("export const a = 1;\nvar b = 2;")
    assert table.root.kind == "module"
    assert table.global_bindings() == []
    assert table.root.bindings["a"].exported is True
    assert table.root.bindings["b"].exported is False


def test_var_hoists_out_of_blocks_let_does_not():
    table = table_for("if (x) { var inner = 1; let scoped = 2; }")
    assert "inner" in table.root.bindings
    assert "scoped" not in table.root.bindings
    block = next(s for s in table.scopes if s.kind == "block")
    assert block.bindings["scoped"].kind == "let"


def test_var_does_not_hoist_out_of_functions():
    table = table_for("function f() { var local = 1; }")
    assert "local" not in table.root.bindings
    fn = next(s for s in table.scopes if s.kind == "function")
    assert fn.bindings["local"].kind == "var"


def test_params_and_destructuring_bind_in_function_scope():
    table = table_for("function f(a, {b, c: d = 1}, ...rest) { return a; }")
    fn = next(s for s in table.scopes if s.kind == "function")
    assert set(fn.bindings) >= {"a", "b", "d", "rest"}
    assert all(fn.bindings[n].kind == "param" for n in ("a", "b", "d", "rest"))
    assert "c" not in fn.bindings


def test_read_reference_attaches_to_binding():
    table = table_for("var total = 0; total = total + 1;")
    binding = table.root.bindings["total"]
    kinds = sorted(r.kind for r in binding.references)
    assert kinds == ["read", "write"]


def test_implicit_global_on_undeclared_write():
    table = table_for("function f() { leaked = 1; }")
    assert [b.name for b in table.implicit_globals] == ["leaked"]
    assert table.implicit_globals[0].kind == "implicit"
    # The implicit binding lands on the root scope.
    assert table.root.bindings["leaked"] is table.implicit_globals[0]


def test_undeclared_read_is_unresolved_not_implicit():
    table = table_for("use(thing);")
    names = {r.node.name for r in table.unresolved_reads}
    assert "thing" in names
    assert table.implicit_globals == []


def test_host_global_write_is_not_implicit():
    assert "onload" in HOST_GLOBALS
    table = table_for("onload = function() {}; window.x = 1;")
    assert table.implicit_globals == []
    assert table.root.bindings["onload"].kind == "hostglobal"


def test_catch_parameter_scoped_to_handler():
    table = table_for("try { go(); } catch (err) { log(err); }")
    assert "err" not in table.root.bindings
    catch = next(s for s in table.scopes if s.kind == "catch")
    assert catch.bindings["err"].kind == "catch"
    assert len(catch.bindings["err"].references) == 1


def test_import_bindings():
    table = table_for('import def, { named as alias } from "mod";')
    assert table.root.kind == "module"
    assert {n: b.kind for n, b in table.root.bindings.items()} == {
        "def": "import", "alias": "import"}


def test_with_statement_marks_references_unreliable():
    table = table_for("var a = 1; with (obj) { a = 2; } a = 3;")
    assert table.has_with is True
    refs = table.root.bindings["a"].references
    assert [r.unreliable for r in refs] == [True, False]


def test_function_expression_name_scoped_to_itself():
    table = table_for("var f = function inner() { return inner; };")
    assert "inner" not in table.root.bindings
    fn = next(s for s in table.scopes if s.kind == "function")
    assert fn.bindings["inner"].kind == "function"
    assert len(fn.bindings["inner"].references) == 1


def test_var_redeclaration_collapses():
    table = table_for("var a = 1; var a = 2;")
    assert len(table.global_bindings()) == 1


def test_for_loop_let_scoped_to_loop():
    table = table_for("for (let i = 0; i < 3; i++) { use(i); }")
    assert "i" not in table.root.bindings
    loop = next(s for s in table.scopes if s.kind == "block")
    binding = loop.bindings["i"]
    # test read, update readwrite, body read
    assert len(binding.references) == 3


def test_decl_node_is_the_identifier():
    table = table_for("let count = 0;")
    decl = table.root.bindings["count"].decl_node
    assert decl.type == "Identifier" and decl.name == "count"


def test_arrow_parameters_do_not_leak():
    table = table_for("items.map((item) => item * 2);")
    assert "item" not in table.root.bindings
    assert all(r.node.name != "item" for r in table.unresolved_reads)
