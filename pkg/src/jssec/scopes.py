"""Binding and reference resolution over one syntax tree.

Resolves declared bindings (var/let/const/function/class/param/import/catch),
records read/write references, creates implicit-global bindings for writes to
undeclared names, and marks references inside `with` bodies unreliable.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .nodes import FUNCTION_TYPES, Node, children
from .parser import SyntaxTree


# Writable host-environment globals; assigning to these does not create a new
# global binding, so they are excluded from implicit-global classification.
HOST_GLOBALS = frozenset({
    "window", "self", "globalThis", "top", "parent", "frames",
    "document", "location", "navigator", "history", "screen",
    "console", "module", "exports", "process", "global",
    "onload", "onunload", "onbeforeunload", "onerror", "onmessage",
    "onhashchange", "onpopstate", "onstorage", "onresize", "onscroll",
})


@dataclass
class Reference:
    node: Node
    kind: str  # read | write | readwrite
    unreliable: bool = False


@dataclass
class Binding:
    name: str
    kind: str  # var let const function class param import catch implicit hostglobal
    decl_node: Node | None
    scope: "Scope"
    exported: bool = False
    references: list[Reference] = field(default_factory=list)


class Scope:
    def __init__(self, kind: str, node: Node, parent: "Scope | None"):
        self.kind = kind  # global module function block catch class
        self.node = node
        self.parent = parent
        self.bindings: dict[str, Binding] = {}
        self.children: list["Scope"] = []
        if parent is not None:
            parent.children.append(self)

    def declare(self, name: str, kind: str, decl_node: Node | None,
                exported: bool = False) -> Binding:
        existing = self.bindings.get(name)
        if existing is not None:
            # var redeclaration and function/var overlap collapse to one binding.
            if exported:
                existing.exported = True
            return existing
        binding = Binding(name, kind, decl_node, self, exported)
        self.bindings[name] = binding
        return binding

    def lookup(self, name: str) -> Binding | None:
        scope: Scope | None = self
        while scope is not None:
            b = scope.bindings.get(name)
            if b is not None:
                return b
            scope = scope.parent
        return None

    def hoist_target(self) -> "Scope":
        """Nearest enclosing function/global/module scope for var hoisting."""
        scope: Scope = self
        while scope.kind not in ("function", "global", "module"):
            assert scope.parent is not None
            scope = scope.parent
        return scope


@dataclass
class ScopeTable:
    root: Scope
    scopes: list[Scope]
    implicit_globals: list[Binding]
    unresolved_reads: list[Reference]
    has_with: bool

    def global_bindings(self) -> list[Binding]:
        """Bindings that land on the shared global object (script units)."""
        if self.root.kind != "global":
            return []
        return [b for b in self.root.bindings.values() if b.kind != "hostglobal"]

    def all_bindings(self) -> list[Binding]:
        out = []
        for scope in self.scopes:
            out.extend(scope.bindings.values())
        return out


def _pattern_names(pattern: Node) -> list[Node]:
    """Identifier nodes bound by a binding pattern."""
    out: list[Node] = []
    stack = [pattern]
    while stack:
        n = stack.pop()
        if n is None:
            continue
        t = n.type
        if t == "Identifier":
            out.append(n)
        elif t == "ObjectPattern":
            for p in n.properties:
                if p.type == "Property":
                    stack.append(p.value)
                else:
                    stack.append(p.argument)
        elif t == "ArrayPattern":
            stack.extend(n.elements)
        elif t == "AssignmentPattern":
            stack.append(n.left)
        elif t == "RestElement":
            stack.append(n.argument)
    return out


class _ScopeBuilder:
    def __init__(self, tree: SyntaxTree):
        self.tree = tree
        self.scopes: list[Scope] = []
        self.implicit_globals: list[Binding] = []
        self.unresolved_reads: list[Reference] = []
        self.with_depth = 0
        self.has_with = False

    def build(self) -> ScopeTable:
        kind = "module" if self.tree.source_type == "module" else "global"
        root = self._new_scope(kind, self.tree.root, None)
        self._hoist_vars(self.tree.root.body, root)
        self._lexical_declare(self.tree.root.body, root)
        for stmt in self.tree.root.body:
            self._stmt(stmt, root)
        return ScopeTable(
            root=root,
            scopes=self.scopes,
            implicit_globals=self.implicit_globals,
            unresolved_reads=self.unresolved_reads,
            has_with=self.has_with,
        )

    def _new_scope(self, kind: str, node: Node, parent: Scope | None) -> Scope:
        scope = Scope(kind, node, parent)
        self.scopes.append(scope)
        return scope

    # --- declaration collection ---

    def _hoist_vars(self, stmts: list, scope: Scope, exported: bool = False):
        """Binds var declarators found anywhere under stmts, skipping functions."""
        stack = list(stmts)
        while stack:
            n = stack.pop()
            if not isinstance(n, Node) or n.type in FUNCTION_TYPES:
                continue
            if n.type == "VariableDeclaration" and n.kind == "var":
                for d in n.declarations:
                    for ident in _pattern_names(d.id):
                        scope.declare(ident.name, "var", ident, exported)
            if n.type in ("ExportNamedDeclaration", "ExportDefaultDeclaration"):
                if n.get("declaration") is not None:
                    self._hoist_vars([n.declaration], scope, exported=True)
                continue
            if n.type in ("ClassDeclaration", "ClassExpression"):
                continue
            stack.extend(children(n))

    def _lexical_declare(self, stmts: list, scope: Scope, exported: bool = False):
        """Binds let/const/class/function declarations directly in stmts."""
        for n in stmts:
            if not isinstance(n, Node):
                continue
            if n.type == "VariableDeclaration" and n.kind in ("let", "const"):
                for d in n.declarations:
                    for ident in _pattern_names(d.id):
                        scope.declare(ident.name, n.kind, ident, exported)
            elif n.type == "FunctionDeclaration" and n.id is not None:
                scope.declare(n.id.name, "function", n.id, exported)
            elif n.type == "ClassDeclaration" and n.id is not None:
                scope.declare(n.id.name, "class", n.id, exported)
            elif n.type in ("ExportNamedDeclaration", "ExportDefaultDeclaration"):
                if n.get("declaration") is not None:
                    self._lexical_declare([n.declaration], scope, exported=True)
            elif n.type == "ImportDeclaration":
                for spec in n.specifiers:
                    scope.declare(spec.local.name, "import", spec.local)
            elif n.type == "LabeledStatement":
                self._lexical_declare([n.body], scope, exported)

    # --- reference resolution ---

    def _stmt(self, node: Node, scope: Scope):
        t = node.type
        if t == "VariableDeclaration":
            for d in node.declarations:
                self._declare_pattern_defaults(d.id, scope)
                if d.init is not None:
                    self._expr(d.init, scope)
            return
        if t == "FunctionDeclaration":
            self._function(node, scope)
            return
        if t in ("ClassDeclaration", "ClassExpression"):
            self._class(node, scope)
            return
        if t == "BlockStatement":
            inner = self._new_scope("block", node, scope)
            self._lexical_declare(node.body, inner)
            for s in node.body:
                self._stmt(s, inner)
            return
        if t == "StaticBlock":
            inner = self._new_scope("function", node, scope)
            self._hoist_vars(node.body, inner)
            self._lexical_declare(node.body, inner)
            for s in node.body:
                self._stmt(s, inner)
            return
        if t == "IfStatement":
            self._expr(node.test, scope)
            self._stmt(node.consequent, scope)
            if node.alternate is not None:
                self._stmt(node.alternate, scope)
            return
        if t in ("WhileStatement", "DoWhileStatement"):
            self._expr(node.test, scope)
            self._stmt(node.body, scope)
            return
        if t == "ForStatement":
            inner = self._new_scope("block", node, scope)
            if node.init is not None:
                if node.init.type == "VariableDeclaration":
                    self._lexical_declare([node.init], inner)
                    self._stmt(node.init, inner)
                else:
                    self._expr(node.init, inner)
            if node.test is not None:
                self._expr(node.test, inner)
            if node.update is not None:
                self._expr(node.update, inner)
            self._stmt(node.body, inner)
            return
        if t in ("ForInStatement", "ForOfStatement"):
            inner = self._new_scope("block", node, scope)
            if node.left.type == "VariableDeclaration":
                self._lexical_declare([node.left], inner)
                for d in node.left.declarations:
                    self._declare_pattern_defaults(d.id, inner)
            else:
                self._assign_target(node.left, inner)
            self._expr(node.right, inner)
            self._stmt(node.body, inner)
            return
        if t == "SwitchStatement":
            self._expr(node.discriminant, scope)
            inner = self._new_scope("block", node, scope)
            all_stmts = [s for c in node.cases for s in c.consequent]
            self._lexical_declare(all_stmts, inner)
            for c in node.cases:
                if c.test is not None:
                    self._expr(c.test, inner)
                for s in c.consequent:
                    self._stmt(s, inner)
            return
        if t == "TryStatement":
            self._stmt(node.block, scope)
            if node.handler is not None:
                catch_scope = self._new_scope("catch", node.handler, scope)
                if node.handler.param is not None:
                    for ident in _pattern_names(node.handler.param):
                        catch_scope.declare(ident.name, "catch", ident)
                    self._declare_pattern_defaults(node.handler.param, catch_scope)
                body = node.handler.body
                self._lexical_declare(body.body, catch_scope)
                for s in body.body:
                    self._stmt(s, catch_scope)
            if node.finalizer is not None:
                self._stmt(node.finalizer, scope)
            return
        if t == "WithStatement":
            self.has_with = True
            self._expr(node.object, scope)
            self.with_depth += 1
            self._stmt(node.body, scope)
            self.with_depth -= 1
            return
        if t == "LabeledStatement":
            self._stmt(node.body, scope)
            return
        if t in ("ReturnStatement", "ThrowStatement"):
            if node.argument is not None:
                self._expr(node.argument, scope)
            return
        if t == "ExpressionStatement":
            self._expr(node.expression, scope)
            return
        if t in ("ImportDeclaration", "EmptyStatement", "DebuggerStatement",
                 "BreakStatement", "ContinueStatement"):
            return
        if t == "ExportNamedDeclaration":
            if node.declaration is not None:
                self._stmt(node.declaration, scope)
            elif node.source is None:
                for spec in node.specifiers:
                    self._reference(spec.local, scope, "read")
            return
        if t == "ExportDefaultDeclaration":
            decl = node.declaration
            if decl.type in ("FunctionDeclaration", "ClassDeclaration"):
                self._stmt(decl, scope)
            else:
                self._expr(decl, scope)
            return
        if t == "ExportAllDeclaration":
            return
        # Fallback: treat remaining statement-position nodes as expressions.
        self._expr(node, scope)

    def _declare_pattern_defaults(self, pattern: Node, scope: Scope):
        """Resolves default-value and computed-key expressions in patterns."""
        stack = [pattern]
        while stack:
            n = stack.pop()
            if n is None or not isinstance(n, Node):
                continue
            if n.type == "AssignmentPattern":
                self._expr(n.right, scope)
                stack.append(n.left)
            elif n.type == "ObjectPattern":
                for p in n.properties:
                    if p.type == "Property":
                        if p.get("computed"):
                            self._expr(p.key, scope)
                        stack.append(p.value)
                    else:
                        stack.append(p.argument)
            elif n.type == "ArrayPattern":
                stack.extend(n.elements)
            elif n.type == "RestElement":
                stack.append(n.argument)

    def _function(self, node: Node, scope: Scope):
        fn_scope = self._new_scope("function", node, scope)
        if node.get("id") is not None and node.type == "FunctionExpression":
            fn_scope.declare(node.id.name, "function", node.id)
        for param in node.params:
            for ident in _pattern_names(param):
                fn_scope.declare(ident.name, "param", ident)
        for param in node.params:
            self._declare_pattern_defaults(param, fn_scope)
        body = node.body
        if body.type == "BlockStatement":
            self._hoist_vars(body.body, fn_scope)
            self._lexical_declare(body.body, fn_scope)
            for s in body.body:
                self._stmt(s, fn_scope)
        else:
            self._expr(body, fn_scope)

    def _class(self, node: Node, scope: Scope):
        if node.get("superClass") is not None:
            self._expr(node.superClass, scope)
        cls_scope = scope
        if node.get("id") is not None and node.type == "ClassExpression":
            cls_scope = self._new_scope("class", node, scope)
            cls_scope.declare(node.id.name, "class", node.id)
        for member in node.body.body:
            if member.type == "StaticBlock":
                self._stmt(member, cls_scope)
                continue
            if member.get("computed"):
                self._expr(member.key, cls_scope)
            if member.type == "MethodDefinition":
                self._function(member.value, cls_scope)
            elif member.get("value") is not None:
                self._expr(member.value, cls_scope)

    def _reference(self, ident: Node, scope: Scope, kind: str):
        ref = Reference(ident, kind, unreliable=self.with_depth > 0)
        binding = scope.lookup(ident.name)
        if binding is not None:
            binding.references.append(ref)
            return
        if kind in ("write", "readwrite"):
            root = scope.hoist_target()
            while root.parent is not None:
                root = root.parent
            kind = "hostglobal" if ident.name in HOST_GLOBALS else "implicit"
            binding = root.declare(ident.name, kind, ident)
            if binding.kind == "implicit" and binding.decl_node is ident:
                self.implicit_globals.append(binding)
            binding.references.append(ref)
        else:
            self.unresolved_reads.append(ref)

    def _assign_target(self, node: Node, scope: Scope, kind: str = "write"):
        """Records writes for assignment-target patterns and expressions."""
        t = node.type
        if t == "Identifier":
            self._reference(node, scope, kind)
        elif t == "MemberExpression" or t == "ChainExpression":
            self._expr(node, scope)
        elif t == "ObjectPattern":
            for p in node.properties:
                if p.type == "Property":
                    if p.get("computed"):
                        self._expr(p.key, scope)
                    self._assign_target(p.value, scope, kind)
                else:
                    self._assign_target(p.argument, scope, kind)
        elif t == "ArrayPattern":
            for el in node.elements:
                if el is not None:
                    self._assign_target(el, scope, kind)
        elif t == "AssignmentPattern":
            self._assign_target(node.left, scope, kind)
            self._expr(node.right, scope)
        elif t == "RestElement":
            self._assign_target(node.argument, scope, kind)
        else:
            self._expr(node, scope)

    def _expr(self, node: Node, scope: Scope):
        t = node.type
        if t == "Identifier":
            self._reference(node, scope, "read")
            return
        if t in FUNCTION_TYPES:
            self._function(node, scope)
            return
        if t in ("ClassExpression", "ClassDeclaration"):
            self._class(node, scope)
            return
        if t == "AssignmentExpression":
            if node.operator == "=":
                self._assign_target(node.left, scope)
            else:
                self._assign_target(node.left, scope, "readwrite")
            self._expr(node.right, scope)
            return
        if t == "UpdateExpression":
            self._assign_target(node.argument, scope, "readwrite")
            return
        if t == "MemberExpression":
            self._expr(node.object, scope)
            if node.get("computed"):
                self._expr(node.property, scope)
            return
        if t == "Property":
            if node.get("computed"):
                self._expr(node.key, scope)
            self._expr(node.value, scope)
            return
        for child in children(node):
            self._expr(child, scope)


def build_scope_table(tree: SyntaxTree) -> ScopeTable:
    """Builds the scope/binding table for one parsed unit."""
    return _ScopeBuilder(tree).build()
