"""Size and structure metrics: logical LOC, parameters, callback nesting,
object member counts and the cross-unit prototype graph."""
from __future__ import annotations

import bisect
from dataclasses import dataclass, field

from .nodes import (
    FUNCTION_TYPES,
    Node,
    children,
    member_path,
    property_name,
    unwrap_chain,
    walk,
    walk_with_parents,
)
from .parser import SyntaxTree
from .scopes import ScopeTable
from .source import LineMap, SourceUnit


@dataclass
class FunctionMetrics:
    node: Node
    name: str
    logical_loc: int
    parameter_count: int


@dataclass
class ObjectMetrics:
    node: Node
    name: str
    kind: str  # literal | constructor | class
    member_count: int


@dataclass
class CallbackChain:
    depth: int
    innermost: Node  # deepest callback function in the chain
    root_call: Node


class _TokenLines:
    """Answers 'how many source lines carry at least one token' per span.

    Comment text never counts: the tokenizer already keeps comments separate.
    Multi-line tokens (template literals) count every line they cover.
    """

    def __init__(self, tree: SyntaxTree, text: str):
        lm = LineMap(text)
        self.starts: list[int] = []
        self.ranges: list[tuple[int, int]] = []
        for tok in tree.tokens:
            if tok.kind == "EOF":
                continue
            sl, _ = lm.linecol(tok.start)
            el, _ = lm.linecol(max(tok.end - 1, tok.start))
            self.starts.append(tok.start)
            self.ranges.append((sl, el))

    def logical_loc(self, start: int, end: int) -> int:
        lines: set[int] = set()
        i = bisect.bisect_left(self.starts, start)
        while i < len(self.starts) and self.starts[i] < end:
            sl, el = self.ranges[i]
            lines.update(range(sl, el + 1))
            i += 1
        return len(lines)


def function_name(node: Node, parents: list[Node]) -> str:
    """Best-effort display name for a function-like node."""
    if node.get("id") is not None:
        return node.id.name
    if parents:
        p = parents[-1]
        if p.type == "VariableDeclarator" and p.id.type == "Identifier":
            return p.id.name
        if p.type == "AssignmentExpression":
            path = member_path(p.left)
            if path:
                return ".".join(path)
            if p.left.type == "Identifier":
                return p.left.name
        if p.type in ("Property", "MethodDefinition", "PropertyDefinition"):
            name = property_name(p.key)
            if name:
                return name
        if p.type == "ExportDefaultDeclaration":
            return "default"
    return "<anonymous>"


def measure_functions(tree: SyntaxTree, unit: SourceUnit) -> list[FunctionMetrics]:
    """Per-function logical LOC and parameter counts.

    Every parameter counts as one, including rest and destructured params.
    """
    token_lines = _TokenLines(tree, unit.text)
    out: list[FunctionMetrics] = []
    for node, parents in walk_with_parents(tree.root):
        if node.type not in FUNCTION_TYPES:
            continue
        out.append(
            FunctionMetrics(
                node=node,
                name=function_name(node, parents),
                logical_loc=token_lines.logical_loc(node.start, node.end),
                parameter_count=len(node.params),
            )
        )
    return out


def unit_logical_loc(tree: SyntaxTree, unit: SourceUnit) -> int:
    """Lines in the unit carrying at least one non-comment token."""
    return _TokenLines(tree, unit.text).logical_loc(0, len(unit.text) + 1)


# --- callback nesting ---


def _call_like(node: Node) -> bool:
    return node.type in ("CallExpression", "NewExpression")


def _chain_base_call(call: Node) -> Node | None:
    """The call at the base of a member chain, as in p.then(f).then(g)."""
    cur = unwrap_chain(unwrap_chain(call).callee)
    while cur.type == "MemberExpression":
        cur = unwrap_chain(cur.object)
    if _call_like(cur):
        return cur
    return None


def _direct_calls(fn_body: Node) -> list[Node]:
    """Call expressions whose nearest enclosing function is this one."""
    out = []
    stack = [fn_body]
    while stack:
        n = stack.pop()
        if _call_like(n):
            out.append(n)
        for c in children(n):
            if c.type not in FUNCTION_TYPES:
                stack.append(c)
    out.sort(key=lambda n: n.start)
    return out


def _call_depth(call: Node, memo: dict) -> tuple[int, Node | None]:
    """Depth of the callback chain rooted at this call and its deepest
    callback; chained member calls extend the chain of their base call."""
    key = id(call)
    if key in memo:
        return memo[key]
    base_depth = 0
    base_inner: Node | None = None
    base = _chain_base_call(call)
    if base is not None:
        base_depth, base_inner = _call_depth(base, memo)
    best = 0
    best_inner: Node | None = None
    for arg in call.arguments:
        fn = arg.argument if arg.type == "SpreadElement" else arg
        if fn.type not in FUNCTION_TYPES:
            continue
        inner_best = 0
        inner_node: Node | None = None
        body = fn.body
        for c in _direct_calls(body):
            d, node = _call_depth(c, memo)
            if d > inner_best:
                inner_best = d
                inner_node = node
        cand = 1 + inner_best
        if cand > best:
            best = cand
            best_inner = inner_node if inner_node is not None else fn
    depth = base_depth + best
    inner = best_inner if best_inner is not None else base_inner
    memo[key] = (depth, inner)
    return memo[key]


def callback_chains(tree: SyntaxTree) -> list[CallbackChain]:
    """Maximal callback chains in a unit, each with its innermost callback.

    A callback is a function expression passed as a call argument; chained
    member calls (promise .then chains) each contribute one level.
    """
    all_calls = [n for n in walk(tree.root) if _call_like(n)]
    chain_bases = set()
    for call in all_calls:
        base = _chain_base_call(call)
        if base is not None:
            chain_bases.add(id(base))
    # Calls inside callback functions are folded into their parents' depth.
    inside_callback: set[int] = set()
    for call in all_calls:
        for arg in call.arguments:
            fn = arg.argument if arg.type == "SpreadElement" else arg
            if fn.type in FUNCTION_TYPES:
                for sub in walk(fn):
                    if _call_like(sub):
                        inside_callback.add(id(sub))
    memo: dict = {}
    out = []
    for call in all_calls:
        if id(call) in chain_bases or id(call) in inside_callback:
            continue
        depth, inner = _call_depth(call, memo)
        if depth >= 1 and inner is not None:
            out.append(CallbackChain(depth=depth, innermost=inner, root_call=call))
    out.sort(key=lambda c: c.root_call.start)
    return out


# --- object metrics ---


def _assignment_paths(tree: SyntaxTree) -> list[tuple[list[str], Node, Node]]:
    """All (member path, value, assignment node) triples in the unit."""
    out = []
    for node in walk(tree.root):
        if node.type == "AssignmentExpression" and node.operator == "=":
            path = member_path(node.left)
            if path:
                out.append((path, node.right, node))
    return out


def measure_objects(tree: SyntaxTree, scopes: ScopeTable) -> list[ObjectMetrics]:
    """Member counts for object literals, constructor functions and classes.

    Members statically attached later (prototype assignments, this.x writes
    in a constructor body) count toward the owning object; spreads do not.
    """
    out: list[ObjectMetrics] = []
    assignments = _assignment_paths(tree)

    proto_members: dict[str, set[str]] = {}
    proto_literals: dict[str, Node] = {}
    for path, value, _node in assignments:
        if len(path) == 3 and path[1] == "prototype":
            proto_members.setdefault(path[0], set()).add(path[2])
        elif len(path) == 2 and path[1] == "prototype" and value.type == "ObjectExpression":
            proto_literals[path[0]] = value
            for p in value.properties:
                if p.type == "Property":
                    name = property_name(p.key)
                    if name:
                        proto_members.setdefault(path[0], set()).add(name)

    literal_nodes = set()
    for node, parents in walk_with_parents(tree.root):
        if node.type == "ObjectExpression" and id(node) not in literal_nodes:
            literal_nodes.add(id(node))
            count = sum(1 for p in node.properties if p.type == "Property")
            out.append(
                ObjectMetrics(node=node, name=function_name(node, parents),
                              kind="literal", member_count=count)
            )
        elif node.type in ("FunctionDeclaration", "FunctionExpression"):
            this_props = _this_assigned_names(node)
            if not this_props:
                continue
            name = function_name(node, parents)
            members = set(this_props)
            members |= proto_members.get(name, set())
            out.append(
                ObjectMetrics(node=node, name=name, kind="constructor",
                              member_count=len(members))
            )
        elif node.type in ("ClassDeclaration", "ClassExpression"):
            members: set[str] = set()
            ctor_body = None
            for m in node.body.body:
                if m.type == "MethodDefinition" and m.kind == "constructor":
                    ctor_body = m.value
                    continue
                if m.type in ("MethodDefinition", "PropertyDefinition"):
                    key_name = property_name(m.key)
                    members.add(key_name if key_name else f"<computed@{m.start}>")
            if ctor_body is not None:
                members |= set(_this_assigned_names(ctor_body))
            name = node.id.name if node.get("id") else function_name(node, parents)
            members |= proto_members.get(name, set())
            out.append(
                ObjectMetrics(node=node, name=name, kind="class",
                              member_count=len(members))
            )
    out.sort(key=lambda m: m.node.start)
    return out


def _this_assigned_names(fn: Node) -> list[str]:
    """Distinct property names assigned to `this` within one function body."""
    names: set[str] = set()
    body = fn.body
    if body.type != "BlockStatement":
        return []
    stack: list[Node] = [body]
    while stack:
        n = stack.pop()
        if n.type == "AssignmentExpression":
            left = unwrap_chain(n.left)
            if left.type == "MemberExpression" and \
                    unwrap_chain(left.object).type == "ThisExpression":
                name = None if left.get("computed") else property_name(left.property)
                if name:
                    names.add(name)
        for c in children(n):
            if c.type not in ("FunctionDeclaration", "FunctionExpression"):
                stack.append(c)
    return sorted(names)


# --- prototype graph ---


@dataclass
class ProtoNode:
    name: str
    unit_id: str
    path: str
    node: Node


@dataclass
class PrototypeGraph:
    nodes: dict[str, ProtoNode] = field(default_factory=dict)
    parents: dict[str, str] = field(default_factory=dict)  # child -> parent name
    unknown_parents: list[tuple[str, str]] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def chain_depth(self, name: str) -> int:
        """Inheritance edges reachable from name (a lone type has depth 0)."""
        depth = 0
        seen = {name}
        cur = self.parents.get(name)
        while cur is not None:
            depth += 1
            if cur in seen:
                self.warnings.append(f"prototype cycle involving '{cur}'")
                break
            seen.add(cur)
            cur = self.parents.get(cur)
        return depth


def _parent_name(node: Node) -> str | None:
    """Name of a parent reference: identifier, dotted path, or X.prototype."""
    node = unwrap_chain(node)
    path = member_path(node)
    if not path:
        return None
    if path[-1] == "prototype":
        path = path[:-1]
    return ".".join(path) if path else None


def build_prototype_graph(
    units: list[tuple[SourceUnit, SyntaxTree, ScopeTable]]
) -> PrototypeGraph:
    """Merges inheritance edges from all units into one named graph.

    Edges come from class extends clauses, X.prototype = Object.create(
    Y.prototype), Object.setPrototypeOf(X, Y) and X.prototype = new Y().
    Only parents resolvable by name in some unit become edges.
    """
    graph = PrototypeGraph()

    def ensure_node(name: str, unit: SourceUnit, node: Node):
        if name not in graph.nodes:
            graph.nodes[name] = ProtoNode(name=name, unit_id=unit.unit_id,
                                          path=unit.path, node=node)

    for unit, tree, _scopes in units:
        for node, parents_list in walk_with_parents(tree.root):
            t = node.type
            if t in ("ClassDeclaration", "ClassExpression"):
                name = node.id.name if node.get("id") else None
                if name is None and parents_list:
                    p = parents_list[-1]
                    if p.type == "VariableDeclarator" and p.id.type == "Identifier":
                        name = p.id.name
                if name is None:
                    continue
                ensure_node(name, unit, node)
                if node.get("superClass") is not None:
                    pname = _parent_name(node.superClass)
                    if pname:
                        graph.parents[name] = pname
                    else:
                        graph.unknown_parents.append((name, unit.unit_id))
            elif t == "FunctionDeclaration" and node.get("id"):
                ensure_node(node.id.name, unit, node)
            elif t == "VariableDeclarator" and node.id.type == "Identifier" \
                    and node.get("init") is not None \
                    and node.init.type == "FunctionExpression":
                ensure_node(node.id.name, unit, node)

    for unit, tree, _scopes in units:
        for node in walk(tree.root):
            if node.type == "AssignmentExpression" and node.operator == "=":
                path = member_path(node.left)
                if path and len(path) == 2 and path[1] == "prototype":
                    child = path[0]
                    right = unwrap_chain(node.right)
                    pname = None
                    if right.type == "CallExpression":
                        cpath = member_path(right.callee)
                        if cpath == ["Object", "create"] and right.arguments:
                            pname = _parent_name(right.arguments[0])
                    elif right.type == "NewExpression":
                        pname = _parent_name(right.callee)
                    if pname:
                        ensure_node(child, unit, node)
                        graph.parents[child] = pname
            elif node.type == "CallExpression":
                cpath = member_path(node.callee)
                if cpath == ["Object", "setPrototypeOf"] and len(node.arguments) >= 2:
                    child = _parent_name(node.arguments[0])
                    pname = _parent_name(node.arguments[1])
                    if child and pname:
                        ensure_node(child, unit, node)
                        graph.parents[child] = pname

    # Parents that never resolve to a known node are recorded, not traversed.
    for child, parent in list(graph.parents.items()):
        if parent not in graph.nodes:
            graph.unknown_parents.append((child, graph.nodes[child].unit_id))
            del graph.parents[child]
    return graph
