"""Syntax tree nodes in an ESTree-like shape, plus traversal helpers."""
from __future__ import annotations

from typing import Iterator


class Node:
    """One syntax node; ``type`` names the grammar production, spans are
    character offsets into the unit text."""

    def __init__(self, type: str, start: int, end: int, **fields):
        self.type = type
        self.start = start
        self.end = end
        self.__dict__.update(fields)

    def get(self, name: str, default=None):
        return self.__dict__.get(name, default)

    def __repr__(self):
        return f"<{self.type} {self.start}:{self.end}>"


# Child field names per node type, in source order.
VISITOR_KEYS: dict[str, tuple[str, ...]] = {
    "Program": ("body",),
    "ExpressionStatement": ("expression",),
    "BlockStatement": ("body",),
    "StaticBlock": ("body",),
    "EmptyStatement": (),
    "DebuggerStatement": (),
    "WithStatement": ("object", "body"),
    "ReturnStatement": ("argument",),
    "LabeledStatement": ("label", "body"),
    "BreakStatement": ("label",),
    "ContinueStatement": ("label",),
    "IfStatement": ("test", "consequent", "alternate"),
    "SwitchStatement": ("discriminant", "cases"),
    "SwitchCase": ("test", "consequent"),
    "ThrowStatement": ("argument",),
    "TryStatement": ("block", "handler", "finalizer"),
    "CatchClause": ("param", "body"),
    "WhileStatement": ("test", "body"),
    "DoWhileStatement": ("body", "test"),
    "ForStatement": ("init", "test", "update", "body"),
    "ForInStatement": ("left", "right", "body"),
    "ForOfStatement": ("left", "right", "body"),
    "FunctionDeclaration": ("id", "params", "body"),
    "FunctionExpression": ("id", "params", "body"),
    "ArrowFunctionExpression": ("params", "body"),
    "VariableDeclaration": ("declarations",),
    "VariableDeclarator": ("id", "init"),
    "Identifier": (),
    "PrivateIdentifier": (),
    "Literal": (),
    "TemplateLiteral": ("quasis", "expressions"),
    "TemplateElement": (),
    "TaggedTemplateExpression": ("tag", "quasi"),
    "ThisExpression": (),
    "Super": (),
    "ArrayExpression": ("elements",),
    "ObjectExpression": ("properties",),
    "Property": ("key", "value"),
    "ClassDeclaration": ("id", "superClass", "body"),
    "ClassExpression": ("id", "superClass", "body"),
    "ClassBody": ("body",),
    "MethodDefinition": ("key", "value"),
    "PropertyDefinition": ("key", "value"),
    "UnaryExpression": ("argument",),
    "UpdateExpression": ("argument",),
    "BinaryExpression": ("left", "right"),
    "AssignmentExpression": ("left", "right"),
    "LogicalExpression": ("left", "right"),
    "MemberExpression": ("object", "property"),
    "ConditionalExpression": ("test", "consequent", "alternate"),
    "CallExpression": ("callee", "arguments"),
    "NewExpression": ("callee", "arguments"),
    "SequenceExpression": ("expressions",),
    "SpreadElement": ("argument",),
    "RestElement": ("argument",),
    "ArrayPattern": ("elements",),
    "ObjectPattern": ("properties",),
    "AssignmentPattern": ("left", "right"),
    "YieldExpression": ("argument",),
    "AwaitExpression": ("argument",),
    "ImportDeclaration": ("specifiers", "source"),
    "ImportSpecifier": ("imported", "local"),
    "ImportDefaultSpecifier": ("local",),
    "ImportNamespaceSpecifier": ("local",),
    "ExportNamedDeclaration": ("declaration", "specifiers", "source"),
    "ExportDefaultDeclaration": ("declaration",),
    "ExportAllDeclaration": ("exported", "source"),
    "ExportSpecifier": ("local", "exported"),
    "ImportExpression": ("source",),
    "MetaProperty": ("meta", "property"),
    "ChainExpression": ("expression",),
}

FUNCTION_TYPES = frozenset(
    ["FunctionDeclaration", "FunctionExpression", "ArrowFunctionExpression"]
)


def children(node: Node) -> Iterator[Node]:
    """Yields direct child nodes in source order, without duplicates."""
    if node.type == "Property" and node.get("shorthand"):
        yield node.value
        return
    if node.type == "TemplateLiteral":
        parts = [q for q in node.quasis] + [e for e in node.expressions]
        parts.sort(key=lambda n: n.start)
        yield from parts
        return
    seen: set[int] = set()
    for key in VISITOR_KEYS.get(node.type, ()):
        val = node.get(key)
        if isinstance(val, Node):
            if id(val) not in seen:
                seen.add(id(val))
                yield val
        elif isinstance(val, list):
            for item in val:
                if isinstance(item, Node) and id(item) not in seen:
                    seen.add(id(item))
                    yield item


def walk(node: Node) -> Iterator[Node]:
    """Preorder traversal of the subtree rooted at ``node``."""
    stack = [node]
    while stack:
        n = stack.pop()
        yield n
        stack.extend(reversed(list(children(n))))


def walk_with_parents(node: Node) -> Iterator[tuple[Node, list[Node]]]:
    """Preorder traversal yielding (node, ancestor list from root)."""
    stack: list[tuple[Node, list[Node]]] = [(node, [])]
    while stack:
        n, parents = stack.pop()
        yield n, parents
        child_parents = parents + [n]
        stack.extend((c, child_parents) for c in reversed(list(children(n))))


def walk_same_function(body: Node) -> Iterator[Node]:
    """Walks a function body without descending into nested functions."""
    stack = [body]
    while stack:
        n = stack.pop()
        yield n
        for c in children(n):
            if c.type not in FUNCTION_TYPES:
                stack.append(c)


def is_string_literal(node: Node) -> bool:
    return node.type == "Literal" and isinstance(node.get("value"), str)


def is_constant_string(node: Node) -> bool:
    """String literal or template with no interpolated expressions."""
    if is_string_literal(node):
        return True
    return node.type == "TemplateLiteral" and not node.expressions


def constant_string_value(node: Node) -> str | None:
    if is_string_literal(node):
        return node.value
    if node.type == "TemplateLiteral" and not node.expressions:
        return node.quasis[0].get("cooked")
    return None


def unwrap_chain(node: Node) -> Node:
    return node.expression if node.type == "ChainExpression" else node


def member_path(node: Node) -> list[str] | None:
    """Flattens a member/identifier chain into name segments.

    ``a.b["c"]`` becomes ["a", "b", "c"]; returns None when the base is not a
    plain identifier chain (calls, this, computed non-literal keys).
    """
    node = unwrap_chain(node)
    parts: list[str] = []
    while node.type == "MemberExpression":
        prop = node.property
        if node.get("computed"):
            if is_string_literal(prop):
                parts.append(prop.value)
            else:
                return None
        elif prop.type in ("Identifier", "PrivateIdentifier"):
            parts.append(prop.name)
        else:
            return None
        node = unwrap_chain(node.object)
    if node.type == "Identifier":
        parts.append(node.name)
    elif node.type == "ThisExpression":
        parts.append("this")
    else:
        return None
    parts.reverse()
    return parts


def callee_path(call: Node) -> list[str] | None:
    """Member path of a call's callee, or None for non-path callees."""
    return member_path(unwrap_chain(call).callee)


def property_name(node: Node) -> str | None:
    """Static name of a property key / member property, else None."""
    if node.type in ("Identifier", "PrivateIdentifier"):
        return node.get("name")
    if is_string_literal(node):
        return node.value
    if node.type == "Literal" and isinstance(node.get("value"), (int, float)):
        v = node.value
        return str(int(v)) if isinstance(v, float) and v.is_integer() else str(v)
    return None


def member_property_name(node: Node) -> str | None:
    """Property name of a member expression (literal key if computed)."""
    node = unwrap_chain(node)
    if node.type != "MemberExpression":
        return None
    if node.get("computed"):
        return property_name(node.property) if node.property.type == "Literal" else None
    return property_name(node.property)


def name_segments(name: str) -> list[str]:
    """Splits an identifier into lowercase words on case/underscore breaks.

    Needed so trigger words match whole segments only: "apiKey" yields
    ["api", "key"] but "monkey" stays ["monkey"].
    """
    out: list[str] = []
    word = ""
    prev_lower = False
    for c in name:
        if c in "_-$. ":
            if word:
                out.append(word.lower())
            word = ""
            prev_lower = False
        elif c.isupper() and prev_lower:
            out.append(word.lower())
            word = c
            prev_lower = False
        else:
            word += c
            prev_lower = c.islower() or c.isdigit()
    if word:
        out.append(word.lower())
    return out
