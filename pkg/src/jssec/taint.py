"""Intraprocedural taint heuristic: tracks attacker-influenced values to sinks."""
from __future__ import annotations

from dataclasses import dataclass

from .nodes import (
    FUNCTION_TYPES,
    Node,
    children,
    member_path,
    unwrap_chain,
)

# Member-path prefixes stripped before source matching.
_GLOBAL_ALIASES = {"window", "globalThis", "self", "top", "parent"}

_DOCUMENT_SOURCES = {"URL", "documentURI", "cookie", "referrer", "baseURI"}
_REQUEST_NAMES = {"req", "request"}
_REQUEST_PROPS = {"query", "params", "body", "headers", "files", "cookies"}

# Methods whose result keeps the taint of the receiver.
_STRING_METHODS = {
    "concat", "slice", "substring", "substr", "trim", "trimStart", "trimEnd",
    "toString", "toLowerCase", "toUpperCase", "replace", "replaceAll", "split",
    "join", "charAt", "padStart", "padEnd", "repeat", "normalize", "at", "get",
}

# Call results that are plain numbers/booleans, never attacker-controlled text.
_NUMERIC_CALLEES = {"parseint", "parsefloat", "number", "boolean", "isnan"}

# A callee whose lowercased name contains one of these is treated as a sanitizer.
_SANITIZER_TOKENS = ("escape", "sanitiz", "valid", "purify", "encodeuri", "htmlencode", "clean")

_DOM_GETTERS = {
    "getElementById", "querySelector", "querySelectorAll",
    "getElementsByName", "getElementsByClassName", "getElementsByTagName",
}
_DOM_VALUE_PROPS = {"value", "files", "checked"}

_MARKER_DOM = "#dom-element"
_MARKER_EVENT = "#message-event"


@dataclass(frozen=True)
class TaintHop:
    start: int
    end: int
    description: str


@dataclass(frozen=True)
class TaintInfo:
    description: str
    kind: str
    start: int
    end: int
    hops: tuple[TaintHop, ...] = ()

    @property
    def is_marker(self) -> bool:
        return self.kind.startswith("#")


def is_sanitizer_name(name: str | None, tokens: tuple[str, ...] | list[str] | None = None) -> bool:
    if not name:
        return False
    low = name.lower()
    return any(tok in low for tok in (tokens or _SANITIZER_TOKENS))


def _strip_global_prefix(path: list[str]) -> list[str]:
    while len(path) > 1 and path[0] in _GLOBAL_ALIASES:
        path = path[1:]
    return path


def _callee_terminal_name(callee) -> str | None:
    callee = unwrap_chain(callee)
    if callee.type == "Identifier":
        return callee.name
    if callee.type == "MemberExpression":
        prop = callee.property
        if not callee.computed and prop.type == "Identifier":
            return prop.name
    return None


class FunctionTaint:
    """Taint facts for one function body (or the top level of a unit)."""

    def __init__(self, body: Node, seeds: dict[str, str] | None = None,
                 sanitizers: list[str] | None = None,
                 upload_fields: list[str] | None = None):
        self._node_taint: dict[int, TaintInfo] = {}
        self._env: dict[str, TaintInfo] = {}
        self._sanitizers = sanitizers
        self._upload_props = set(upload_fields or ())
        if seeds:
            for name, kind in seeds.items():
                self._env[name] = TaintInfo(name, kind, body.start, body.start)
        self._exec(body)

    def taint_of(self, node: Node) -> TaintInfo | None:
        info = self._node_taint.get(id(node))
        if info is not None and not info.is_marker:
            return info
        return None

    # -- statement walk (single forward pass, branches share one env) --

    def _exec(self, node: Node | None) -> None:
        if node is None or not isinstance(node, Node):
            return
        t = node.type
        if t in FUNCTION_TYPES or t in ("ClassDeclaration", "ClassExpression"):
            return
        if t == "VariableDeclaration":
            for decl in node.declarations:
                init = decl.get("init")
                info = self._eval(init) if init is not None else None
                if info is not None:
                    self._bind_pattern(decl.id, info, decl)
            return
        if t == "ExpressionStatement":
            self._eval(node.expression)
            return
        if t in ("ForInStatement", "ForOfStatement"):
            right = self._eval(node.right)
            if right is not None and not right.is_marker:
                target = node.left
                if target.type == "VariableDeclaration":
                    target = target.declarations[0].id
                self._bind_pattern(target, right, node.left)
            self._exec(node.body)
            return
        if t.endswith("Statement") or t.endswith("Declaration") \
                or t in ("Program", "SwitchCase", "CatchClause"):
            for child in children(node):
                self._exec(child)
            return
        self._eval(node)

    def _bind_pattern(self, target: Node, info: TaintInfo, at: Node) -> None:
        if target.type == "Identifier":
            hop = TaintHop(at.start, at.end, f"flows into '{target.name}'")
            self._env[target.name] = TaintInfo(
                info.description, info.kind, info.start, info.end, info.hops + (hop,))
            return
        for child in children(target):
            self._bind_pattern(child, info, at)

    # -- expression evaluation --

    def _eval(self, node: Node | None) -> TaintInfo | None:
        if node is None or not isinstance(node, Node):
            return None
        node = unwrap_chain(node)
        info = self._eval_inner(node)
        if info is not None:
            self._node_taint[id(node)] = info
        return info

    def _eval_inner(self, node: Node) -> TaintInfo | None:
        t = node.type
        if t == "Identifier":
            if node.name == "location":
                return TaintInfo("location", "location", node.start, node.end,
                                 (TaintHop(node.start, node.end, "source: location"),))
            return self._env.get(node.name)
        if t == "MemberExpression":
            return self._member(node)
        if t in ("CallExpression", "NewExpression"):
            return self._call(node)
        if t == "AssignmentExpression":
            rhs = self._eval(node.right)
            if node.operator in ("+=", "||=", "??=") and rhs is None:
                rhs = self._eval(node.left)
            if rhs is not None and node.left.type == "Identifier":
                self._bind_pattern(node.left, rhs, node)
            return rhs
        if t == "BinaryExpression":
            left, right = self._eval(node.left), self._eval(node.right)
            if node.operator == "+":
                return self._first_tainted(left, right)
            return None
        if t in ("LogicalExpression", "ConditionalExpression", "SequenceExpression"):
            parts = [self._eval(c) for c in children(node)]
            return self._first_tainted(*parts)
        if t == "TemplateLiteral":
            parts = [self._eval(e) for e in node.expressions]
            return self._first_tainted(*parts)
        if t == "TaggedTemplateExpression":
            return self._eval(node.quasi)
        if t in ("AwaitExpression", "SpreadElement"):
            return self._eval(node.argument)
        if t == "ArrayExpression":
            parts = [self._eval(e) for e in node.elements if e is not None]
            return self._first_tainted(*parts)
        if t == "ObjectExpression":
            parts = [self._eval(p.value) for p in node.properties if p.type == "Property"]
            return self._first_tainted(*parts)
        if t in FUNCTION_TYPES:
            return None
        for child in children(node):
            self._eval(child)
        return None

    def _first_tainted(self, *infos: TaintInfo | None) -> TaintInfo | None:
        for info in infos:
            if info is not None and not info.is_marker:
                return info
        return None

    def _member(self, node: Node) -> TaintInfo | None:
        path = member_path(node)
        if path:
            path = _strip_global_prefix(path)
            src = self._source_for_path(path)
            if src is not None:
                desc, kind = src
                return TaintInfo(desc, kind, node.start, node.end,
                                 (TaintHop(node.start, node.end, f"source: {desc}"),))
        obj = self._eval(node.object)
        prop = node.property
        prop_name = prop.name if (not node.computed and prop.type == "Identifier") else None
        if obj is None and prop_name in self._upload_props:
            desc = f"uploaded file .{prop_name}"
            return TaintInfo(desc, "upload", node.start, node.end,
                             (TaintHop(node.start, node.end, f"source: {desc}"),))
        if obj is not None:
            if obj.kind == _MARKER_DOM:
                if prop_name in _DOM_VALUE_PROPS:
                    desc = f"DOM input .{prop_name}"
                    return TaintInfo(desc, "dom-value", node.start, node.end,
                                     (TaintHop(node.start, node.end, f"source: {desc}"),))
                return obj
            if obj.kind == _MARKER_EVENT:
                if prop_name == "data":
                    desc = "message event data"
                    return TaintInfo(desc, "message-data", node.start, node.end,
                                     (TaintHop(node.start, node.end, f"source: {desc}"),))
                return None
            return obj
        if node.computed:
            self._eval(prop)
        return None

    def _source_for_path(self, path: list[str]) -> tuple[str, str] | None:
        if path[0] == "location":
            return ".".join(path), "location"
        if path[0] == "document" and len(path) > 1:
            if path[1] == "location":
                return ".".join(path), "location"
            if path[1] in _DOCUMENT_SOURCES:
                kind = "cookie" if path[1] == "cookie" else "document"
                return f"document.{path[1]}", kind
        if path[0] in _REQUEST_NAMES and len(path) > 1 and path[1] in _REQUEST_PROPS:
            kind = "cookie" if path[1] == "cookies" else "request"
            return f"{path[0]}.{path[1]}", kind
        return None

    def _call(self, node: Node) -> TaintInfo | None:
        callee = unwrap_chain(node.callee)
        path = member_path(callee)
        if path:
            stripped = _strip_global_prefix(path)
            if stripped[0] == "document" and len(stripped) == 2 and stripped[1] in _DOM_GETTERS:
                for arg in node.arguments:
                    self._eval(arg)
                return TaintInfo("DOM element", _MARKER_DOM, node.start, node.end)
        name = _callee_terminal_name(callee)
        arg_infos = [self._eval(arg) for arg in node.arguments]
        if is_sanitizer_name(name, self._sanitizers):
            return None
        if name and name.lower() in _NUMERIC_CALLEES:
            return None
        if callee.type == "MemberExpression":
            base = self._node_taint.get(id(unwrap_chain(callee.object)))
            if base is None:
                base = self._eval(callee.object)
            if base is not None and not base.is_marker and name in _STRING_METHODS:
                return base
        else:
            self._eval(callee)
        return self._first_tainted(*arg_infos)


def analyze_function(body: Node, seeds: dict[str, str] | None = None,
                     sanitizers: list[str] | None = None,
                     upload_fields: list[str] | None = None) -> FunctionTaint:
    """Run the forward taint pass over one function body or program."""
    return FunctionTaint(body, seeds, sanitizers, upload_fields)


def message_event_seeds(handler: Node) -> dict[str, str]:
    """Seed map marking a message handler's event parameter."""
    params = handler.get("params") or []
    if params and params[0].type == "Identifier":
        return {params[0].name: _MARKER_EVENT}
    return {}
