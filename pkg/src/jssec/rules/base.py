"""Shared per-unit/per-run context handed to every rule check."""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..catalog import get_rule
from ..config import AnalyzerConfig
from ..findings import Finding, Severity, TaintStep
from ..metrics import PrototypeGraph
from ..nodes import (
    FUNCTION_TYPES,
    Node,
    children,
    constant_string_value,
    is_constant_string,
    member_path,
    name_segments,
    unwrap_chain,
    walk,
)
from ..parser import SyntaxTree
from ..scopes import ScopeTable
from ..source import SourceUnit
from ..taint import FunctionTaint, TaintInfo, analyze_function, message_event_seeds

_GLOBAL_ALIASES = {"window", "globalThis", "self", "top", "parent"}


def strip_global_aliases(path: list[str]) -> list[str]:
    while len(path) > 1 and path[0] in _GLOBAL_ALIASES:
        path = path[1:]
    return path


def normalized_callee_path(node: Node) -> list[str] | None:
    """Dotted callee path with window/globalThis prefixes removed."""
    path = member_path(unwrap_chain(node))
    return strip_global_aliases(path) if path else None


class UnitContext:
    """Everything a unit-scoped rule may inspect for one source unit."""

    def __init__(self, unit: SourceUnit, tree: SyntaxTree, scopes: ScopeTable,
                 cfg: AnalyzerConfig):
        self.unit = unit
        self.tree = tree
        self.scopes = scopes
        self.cfg = cfg
        self._parents: dict[int, Node] = {}
        for node in walk(tree.root):
            for child in children(node):
                self._parents.setdefault(id(child), node)
        self._taints: dict[int, FunctionTaint] = {}
        self._handlers: set[int] | None = None
        self._ref_bindings: dict[int, object] | None = None

    def parent(self, node: Node) -> Node | None:
        return self._parents.get(id(node))

    def ancestors(self, node: Node):
        cur = self.parent(node)
        while cur is not None:
            yield cur
            cur = self.parent(cur)

    def enclosing_function(self, node: Node) -> Node | None:
        for anc in self.ancestors(node):
            if anc.type in FUNCTION_TYPES:
                return anc
        return None

    def binding_of(self, ref_node: Node):
        """The binding a reference identifier resolved to, if any."""
        if self._ref_bindings is None:
            self._ref_bindings = {}
            for scope in self.scopes.scopes:
                for binding in scope.bindings.values():
                    for ref in binding.references:
                        self._ref_bindings[id(ref.node)] = binding
        return self._ref_bindings.get(id(ref_node))

    def message_handlers(self) -> set[int]:
        """ids of function nodes registered as cross-origin message handlers."""
        if self._handlers is None:
            self._handlers = set()
            for node in walk(self.tree.root):
                fn = registered_message_handler(node, self)
                if fn is not None:
                    self._handlers.add(id(fn))
        return self._handlers

    def taint_for(self, node: Node) -> FunctionTaint:
        """Taint table of the function owning node (or of the top level)."""
        owner = node if node.type in FUNCTION_TYPES else self.enclosing_function(node)
        body = owner.body if owner is not None else self.tree.root
        key = id(body)
        if key not in self._taints:
            seeds = None
            if owner is not None and id(owner) in self.message_handlers():
                seeds = message_event_seeds(owner)
            self._taints[key] = analyze_function(
                body, seeds,
                sanitizers=self.cfg.pattern("sanitizers"),
                upload_fields=self.cfg.pattern("upload_fields"))
        return self._taints[key]

    def taint_of(self, node: Node) -> TaintInfo | None:
        return self.taint_for(node).taint_of(node)

    def finding(self, rule_id: str, start: int, end: int, message: str,
                severity: Severity | None = None, notes: list[str] | None = None,
                taint: TaintInfo | None = None, sink_label: str | None = None) -> Finding:
        info = get_rule(rule_id)
        chain = []
        if taint is not None:
            for hop in taint.hops:
                chain.append(TaintStep(self.unit.span(hop.start, hop.end), hop.description))
            if sink_label:
                chain.append(TaintStep(self.unit.span(start, end), f"sink: {sink_label}"))
        return Finding(
            rule_id=rule_id,
            severity=severity or info.severity,
            message=message,
            path=self.unit.path,
            unit_id=self.unit.unit_id,
            span=self.unit.span(start, end),
            cwe_ids=info.cwe_ids,
            owasp_category=info.owasp,
            refactoring_hint=info.hint,
            taint_chain=chain,
            notes=list(notes or ()),
        )


def make_raw_finding(rule_id: str, path: str, unit_id: str, span,
                     message: str, severity: Severity | None = None,
                     notes: list[str] | None = None) -> Finding:
    """Finding for file-level artifacts that have no backing source unit."""
    info = get_rule(rule_id)
    return Finding(
        rule_id=rule_id,
        severity=severity or info.severity,
        message=message,
        path=path,
        unit_id=unit_id,
        span=span,
        cwe_ids=info.cwe_ids,
        owasp_category=info.owasp,
        refactoring_hint=info.hint,
    )


@dataclass
class RunContext:
    """Whole-run view for rules that need cross-unit information."""

    units: list[UnitContext]
    graph: PrototypeGraph
    cfg: AnalyzerConfig
    html_js_urls: list = field(default_factory=list)  # JsUrlAttribute records

    def referenced_names(self) -> set[str]:
        """Identifier names referenced anywhere in the run (reads and writes)."""
        names: set[str] = set()
        for uc in self.units:
            for scope in uc.scopes.scopes:
                for binding in scope.bindings.values():
                    if binding.references:
                        names.add(binding.name)
            for ref in uc.scopes.unresolved_reads:
                names.add(ref.node.name)
        return names


def registered_message_handler(node: Node, ctx: UnitContext) -> Node | None:
    """The function node registered for 'message' events at this call/assignment."""
    if node.type == "CallExpression":
        path = normalized_callee_path(node.callee)
        if path and path[-1] == "addEventListener" and node.arguments:
            first = node.arguments[0]
            if is_constant_string(first) and constant_string_value(first) == "message" \
                    and len(node.arguments) > 1:
                return resolve_function(node.arguments[1], ctx)
    if node.type == "AssignmentExpression" and node.operator == "=":
        path = member_path(unwrap_chain(node.left))
        if path and strip_global_aliases(path)[-1] == "onmessage":
            return resolve_function(node.right, ctx)
    return None


def resolve_function(node: Node, ctx: UnitContext) -> Node | None:
    """Follow an identifier to its function definition within the unit."""
    node = unwrap_chain(node)
    if node.type in FUNCTION_TYPES:
        return node
    if node.type == "Identifier":
        binding = ctx.binding_of(node)
        if binding is None or binding.decl_node is None:
            return None
        decl = binding.decl_node
        if decl.type == "Identifier":  # bindings store the declared name node
            decl = ctx.parent(decl) or decl
        if decl.type in FUNCTION_TYPES:
            return decl
        if decl.type == "VariableDeclarator" and decl.get("init") is not None \
                and decl.init.type in FUNCTION_TYPES:
            return decl.init
    return None


def name_matches_patterns(name: str, entries: list[str]) -> bool:
    """Whole-segment match for word entries, full-name match for regex entries."""
    segments = name_segments(name)
    lowered = name.lower()
    for entry in entries:
        if re.fullmatch(r"[A-Za-z0-9_]+", entry):
            if entry.lower() in segments:
                return True
        else:
            try:
                if re.fullmatch(entry, lowered, re.IGNORECASE):
                    return True
            except re.error:
                continue
    return False


def is_sensitive_name(name: str, cfg: AnalyzerConfig) -> bool:
    allow = {a.lower() for a in cfg.pattern("sensitive_name_allowlist")}
    if name.lower() in allow:
        return False
    return name_matches_patterns(name, cfg.pattern("sensitive_names"))
