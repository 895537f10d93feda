"""Threshold-based detectors: size, nesting, globals, inheritance depth."""
from __future__ import annotations

from collections import defaultdict

from ..findings import Finding
from ..metrics import (
    callback_chains,
    measure_functions,
    measure_objects,
    unit_logical_loc,
)
from .base import RunContext, UnitContext


def check_large_object(ctx: UnitContext) -> list[Finding]:
    limit = ctx.cfg.threshold("large_object")
    out = []
    for om in measure_objects(ctx.tree, ctx.scopes):
        if om.member_count > limit:
            out.append(ctx.finding(
                "JSSEC-001", om.node.start, om.node.end,
                f"{om.kind} '{om.name}' declares {om.member_count} members"
                f" (limit {limit})"))
    return out


def check_long_function(ctx: UnitContext) -> list[Finding]:
    limit = ctx.cfg.threshold("function_loc")
    file_limit = ctx.cfg.threshold("file_loc")
    out = []
    for fm in measure_functions(ctx.tree, ctx.unit):
        if fm.logical_loc > limit:
            out.append(ctx.finding(
                "JSSEC-002", fm.node.start, fm.node.end,
                f"function '{fm.name}' spans {fm.logical_loc} logical lines"
                f" (limit {limit})"))
    total = unit_logical_loc(ctx.tree, ctx.unit)
    if total > file_limit:
        out.append(ctx.finding(
            "JSSEC-002", 0, 0,
            f"file spans {total} logical lines (limit {file_limit})"))
    return out


def check_long_parameter_list(ctx: UnitContext) -> list[Finding]:
    limit = ctx.cfg.threshold("params")
    out = []
    for fm in measure_functions(ctx.tree, ctx.unit):
        if fm.parameter_count > limit:
            out.append(ctx.finding(
                "JSSEC-003", fm.node.start, fm.node.end,
                f"function '{fm.name}' takes {fm.parameter_count} parameters"
                f" (limit {limit})"))
    return out


def check_nested_callback(ctx: UnitContext) -> list[Finding]:
    limit = ctx.cfg.threshold("callbacks")
    out = []
    for chain in callback_chains(ctx.tree):
        if chain.depth > limit:
            out.append(ctx.finding(
                "JSSEC-004", chain.innermost.start, chain.innermost.end,
                f"callbacks nested {chain.depth} levels deep (limit {limit})"))
    return out


def check_excessive_globals(rctx: RunContext) -> list[Finding]:
    limit = rctx.cfg.threshold("globals")
    out = []
    declared_by_name: dict[str, list[tuple[UnitContext, object]]] = defaultdict(list)
    for ctx in rctx.units:
        bindings = ctx.scopes.global_bindings()
        if bindings:
            total = len(bindings)
            if total > limit:
                out.append(ctx.finding(
                    "JSSEC-005", 0, 0,
                    f"unit declares {total} global variables (limit {limit})"))
        for binding in bindings:
            if binding.kind == "implicit" and binding.decl_node is not None:
                node = binding.decl_node
                out.append(ctx.finding(
                    "JSSEC-005", node.start, node.end,
                    f"implicit global '{binding.name}' created by assignment"
                    " without declaration",
                    notes=["implicit-global"]))
            if binding.kind != "implicit":
                declared_by_name[binding.name].append((ctx, binding))
    for name in sorted(declared_by_name):
        holders = declared_by_name[name]
        if len(holders) < 2:
            continue
        unit_ids = [ctx.unit.unit_id for ctx, _b in holders]
        for ctx, binding in holders:
            node = binding.decl_node
            start, end = (node.start, node.end) if node is not None else (0, 0)
            others = ", ".join(u for u in unit_ids if u != ctx.unit.unit_id)
            out.append(ctx.finding(
                "JSSEC-005", start, end,
                f"global '{name}' is declared in multiple analyzed files"
                f" (also in {others})",
                notes=["cross-file collision heuristic"]))
    return out


def check_long_prototype_chain(rctx: RunContext) -> list[Finding]:
    limit = rctx.cfg.threshold("prototype_chain")
    out = []
    by_unit = {ctx.unit.unit_id: ctx for ctx in rctx.units}
    for name in sorted(rctx.graph.nodes):
        depth = rctx.graph.chain_depth(name)
        if depth > limit:
            pn = rctx.graph.nodes[name]
            ctx = by_unit.get(pn.unit_id)
            if ctx is None:
                continue
            out.append(ctx.finding(
                "JSSEC-006", pn.node.start, pn.node.end,
                f"prototype chain of '{name}' is {depth} levels deep"
                f" (limit {limit})"))
    return out
