"""Renders analysis results as human text, machine JSON, and SARIF 2.1.0."""
from __future__ import annotations

import json
import re

from . import __version__
from .catalog import RULES, RULES_BY_ID
from .engine import AnalysisResult
from .findings import Finding, Severity
from .source import Span

_ANSI = {"error": "\x1b[31m", "warning": "\x1b[33m", "info": "\x1b[36m", "reset": "\x1b[0m"}
_SARIF_LEVEL = {Severity.INFO: "note", Severity.WARNING: "warning", Severity.ERROR: "error"}
_INFO_URI = "https://example.invalid/jssec"


def _finding_line(f: Finding, color: bool) -> str:
    sev = f.severity.value
    if color:
        sev = f"{_ANSI[sev]}{sev}{_ANSI['reset']}"
    cwes = ",".join(f.cwe_ids)
    return (f"{f.path}:{f.span.start_line}:{f.span.start_col} {f.rule_id} {sev}"
            f" {f.message} [{cwes}] (OWASP: {f.owasp_category})")


def render_text(result: AnalysisResult, color: bool = False,
                show_suppressed: bool = False) -> str:
    lines: list[str] = []
    for f in result.findings:
        lines.append(_finding_line(f, color))
    if show_suppressed and result.suppressed:
        lines.append("suppressed:")
        for f in result.suppressed:
            lines.append("  " + _finding_line(f, color))
    total = len(result.findings)
    by_sev = {"error": 0, "warning": 0, "info": 0}
    for f in result.findings:
        by_sev[f.severity.value] += 1
    lines.append("")
    if total == 0:
        lines.append("0 findings")
    else:
        parts = ", ".join(f"{n} {sev}" for sev, n in by_sev.items() if n)
        lines.append(f"{total} finding{'s' if total != 1 else ''} ({parts})")
        for rule_id in sorted(result.stats.get("per_rule", {})):
            count = result.stats["per_rule"][rule_id]
            name = RULES_BY_ID[rule_id].name
            lines.append(f"  {rule_id} {name}: {count}")
    for skip in result.skipped:
        lines.append(f"skipped: {skip.path} ({skip.reason})")
    for warning in result.config_warnings:
        lines.append(f"config warning: {warning}")
    for notice in result.suppression_notices:
        lines.append(f"notice: {notice.path}:{notice.line} {notice.message}")
    for crash in result.rule_crashes:
        lines.append(f"internal error: rule {crash.rule_id} failed on"
                     f" {crash.unit_id}: {crash.message}")
    return "\n".join(lines) + "\n"


def _span_dict(span: Span) -> dict:
    return {
        "start": span.start, "end": span.end,
        "start_line": span.start_line, "start_col": span.start_col,
        "end_line": span.end_line, "end_col": span.end_col,
    }


def _finding_dict(f: Finding) -> dict:
    return {
        "rule_id": f.rule_id,
        "rule_name": RULES_BY_ID[f.rule_id].name,
        "severity": f.severity.value,
        "message": f.message,
        "path": f.path,
        "unit_id": f.unit_id,
        "span": _span_dict(f.span),
        "cwe_ids": f.cwe_ids,
        "owasp_category": f.owasp_category,
        "refactoring_hint": f.refactoring_hint,
        "notes": f.notes,
        "taint_chain": [
            {"span": _span_dict(step.span), "description": step.description}
            for step in f.taint_chain
        ],
    }


def render_json(result: AnalysisResult, show_suppressed: bool = False) -> str:
    doc = {
        "schema_version": "1.0",
        "tool": {"name": "jssec", "version": __version__},
        "config_digest": result.config_digest,
        "findings": [_finding_dict(f) for f in result.findings],
        "skipped_units": [{"path": s.path, "reason": s.reason} for s in result.skipped],
        "diagnostics": [
            {"unit_id": d.unit_id, "path": d.path, "message": d.message,
             "recoverable": d.recoverable}
            for d in result.parse_diagnostics
        ] + [
            {"unit_id": c.unit_id, "rule_id": c.rule_id, "message": c.message,
             "kind": "rule-crash"}
            for c in result.rule_crashes
        ],
        "suppression_notices": [
            {"path": n.path, "line": n.line, "message": n.message}
            for n in result.suppression_notices
        ],
        "config_warnings": result.config_warnings,
        "stats": result.stats,
    }
    if show_suppressed:
        doc["suppressed"] = [_finding_dict(f) for f in result.suppressed]
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _sarif_rule_name(smell: str) -> str:
    return "".join(w.capitalize() for w in re.split(r"[^A-Za-z0-9]+", smell) if w)


def _sarif_rules() -> list[dict]:
    rules = []
    for info in RULES:
        tags = ["security"] + [f"external/cwe/{c.lower()}" for c in info.cwe_ids]
        rules.append({
            "id": info.rule_id,
            "name": _sarif_rule_name(info.name),
            "shortDescription": {"text": info.name},
            "fullDescription": {"text": info.description},
            "help": {"text": info.hint},
            "defaultConfiguration": {"level": _SARIF_LEVEL[info.severity]},
            "properties": {
                "tags": tags,
                "cwe": info.cwe_ids,
                "owasp": info.owasp,
            },
        })
    return rules


def _sarif_location(path: str, span: Span, message: str | None = None) -> dict:
    loc = {
        "physicalLocation": {
            "artifactLocation": {"uri": path},
            "region": {
                "startLine": span.start_line,
                "startColumn": span.start_col,
                "endLine": span.end_line,
                "endColumn": span.end_col,
            },
        }
    }
    if message is not None:
        loc["message"] = {"text": message}
    return loc


def _sarif_result(f: Finding, rule_index: dict[str, int],
                  suppressed: bool = False) -> dict:
    res = {
        "ruleId": f.rule_id,
        "ruleIndex": rule_index[f.rule_id],
        "level": _SARIF_LEVEL[f.severity],
        "message": {"text": f.message},
        "locations": [_sarif_location(f.path, f.span)],
    }
    if f.taint_chain:
        res["codeFlows"] = [{
            "threadFlows": [{
                "locations": [
                    {"location": _sarif_location(f.path, step.span, step.description)}
                    for step in f.taint_chain
                ],
            }],
        }]
    if f.notes:
        res["properties"] = {"notes": f.notes}
    if suppressed:
        res["suppressions"] = [{"kind": "inSource"}]
    return res


def render_sarif(result: AnalysisResult, show_suppressed: bool = False) -> str:
    rule_index = {info.rule_id: i for i, info in enumerate(RULES)}
    results = [_sarif_result(f, rule_index) for f in result.findings]
    if show_suppressed:
        results += [_sarif_result(f, rule_index, suppressed=True)
                    for f in result.suppressed]
    doc = {
        "$schema": "https://json.schemastore.org/sarif-2.1.0.json",
        "version": "2.1.0",
        "runs": [{
            "tool": {
                "driver": {
                    "name": "jssec",
                    "version": __version__,
                    "informationUri": _INFO_URI,
                    "rules": _sarif_rules(),
                },
            },
            "columnKind": "unicodeCodePoints",
            "results": results,
        }],
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
