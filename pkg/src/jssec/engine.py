"""Analysis orchestration: units, rules, suppressions, result assembly."""
from __future__ import annotations

import re
import time
from dataclasses import dataclass, field

from .config import AnalyzerConfig
from .findings import Finding
from .html_extract import extract_scripts_from_html
from .metrics import build_prototype_graph
from .parser import parse_source
from .rules import RULE_CHECKS, RunContext, UnitContext
from .scopes import build_scope_table
from .source import ParseDiagnostic, SkippedFile, SourceUnit, UnitKind

MAX_FILE_BYTES = 5 * 1024 * 1024
MAX_AVG_LINE_CHARS = 5000

_RULE_ID_RE = re.compile(r"JSSEC-\d{3}")
_DISABLE_LINE_RE = re.compile(r"^\s*jssec-disable-line\b(.*)$", re.DOTALL)
_DISABLE_BLOCK_RE = re.compile(r"^\s*jssec-disable(?!-line)\b(.*)$", re.DOTALL)
_ENABLE_RE = re.compile(r"^\s*jssec-enable\b")


@dataclass(frozen=True)
class Suppression:
    unit_id: str
    rule_ids: frozenset[str] | None  # None = all rules
    start_line: int
    end_line: int
    reason: str | None

    def covers(self, finding: Finding) -> bool:
        if finding.unit_id != self.unit_id:
            return False
        if self.rule_ids is not None and finding.rule_id not in self.rule_ids:
            return False
        return self.start_line <= finding.span.start_line <= self.end_line


@dataclass(frozen=True)
class SuppressionNotice:
    unit_id: str
    path: str
    line: int
    message: str


@dataclass(frozen=True)
class RuleCrash:
    rule_id: str
    unit_id: str
    message: str


@dataclass
class AnalysisResult:
    findings: list[Finding] = field(default_factory=list)
    suppressed: list[Finding] = field(default_factory=list)
    skipped: list[SkippedFile] = field(default_factory=list)
    parse_diagnostics: list[ParseDiagnostic] = field(default_factory=list)
    rule_crashes: list[RuleCrash] = field(default_factory=list)
    suppression_notices: list[SuppressionNotice] = field(default_factory=list)
    config_warnings: list[str] = field(default_factory=list)
    config_digest: str = ""
    stats: dict = field(default_factory=dict)
    wall_time_ms: float = 0.0  # kept out of every rendered format


def _parse_suppression_comment(text: str) -> tuple[str, frozenset[str] | None, str | None] | None:
    """(kind, rule ids, reason) for a suppression comment, else None."""
    for kind, rx in (("line", _DISABLE_LINE_RE), ("block", _DISABLE_BLOCK_RE)):
        m = rx.match(text.strip())
        if m is None:
            continue
        rest = m.group(1)
        reason = None
        if "reason:" in rest:
            rest, _, reason_text = rest.partition("reason:")
            reason = reason_text.strip() or None
        ids = frozenset(_RULE_ID_RE.findall(rest))
        return kind, (ids or None), reason
    if _ENABLE_RE.match(text.strip()):
        return "enable", None, None
    return None


def _collect_suppressions(unit: SourceUnit, tree) -> tuple[list[Suppression],
                                                           list[SuppressionNotice]]:
    suppressions: list[Suppression] = []
    notices: list[SuppressionNotice] = []
    open_blocks: list[tuple[frozenset[str] | None, int, str | None]] = []
    last_line = unit.span(len(unit.text), len(unit.text)).start_line
    for comment in tree.comments:
        parsed = _parse_suppression_comment(comment.text)
        if parsed is None:
            continue
        kind, ids, reason = parsed
        line = unit.span(comment.start, comment.end).start_line
        if kind == "enable":
            if open_blocks:
                b_ids, b_line, b_reason = open_blocks.pop()
                suppressions.append(Suppression(unit.unit_id, b_ids, b_line, line, b_reason))
            continue
        if reason is None:
            notices.append(SuppressionNotice(
                unit.unit_id, unit.path, line,
                "suppression without a reason; add 'reason: <text>'"))
        if kind == "line":
            suppressions.append(Suppression(unit.unit_id, ids, line, line, reason))
        else:
            open_blocks.append((ids, line, reason))
    for b_ids, b_line, b_reason in open_blocks:
        suppressions.append(Suppression(unit.unit_id, b_ids, b_line, last_line, b_reason))
    return suppressions, notices


def _looks_minified(text: str) -> str | None:
    if len(text) > MAX_FILE_BYTES:
        return f"file exceeds {MAX_FILE_BYTES // (1024 * 1024)} MB"
    lines = text.count("\n") + 1
    if lines and len(text) / lines > MAX_AVG_LINE_CHARS:
        return f"average line length exceeds {MAX_AVG_LINE_CHARS} characters"
    return None


def _units_for_file(path: str, text: str, result: AnalysisResult,
                    cfg: AnalyzerConfig) -> tuple[list[SourceUnit], list]:
    reason = None if cfg.include_minified else _looks_minified(text)
    if reason is not None:
        result.skipped.append(SkippedFile(path, f"likely minified/generated: {reason}"))
        return [], []
    low = path.lower()
    if low.endswith((".html", ".htm")):
        extraction = extract_scripts_from_html(path, text)
        return extraction.units, extraction.js_urls
    unit = SourceUnit(unit_id=path, path=path, kind=UnitKind.JS_FILE, text=text)
    if low.endswith(".mjs"):
        unit.source_type = "module"
    return [unit], []


def analyze_files(files: list[tuple[str, str]], cfg: AnalyzerConfig) -> AnalysisResult:
    """Run every enabled rule over (path, text) inputs and assemble the result."""
    started = time.perf_counter()
    result = AnalysisResult(config_warnings=list(cfg.warnings),
                            config_digest=cfg.digest())

    units: list[SourceUnit] = []
    js_urls: list = []
    for path, text in files:
        file_units, file_urls = _units_for_file(path, text, result, cfg)
        units.extend(file_units)
        js_urls.extend(file_urls)

    contexts: list[UnitContext] = []
    suppressions: list[Suppression] = []
    for unit in units:
        parsed = parse_source(unit)
        if isinstance(parsed, ParseDiagnostic):
            result.parse_diagnostics.append(parsed)
            result.skipped.append(SkippedFile(unit.unit_id, parsed.message))
            continue
        scopes = build_scope_table(parsed)
        contexts.append(UnitContext(unit, parsed, scopes, cfg))
        sups, notes = _collect_suppressions(unit, parsed)
        suppressions.extend(sups)
        result.suppression_notices.extend(notes)

    graph = build_prototype_graph(
        [(ctx.unit, ctx.tree, ctx.scopes) for ctx in contexts])
    rctx = RunContext(units=contexts, graph=graph, cfg=cfg, html_js_urls=js_urls)

    raw: list[Finding] = []
    for rule in RULE_CHECKS:
        if not cfg.rule_enabled(rule.rule_id):
            continue
        if rule.scope == "run":
            try:
                raw.extend(rule.check(rctx))
            except Exception as exc:  # noqa: BLE001 - rule isolation contract
                result.rule_crashes.append(RuleCrash(rule.rule_id, "<run>", repr(exc)))
            continue
        for ctx in contexts:
            try:
                raw.extend(rule.check(ctx))
            except Exception as exc:  # noqa: BLE001 - rule isolation contract
                result.rule_crashes.append(
                    RuleCrash(rule.rule_id, ctx.unit.unit_id, repr(exc)))

    raw.sort(key=Finding.sort_key)
    deduped: list[Finding] = []
    seen = set()
    for finding in raw:
        key = finding.identity()
        if key in seen:
            continue
        seen.add(key)
        deduped.append(finding)

    for finding in deduped:
        if any(s.covers(finding) for s in suppressions):
            result.suppressed.append(finding)
        else:
            result.findings.append(finding)

    per_rule: dict[str, int] = {}
    for finding in result.findings:
        per_rule[finding.rule_id] = per_rule.get(finding.rule_id, 0) + 1
    result.stats = {
        "files": len(files),
        "units": len(units),
        "units_analyzed": len(contexts),
        "findings": len(result.findings),
        "suppressed": len(result.suppressed),
        "per_rule": per_rule,
    }
    result.wall_time_ms = (time.perf_counter() - started) * 1000.0
    return result
