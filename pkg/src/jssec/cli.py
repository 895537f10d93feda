"""Command-line entry point: input discovery, flag parsing, exit codes."""
from __future__ import annotations

import argparse
import glob as globlib
import json
import os
import sys

from .catalog import ALL_RULE_IDS, RULES, get_rule
from .config import AnalyzerConfig, ConfigError, load_config, path_excluded
from .engine import analyze_files
from .findings import Severity
from .reporting import render_json, render_sarif, render_text

SOURCE_EXTENSIONS = (".js", ".mjs", ".cjs", ".html", ".htm")


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="jssec",
        description="Detect JavaScript security code smells and report them"
                    " with CWE and OWASP Top-10 mappings.")
    p.add_argument("inputs", nargs="*",
                   help="files, directories, or globs to analyze ('-' for stdin)")
    p.add_argument("-f", "--format", choices=("text", "json", "sarif"),
                   default="text", help="output format (default: text)")
    p.add_argument("--config", metavar="PATH", help="configuration file")
    p.add_argument("--profile", choices=("all", "client", "server"),
                   help="analysis profile (default: all)")
    p.add_argument("--fail-level", choices=("info", "warning", "error"),
                   default="warning",
                   help="minimum severity causing exit code 1 (default: warning)")
    p.add_argument("--list-rules", action="store_true",
                   help="print the rule catalog with CWE/OWASP mappings and exit")
    p.add_argument("--explain", metavar="RULE_ID",
                   help="print one rule's description, mapping, and hint, then exit")
    p.add_argument("--baseline", metavar="PATH",
                   help="JSON report whose findings are subtracted from this run")
    p.add_argument("--show-suppressed", action="store_true",
                   help="include suppressed findings in the report")
    p.add_argument("--strict-parse", action="store_true",
                   help="treat unparseable files as an internal error (exit 4)")
    p.add_argument("--strict-http", action="store_true",
                   help="flag http:// literals anywhere, not only in URL positions")
    p.add_argument("--include-minified", action="store_true",
                   help="analyze files that look minified or generated")
    return p


def discover_inputs(inputs: list[str], cfg: AnalyzerConfig) -> list[str]:
    """Expands files, directories, and globs into a sorted list of paths."""
    found: list[str] = []
    seen: set[str] = set()

    def add(path: str):
        rel = os.path.relpath(path)
        if rel not in seen:
            seen.add(rel)
            found.append(rel)

    def walk(root: str):
        for dirpath, dirnames, filenames in os.walk(root):
            dirnames.sort()
            for name in sorted(filenames):
                full = os.path.relpath(os.path.join(dirpath, name))
                if not name.endswith(SOURCE_EXTENSIONS):
                    continue
                if path_excluded(cfg.path_excludes, full):
                    continue
                add(full)

    for item in inputs:
        if item == "-":
            continue
        if os.path.isdir(item):
            walk(item)
        elif os.path.isfile(item):
            add(item)
        else:
            matches = sorted(globlib.glob(item, recursive=True))
            if not matches:
                raise FileNotFoundError(item)
            for match in matches:
                if os.path.isdir(match):
                    walk(match)
                elif match.endswith(SOURCE_EXTENSIONS):
                    add(match)
    return sorted(found)


def _load_baseline(path: str) -> set[tuple]:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    keys = set()
    for f in doc.get("findings", []):
        span = f.get("span", {})
        keys.add((f.get("path"), f.get("rule_id"),
                  span.get("start_line"), span.get("start_col")))
    return keys


def _apply_baseline(result, keys: set[tuple]):
    kept = [f for f in result.findings
            if (f.path, f.rule_id, f.span.start_line, f.span.start_col) not in keys]
    result.findings = kept
    result.stats["findings"] = len(kept)
    per_rule: dict[str, int] = {}
    for f in kept:
        per_rule[f.rule_id] = per_rule.get(f.rule_id, 0) + 1
    result.stats["per_rule"] = per_rule


def _print_rule_list():
    for info in RULES:
        print(f"{info.rule_id}  {info.mapping_row()}")


def _print_explanation(rule_id: str) -> int:
    rid = rule_id.upper()
    if not rid.startswith("JSSEC-"):
        rid = f"JSSEC-{rid.zfill(3)}" if rid.isdigit() else rid
    if rid not in ALL_RULE_IDS:
        print(f"unknown rule id: {rule_id}", file=sys.stderr)
        return 2
    info = get_rule(rid)
    print(f"{info.rule_id}: {info.name}")
    print(f"severity: {info.severity.value}")
    print(f"CWE: {info.cwe_text}")
    print(f"OWASP: {info.owasp}")
    print()
    print(info.description)
    print()
    print(f"refactoring: {info.hint}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    opts = parser.parse_args(argv)

    if opts.list_rules:
        _print_rule_list()
        return 0
    if opts.explain:
        return _print_explanation(opts.explain)
    if not opts.inputs:
        parser.print_usage(file=sys.stderr)
        print("jssec: error: no inputs given", file=sys.stderr)
        return 2
    try:
        return _run(opts)
    except Exception as exc:  # unexpected analyzer fault
        print(f"jssec: internal error: {exc}", file=sys.stderr)
        return 4


def _run(opts) -> int:
    try:
        cfg = load_config(opts.config)
    except ConfigError as exc:
        print(f"jssec: config error: {exc}", file=sys.stderr)
        return 3
    if opts.profile:
        cfg.profile = opts.profile
    if opts.strict_parse:
        cfg.strict_parse = True
    if opts.strict_http:
        cfg.strict_http = True
    if opts.include_minified:
        cfg.include_minified = True

    baseline_keys: set[tuple] = set()
    if opts.baseline:
        try:
            baseline_keys = _load_baseline(opts.baseline)
        except (OSError, json.JSONDecodeError) as exc:
            print(f"jssec: cannot read baseline: {exc}", file=sys.stderr)
            return 2

    try:
        paths = discover_inputs(opts.inputs, cfg)
    except FileNotFoundError as exc:
        print(f"jssec: no such input: {exc.args[0]}", file=sys.stderr)
        return 2

    files: list[tuple[str, str]] = []
    if "-" in opts.inputs:
        files.append(("<stdin>", sys.stdin.read()))
    for path in paths:
        try:
            with open(path, encoding="utf-8", errors="replace") as fh:
                files.append((path, fh.read()))
        except OSError as exc:
            print(f"jssec: cannot read {path}: {exc}", file=sys.stderr)
            return 2
    if not files:
        print("jssec: no analyzable files found", file=sys.stderr)
        return 2

    result = analyze_files(files, cfg)
    if baseline_keys:
        _apply_baseline(result, baseline_keys)

    if opts.format == "json":
        sys.stdout.write(render_json(result, show_suppressed=opts.show_suppressed))
    elif opts.format == "sarif":
        sys.stdout.write(render_sarif(result, show_suppressed=opts.show_suppressed))
    else:
        sys.stdout.write(render_text(result, show_suppressed=opts.show_suppressed))

    if result.rule_crashes:
        return 4
    if cfg.strict_parse and any(not d.recoverable for d in result.parse_diagnostics):
        return 4
    fail_rank = Severity(opts.fail_level).rank
    if any(f.severity.rank >= fail_rank for f in result.findings):
        return 1
    return 0


def main_entry():
    raise SystemExit(main())


if __name__ == "__main__":
    main_entry()
