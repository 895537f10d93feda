"""Shared helpers for loading and analyzing the rule fixture corpus."""
import json
import os

from jssec import analyze_files, default_config

FIXTURE_ROOT = os.path.join(os.path.dirname(__file__), "fixtures", "rules")
DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

SOURCE_EXTENSIONS = (".js", ".mjs", ".cjs", ".html", ".htm")


def rule_dirs() -> list[str]:
    return sorted(
        d for d in os.listdir(FIXTURE_ROOT)
        if os.path.isdir(os.path.join(FIXTURE_ROOT, d)))


def load_dir(dirname: str) -> list[tuple[str, str]]:
    """(path relative to the rule dir, text) pairs for one fixture directory."""
    root = os.path.join(FIXTURE_ROOT, dirname)
    out = []
    for dirpath, dirnames, filenames in os.walk(root):
        dirnames.sort()
        for name in sorted(filenames):
            if not name.endswith(SOURCE_EXTENSIONS):
                continue
            full = os.path.join(dirpath, name)
            rel = os.path.relpath(full, root).replace(os.sep, "/")
            with open(full, encoding="utf-8") as fh:
                out.append((rel, fh.read()))
    return out


def expected_findings(dirname: str) -> dict:
    path = os.path.join(FIXTURE_ROOT, dirname, "expected.json")
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def analyze_dir(dirname: str, cfg=None):
    return analyze_files(load_dir(dirname), cfg or default_config())


def finding_map(result) -> dict:
    """path -> sorted (rule, line) pairs, in the shape of expected.json."""
    out = {}
    for f in result.findings:
        out.setdefault(f.path, []).append((f.rule_id, f.span.start_line))
    for path in out:
        out[path].sort(key=lambda e: (e[1], e[0]))
    return out


def rule_id_for_dir(dirname: str) -> str:
    # directory names look like jssec-009-hardcoded-secrets
    return "JSSEC-" + dirname.split("-")[1]
