"""Analyzer configuration: defaults, JSON file loading, validation, digests."""
from __future__ import annotations

import hashlib
import json
import os
import re
from dataclasses import dataclass, field

from .catalog import ALL_RULE_IDS


class ConfigError(Exception):
    """Invalid configuration file or values (CLI exit code 3)."""


def _glob_to_re(pattern: str) -> re.Pattern:
    i, out = 0, []
    while i < len(pattern):
        c = pattern[i]
        if c == "*":
            if pattern.startswith("**", i):
                out.append(".*")
                i += 2
                if i < len(pattern) and pattern[i] == "/":
                    i += 1
            else:
                out.append("[^/]*")
                i += 1
        elif c == "?":
            out.append("[^/]")
            i += 1
        else:
            out.append(re.escape(c))
            i += 1
    return re.compile("^" + "".join(out) + "$")


def glob_match(pattern: str, path: str) -> bool:
    """Match a path-exclude glob against a path or any of its sub-paths."""
    rx = _glob_to_re(pattern)
    norm = path.replace("\\", "/")
    while norm.startswith("./"):
        norm = norm[2:]
    parts = norm.split("/")
    for i in range(len(parts)):
        if rx.match("/".join(parts[i:])):
            return True
    return False


def path_excluded(patterns: list[str], path: str) -> bool:
    return any(glob_match(p, path) for p in patterns)


@dataclass(frozen=True)
class Threshold:
    name: str
    value: int
    source: str  # "PaperCited" (fixed in the rule reference) or "Default"


@dataclass
class PatternList:
    name: str
    entries: list[str]

    def compiled(self) -> list[re.Pattern]:
        out = []
        for entry in self.entries:
            try:
                out.append(re.compile(entry, re.IGNORECASE))
            except re.error as exc:
                raise ConfigError(f"pattern list '{self.name}': bad regex {entry!r}: {exc}")
        return out


# Cited thresholds keep their source tag until a config file overrides them.
_DEFAULT_THRESHOLDS: dict[str, tuple[int, str]] = {
    "large_object": (20, "Default"),
    "function_loc": (50, "Default"),
    "file_loc": (1000, "PaperCited"),
    "params": (5, "Default"),
    "callbacks": (3, "Default"),
    "globals": (10, "Default"),
    "dom_calls": (5, "Default"),
    "prototype_chain": (7, "PaperCited"),
}

_DEFAULT_PATTERNS: dict[str, list[str]] = {
    "sensitive_names": ["user", "username", "uname", "password", "passwd", "pwd", "key"],
    "sensitive_name_allowlist": [
        "passwordField", "passwordInput", "keyCode", "keyCodes", "keyboard", "userAgent",
    ],
    "secret_placeholders": ["", "changeme", "todo", "placeholder", "xxx", "dummy"],
    "weak_algorithms": [
        r"aes\d*ecb", "des", "rc2", "rc4", "md2", "md4", "md5", "md6",
        "haval128", "hmacmd5", "dsa", "ripemd", "ripemd128", "ripemd160", "sha1",
    ],
    "debug_calls": [
        "console.log", "console.debug", "console.error", "console.info",
        "console.trace", "console.dir", "alert",
    ],
    "sanitizers": ["escape", "sanitiz", "valid", "purify", "encodeuri", "htmlencode", "clean"],
    "crypto_sinks": [
        "createHash", "createCipher", "createCipheriv", "createHmac",
        "subtle.digest", "subtle.encrypt", "subtle.sign",
    ],
    "fs_sinks": [
        "readFile", "readFileSync", "writeFile", "writeFileSync", "appendFile",
        "appendFileSync", "createReadStream", "createWriteStream", "unlink", "unlinkSync",
        "open", "openSync", "rename", "renameSync", "sendFile",
    ],
    "response_sinks": ["send", "json", "end", "write", "jsonp"],
    "loggers": [],
    "upload_fields": ["originalname", "filename"],
}

DEFAULT_PATH_EXCLUDES = ["node_modules/**", "dist/**", "*.min.js"]
DEFAULT_DEBUG_PATH_EXCLUDES = ["tests/**"]

_TOP_LEVEL_KEYS = {
    "rules", "thresholds", "patterns", "profile",
    "path_excludes", "debug_path_excludes",
}
_PROFILES = ("all", "client", "server")

# Rules that only make sense on server-side code; --profile=client turns them off.
_SERVER_ONLY_RULES = {"JSSEC-022", "JSSEC-023", "JSSEC-024"}

ENV_CONFIG_VAR = "JSSEC_CONFIG"


@dataclass
class AnalyzerConfig:
    enabled_rules: set[str] = field(default_factory=lambda: set(ALL_RULE_IDS))
    thresholds: dict[str, Threshold] = field(default_factory=dict)
    patterns: dict[str, PatternList] = field(default_factory=dict)
    profile: str = "all"
    path_excludes: list[str] = field(default_factory=lambda: list(DEFAULT_PATH_EXCLUDES))
    debug_path_excludes: list[str] = field(
        default_factory=lambda: list(DEFAULT_DEBUG_PATH_EXCLUDES))
    strict_parse: bool = False
    strict_http: bool = False
    include_minified: bool = False
    warnings: list[str] = field(default_factory=list)

    def threshold(self, name: str) -> int:
        return self.thresholds[name].value

    def pattern(self, name: str) -> list[str]:
        return self.patterns[name].entries

    def rule_enabled(self, rule_id: str) -> bool:
        if rule_id not in self.enabled_rules:
            return False
        if self.profile == "client" and rule_id in _SERVER_ONLY_RULES:
            return False
        return True

    def active_rule_ids(self) -> list[str]:
        return [rid for rid in ALL_RULE_IDS if self.rule_enabled(rid)]

    def digest(self) -> str:
        """Stable fingerprint of the effective configuration."""
        payload = {
            "rules": sorted(self.enabled_rules),
            "thresholds": {n: t.value for n, t in sorted(self.thresholds.items())},
            "patterns": {n: p.entries for n, p in sorted(self.patterns.items())},
            "profile": self.profile,
            "path_excludes": self.path_excludes,
            "debug_path_excludes": self.debug_path_excludes,
            "strict_http": self.strict_http,
        }
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def default_config() -> AnalyzerConfig:
    cfg = AnalyzerConfig()
    cfg.thresholds = {
        name: Threshold(name, value, source)
        for name, (value, source) in _DEFAULT_THRESHOLDS.items()
    }
    cfg.patterns = {
        name: PatternList(name, list(entries)) for name, entries in _DEFAULT_PATTERNS.items()
    }
    return cfg


def _merge_rules(cfg: AnalyzerConfig, raw) -> None:
    if not isinstance(raw, dict):
        raise ConfigError("'rules' must be an object of rule id -> boolean")
    for rule_id, enabled in raw.items():
        if rule_id not in ALL_RULE_IDS:
            raise ConfigError(f"unknown rule id in config: {rule_id!r}")
        if not isinstance(enabled, bool):
            raise ConfigError(f"rule {rule_id}: expected true/false, got {enabled!r}")
        if enabled:
            cfg.enabled_rules.add(rule_id)
        else:
            cfg.enabled_rules.discard(rule_id)


def _merge_thresholds(cfg: AnalyzerConfig, raw) -> None:
    if not isinstance(raw, dict):
        raise ConfigError("'thresholds' must be an object of name -> positive integer")
    for name, value in raw.items():
        if name not in cfg.thresholds:
            raise ConfigError(f"unknown threshold in config: {name!r}")
        if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
            raise ConfigError(f"threshold {name}: expected positive integer, got {value!r}")
        # Any override is a local choice, even of a cited value.
        cfg.thresholds[name] = Threshold(name, value, "Default")


def _merge_patterns(cfg: AnalyzerConfig, raw) -> None:
    if not isinstance(raw, dict):
        raise ConfigError("'patterns' must be an object of list name -> {mode, entries}")
    for name, spec in raw.items():
        if name not in cfg.patterns:
            raise ConfigError(f"unknown pattern list in config: {name!r}")
        if not isinstance(spec, dict) or "mode" not in spec or "entries" not in spec:
            raise ConfigError(f"pattern list {name}: expected {{\"mode\", \"entries\"}}")
        mode, entries = spec["mode"], spec["entries"]
        if mode not in ("extend", "replace"):
            raise ConfigError(f"pattern list {name}: mode must be 'extend' or 'replace'")
        if not isinstance(entries, list) or not all(isinstance(e, str) for e in entries):
            raise ConfigError(f"pattern list {name}: entries must be a list of strings")
        if mode == "replace":
            cfg.patterns[name] = PatternList(name, list(entries))
        else:
            merged = cfg.patterns[name].entries + [
                e for e in entries if e not in cfg.patterns[name].entries]
            cfg.patterns[name] = PatternList(name, merged)
        cfg.patterns[name].compiled()


def _merge_glob_list(name: str, base: list[str], raw) -> list[str]:
    if not isinstance(raw, list) or not all(isinstance(e, str) for e in raw):
        raise ConfigError(f"'{name}' must be a list of glob strings")
    return base + [e for e in raw if e not in base]


def load_config(path: str | None) -> AnalyzerConfig:
    """Build the effective config: documented defaults deep-merged with the file."""
    cfg = default_config()
    if path is None:
        path = os.environ.get(ENV_CONFIG_VAR) or None
    if path is None:
        return cfg
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed config file {path}: {exc}")
    if not isinstance(raw, dict):
        raise ConfigError("config root must be a JSON object")

    for key in raw:
        if key not in _TOP_LEVEL_KEYS:
            cfg.warnings.append(f"unknown config key ignored: {key!r}")

    if "rules" in raw:
        _merge_rules(cfg, raw["rules"])
    if "thresholds" in raw:
        _merge_thresholds(cfg, raw["thresholds"])
    if "patterns" in raw:
        _merge_patterns(cfg, raw["patterns"])
    if "profile" in raw:
        if raw["profile"] not in _PROFILES:
            raise ConfigError(f"profile must be one of {_PROFILES}, got {raw['profile']!r}")
        cfg.profile = raw["profile"]
    if "path_excludes" in raw:
        cfg.path_excludes = _merge_glob_list("path_excludes", cfg.path_excludes,
                                             raw["path_excludes"])
    if "debug_path_excludes" in raw:
        cfg.debug_path_excludes = _merge_glob_list(
            "debug_path_excludes", cfg.debug_path_excludes, raw["debug_path_excludes"])
    return cfg
