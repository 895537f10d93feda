"""Rule registry mapping rule ids to their check functions."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import context_rules, metric_rules, pattern_rules
from .base import RunContext, UnitContext, make_raw_finding  # noqa: F401


@dataclass(frozen=True)
class RegisteredRule:
    rule_id: str
    scope: str  # "unit": check(UnitContext); "run": check(RunContext)
    check: Callable


RULE_CHECKS: tuple[RegisteredRule, ...] = (
    RegisteredRule("JSSEC-001", "unit", metric_rules.check_large_object),
    RegisteredRule("JSSEC-002", "unit", metric_rules.check_long_function),
    RegisteredRule("JSSEC-003", "unit", metric_rules.check_long_parameter_list),
    RegisteredRule("JSSEC-004", "unit", metric_rules.check_nested_callback),
    RegisteredRule("JSSEC-005", "run", metric_rules.check_excessive_globals),
    RegisteredRule("JSSEC-006", "run", metric_rules.check_long_prototype_chain),
    RegisteredRule("JSSEC-007", "unit", pattern_rules.check_empty_catch),
    RegisteredRule("JSSEC-008", "run", pattern_rules.check_dead_code),
    RegisteredRule("JSSEC-009", "unit", pattern_rules.check_hardcoded_secrets),
    RegisteredRule("JSSEC-010", "unit", pattern_rules.check_missing_default),
    RegisteredRule("JSSEC-011", "unit", pattern_rules.check_dynamic_code_execution),
    RegisteredRule("JSSEC-012", "run", pattern_rules.check_coupling_js_html),
    RegisteredRule("JSSEC-013", "unit", pattern_rules.check_active_debugging),
    RegisteredRule("JSSEC-014", "unit", pattern_rules.check_weak_crypto),
    RegisteredRule("JSSEC-015", "unit", pattern_rules.check_insecure_http),
    RegisteredRule("JSSEC-016", "unit", context_rules.check_unverified_cross_origin),
    RegisteredRule("JSSEC-017", "unit", context_rules.check_insecure_dom_manipulation),
    RegisteredRule("JSSEC-018", "unit", context_rules.check_unvalidated_redirect),
    RegisteredRule("JSSEC-019", "unit", context_rules.check_prototype_pollution),
    RegisteredRule("JSSEC-020", "unit", context_rules.check_json_injection),
    RegisteredRule("JSSEC-021", "unit", context_rules.check_unprotected_cookies),
    RegisteredRule("JSSEC-022", "unit", context_rules.check_logging_sensitive),
    RegisteredRule("JSSEC-023", "unit", context_rules.check_insecure_file_handling),
    RegisteredRule("JSSEC-024", "unit", context_rules.check_error_disclosure),
)
