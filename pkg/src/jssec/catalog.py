"""Rule catalog: smell names, CWE/OWASP mappings, severities, refactoring hints."""
from __future__ import annotations

import re
from dataclasses import dataclass

from .findings import Severity

_CWE_ID_RE = re.compile(r"CWE-\d+")


@dataclass(frozen=True)
class RuleInfo:
    rule_id: str
    name: str
    cwe_text: str
    owasp: str
    severity: Severity
    description: str
    hint: str

    @property
    def cwe_ids(self) -> list[str]:
        return _CWE_ID_RE.findall(self.cwe_text)

    def mapping_row(self) -> str:
        return f"{self.name} | {self.cwe_text} | {self.owasp}"


RULES: tuple[RuleInfo, ...] = (
    RuleInfo(
        "JSSEC-001",
        "Large Object",
        "CWE-1120 (Excessive Code Complexity), CWE-1093 (Excessively Complex Data"
        " Representation), CWE-1080 (Source Code File with Excessive Number of Lines of Code)",
        "Insecure Direct Object References",
        Severity.WARNING,
        "An object, constructor, or class declares more members than the configured limit.",
        "Split the object into smaller, focused components with clear responsibilities.",
    ),
    RuleInfo(
        "JSSEC-002",
        "Long Method/Function",
        "CWE-1080 (Source Code File with Excessive Number of Lines of Code), CWE-1120"
        " (Excessive Code Complexity)",
        "Insecure Direct Object References",
        Severity.WARNING,
        "A function body (or whole file) spans more logical lines than the configured limit.",
        "Extract cohesive pieces into smaller functions; keep each unit reviewable.",
    ),
    RuleInfo(
        "JSSEC-003",
        "Long Parameter List",
        "CWE-1120 (Excessive Code Complexity), CWE-1093 (Excessively Complex Data"
        " Representation)",
        "Injection",
        Severity.WARNING,
        "A function takes more parameters than the configured limit.",
        "Group related parameters into a single options object.",
    ),
    RuleInfo(
        "JSSEC-004",
        "Nested Callback",
        "CWE-1124 (Excessively Deep Nesting)",
        "Security Misconfiguration",
        Severity.WARNING,
        "Callbacks are nested (or chained) deeper than the configured limit.",
        "Flatten the chain with promises or async/await.",
    ),
    RuleInfo(
        "JSSEC-005",
        "Excessive Global Variables",
        "CWE-1108: Excessive Reliance on Global Variables",
        "Insecure Direct Object References",
        Severity.WARNING,
        "The program declares or implicitly creates more globals than the configured limit.",
        "Wrap code in modules or closures so state is not shared through the global object.",
    ),
    RuleInfo(
        "JSSEC-006",
        "Long Prototype Chain",
        "CWE-1074 (Class with Excessively Deep Inheritance)",
        "Injection",
        Severity.WARNING,
        "An object's inheritance chain is longer than the configured limit.",
        "Keep inheritance shallow; prefer composition over deep prototype chains.",
    ),
    RuleInfo(
        "JSSEC-007",
        "Empty Catch Blocks",
        "CWE-703 (Improper Check or Handling of Exceptional Conditions), CWE-1069 (Empty"
        " Exception Block), CWE-1071: Empty Code Block",
        "Improper Error Handling",
        Severity.WARNING,
        "A catch clause has an empty body, silently discarding the error.",
        "Handle the error, or at minimum record it; never swallow exceptions silently.",
    ),
    RuleInfo(
        "JSSEC-008",
        "Unused/dead code",
        "CWE-561 (Dead Code), CWE-1164 (Irrelevant Code)",
        "Injection",
        Severity.WARNING,
        "Code is unreachable or declared but never referenced.",
        "Delete unreachable statements and unreferenced declarations.",
    ),
    RuleInfo(
        "JSSEC-009",
        "Hard-coded Sensitive Information",
        "CWE-798 (Use of Hard-coded Credentials), CWE-259 (Use of Hard-coded Passwords), and"
        " CWE-693 (Protection Mechanism Failure)",
        "Identification and Authentication Failures",
        Severity.ERROR,
        "A credential-like name is bound to a literal value, or a URL embeds userinfo credentials.",
        "Move secrets to environment variables or a secret store; never commit them to source.",
    ),
    RuleInfo(
        "JSSEC-010",
        "Missing Default in Case Statement",
        "CWE-478 (Missing Default Case in Switch Statement)",
        "Insecure Direct Object References, Injection",
        Severity.WARNING,
        "A switch statement has no default case.",
        "Add a default case that rejects or safely handles unexpected values.",
    ),
    RuleInfo(
        "JSSEC-011",
        "Dynamic Code Execution",
        "CWE-95 (Improper Neutralization of Directives in Dynamically Evaluated Code), CWE-77"
        " (Command Injection), CWE-20 (Improper Input Validation)",
        "Injection",
        Severity.ERROR,
        "Code is built and executed at runtime via eval, the Function constructor, or string timers.",
        "Parse data with JSON.parse and call functions directly instead of evaluating strings.",
    ),
    RuleInfo(
        "JSSEC-012",
        "Coupling between JS and HTML",
        "CWE-116: Improper Encoding or Escaping of Output, CWE-829: Inclusion of Functionality"
        " from Untrusted Control Sphere",
        "Cross-Site Scripting",
        Severity.WARNING,
        "JavaScript is embedded in HTML attributes or javascript: URLs, coupling markup to code.",
        "Move handlers into separate scripts attached with addEventListener.",
    ),
    RuleInfo(
        "JSSEC-013",
        "Active Debugging Code",
        "CWE-489 (Active Debug Code), CWE-215 (Insertion of Sensitive Information Into"
        " Debugging Code)",
        "Sensitive Data Exposure",
        Severity.WARNING,
        "debugger statements, alert calls, or console output remain in the code.",
        "Strip debugging statements before release, or route them through a build-time switch.",
    ),
    RuleInfo(
        "JSSEC-014",
        "Use of Weak Cryptography",
        "CWE-326 (Inadequate Encryption Strength), CWE-327 (Use of a Broken or Risky"
        " Cryptographic Algorithm), CWE-328 (Use of Weak Hash), CWE-1240 (Use of a Risky"
        " Cryptographic Primitive)",
        "Cryptographic Failures",
        Severity.ERROR,
        "A broken or weak algorithm (MD5, SHA-1, DES, RC4, ...) is requested from a crypto API.",
        "Use modern primitives such as SHA-256 or AES-GCM.",
    ),
    RuleInfo(
        "JSSEC-015",
        "Insecure HTTP",
        "CWE-319 (Cleartext Transmission of Sensitive Information)",
        "Cryptographic Failures",
        Severity.ERROR,
        "A request, import, or form target uses cleartext http://.",
        "Serve and fetch every resource over https://.",
    ),
    RuleInfo(
        "JSSEC-016",
        "Unverified Cross-Origin Communications",
        "CWE-345 (Insufficient Verification of Data Authenticity)",
        "Broken Access Control",
        Severity.ERROR,
        "postMessage uses a wildcard target origin, or a message handler never checks the sender.",
        "Pass an explicit target origin and verify event.origin in every message handler.",
    ),
    RuleInfo(
        "JSSEC-017",
        "Insecure DOM Manipulation",
        "CWE-79 (Improper Neutralization of Input During Web Page Generation ('Cross-site"
        " Scripting'))",
        "Injection",
        Severity.ERROR,
        "Dynamic data flows into innerHTML, outerHTML, insertAdjacentHTML, or document.write.",
        "Build nodes with textContent/createElement, or sanitize HTML before inserting it.",
    ),
    RuleInfo(
        "JSSEC-018",
        "Unvalidated Redirect",
        "CWE-20 (Improper Input Validation), CWE-601 (URL Redirection to Untrusted Site ('Open"
        " Redirect'))",
        "Broken Access Control",
        Severity.ERROR,
        "A navigation target comes from dynamic data without validation, or uses a dangerous scheme.",
        "Check redirect targets against an allow-list of trusted destinations.",
    ),
    RuleInfo(
        "JSSEC-019",
        "Prototype Pollution",
        "CWE-1321 (Improperly Controlled Modification of Object Prototype Attributes"
        " ('Prototype Pollution'))",
        "Cross-Site Scripting",
        Severity.ERROR,
        "Writes can reach Object.prototype via __proto__, constructor.prototype, or unchecked merges.",
        "Reject __proto__/constructor/prototype keys; use Object.create(null) maps and"
        " Object.freeze(Object.prototype).",
    ),
    RuleInfo(
        "JSSEC-020",
        "JSON Injection",
        "CWE-74 (Improper Neutralization of Special Elements in Output Used by a Downstream"
        " Component ('Injection')), CWE-116: Improper Encoding or Escaping of Output, CWE-77"
        " (Command Injection)",
        "Injection",
        Severity.ERROR,
        "JSON text is assembled by string concatenation or evaluated instead of parsed.",
        "Produce JSON with JSON.stringify and consume it with JSON.parse after validation.",
    ),
    RuleInfo(
        "JSSEC-021",
        "Unprotected Cookies",
        "CWE-614 (Sensitive Cookie in HTTPS Session Without 'Secure' Attribute), CWE-315"
        " (Cleartext Storage of Sensitive Information in a Cookie), CWE-311 (Missing Encryption"
        " of Sensitive Data), CWE-565 (Reliance on Cookies without Validation and Integrity"
        " Checking)",
        "Insecure Design, Security Misconfiguration",
        Severity.ERROR,
        "A cookie is set without the secure attribute, or cookie values flow into sensitive sinks.",
        "Set secure, HttpOnly, and SameSite on every cookie; never trust cookie values unvalidated.",
    ),
    RuleInfo(
        "JSSEC-022",
        "Logging Sensitive Information",
        "CWE-532 (Insertion of Sensitive Information into Log File), CWE-200 (Exposure of"
        " Sensitive Information to an Unauthorized Actor), CWE-312 (Cleartext Storage of"
        " Sensitive Information)",
        "Security Logging and Monitoring Failures",
        Severity.ERROR,
        "Credential-like values, cookies, or stack traces are written to logs.",
        "Mask or drop sensitive values before logging them.",
    ),
    RuleInfo(
        "JSSEC-023",
        "Insecure File Handling",
        "CWE-434 (Unrestricted Upload of File with Dangerous Type), CWE-646 (Reliance on File"
        " Name or Extension of Externally-Supplied File)",
        "Insecure Data Storage",
        Severity.ERROR,
        "Externally supplied names or data reach filesystem operations without validation.",
        "Validate file names, types, and sizes server-side before touching the filesystem.",
    ),
    RuleInfo(
        "JSSEC-024",
        "Error Handling Disclosure",
        "CWE-209 (Generation of Error Message Containing Sensitive Information), CWE-497"
        " (Exposure of Sensitive System Information to an Unauthorized Control Sphere)",
        "Improper Error Handling",
        Severity.ERROR,
        "Raw error objects, messages, or stack traces are sent back to clients.",
        "Return generic error messages to users; keep details in server-side logs.",
    ),
)

RULES_BY_ID: dict[str, RuleInfo] = {r.rule_id: r for r in RULES}

ALL_RULE_IDS: tuple[str, ...] = tuple(r.rule_id for r in RULES)


def get_rule(rule_id: str) -> RuleInfo:
    return RULES_BY_ID[rule_id]
