"""Context and data-flow heuristic detectors: XSS, redirects, cookies, pollution."""
from __future__ import annotations

import re

from ..findings import Finding, Severity
from ..nodes import (
    FUNCTION_TYPES,
    Node,
    constant_string_value,
    is_constant_string,
    member_path,
    property_name,
    unwrap_chain,
    walk,
    walk_same_function,
)
from ..taint import is_sanitizer_name
from .base import (
    RunContext,
    UnitContext,
    is_sensitive_name,
    normalized_callee_path,
    registered_message_handler,
    resolve_function,
    strip_global_aliases,
)

_JSON_FRAGMENT_RE = re.compile(r"\{\s*\"|\"\s*:")
_SECURE_ATTR_RE = re.compile(r"(?:^|[;\s])secure(?:[;\s=]|$)", re.IGNORECASE)
_STACKY_WORD_RE = re.compile(r"\b(stack|trace)\b", re.IGNORECASE)
_PROTO_KEYS = ("__proto__", "constructor", "prototype")

_HTML_SINK_PROPS = {"innerHTML", "outerHTML"}
_REDIRECT_CALL_PATHS = {("location", "assign"), ("location", "replace"),
                        ("document", "location", "assign"),
                        ("document", "location", "replace")}
_RESPONSE_NAMES = {"res", "response"}


def _call_path(node: Node) -> list[str] | None:
    return normalized_callee_path(node.callee) if node.type in (
        "CallExpression", "NewExpression") else None


# --- JSSEC-016: cross-origin messaging ---

def check_unverified_cross_origin(ctx: UnitContext) -> list[Finding]:
    out = []
    for node in walk(ctx.tree.root):
        if node.type != "CallExpression":
            continue
        callee = unwrap_chain(node.callee)
        name = callee.name if callee.type == "Identifier" else (
            property_name(callee.property)
            if callee.type == "MemberExpression" and not callee.computed else None)
        if name == "postMessage" and len(node.arguments) >= 2:
            target = unwrap_chain(node.arguments[1])
            if is_constant_string(target) and constant_string_value(target) == "*":
                out.append(ctx.finding(
                    "JSSEC-016", node.start, node.end,
                    "postMessage uses the wildcard '*' target origin"))
    for node in walk(ctx.tree.root):
        if node.type not in ("CallExpression", "AssignmentExpression"):
            continue
        handler = registered_message_handler(node, ctx)
        if handler is None:
            continue
        if not _handler_checks_sender(handler):
            out.append(ctx.finding(
                "JSSEC-016", node.start, node.end,
                "message handler never verifies the sender"
                " (no event.origin/event.source check)"))
    return out


def _handler_checks_sender(handler: Node) -> bool:
    params = handler.get("params") or []
    if not params or params[0].type != "Identifier":
        return False
    event_name = params[0].name
    for node in walk(handler.body):
        if node.type == "MemberExpression" and not node.computed \
                and node.object.type == "Identifier" \
                and node.object.name == event_name \
                and node.property.type == "Identifier" \
                and node.property.name in ("origin", "source"):
            return True
    return False


# --- JSSEC-017: DOM sinks ---

def _html_sink_assignment(node: Node) -> tuple[Node, str] | None:
    if node.type != "AssignmentExpression":
        return None
    lhs = unwrap_chain(node.left)
    if lhs.type == "MemberExpression" and not lhs.computed \
            and lhs.property.type == "Identifier" \
            and lhs.property.name in _HTML_SINK_PROPS:
        return node.right, lhs.property.name
    return None


def check_insecure_dom_manipulation(ctx: UnitContext) -> list[Finding]:
    out = []
    for node in walk(ctx.tree.root):
        sink = _html_sink_assignment(node)
        if sink is not None:
            value, prop = sink
            if is_constant_string(unwrap_chain(value)):
                continue
            taint = ctx.taint_of(unwrap_chain(value))
            if taint is not None:
                out.append(ctx.finding(
                    "JSSEC-017", node.start, node.end,
                    f"untrusted data ({taint.description}) flows into {prop}",
                    severity=Severity.ERROR, taint=taint,
                    sink_label=f"{prop} assignment"))
            else:
                out.append(ctx.finding(
                    "JSSEC-017", node.start, node.end,
                    f"dynamic value assigned to {prop}",
                    severity=Severity.WARNING))
            continue
        path = _call_path(node)
        if path is None:
            continue
        if path[-1] == "insertAdjacentHTML" and len(node.arguments) >= 2:
            value = unwrap_chain(node.arguments[1])
            if is_constant_string(value):
                continue
            taint = ctx.taint_of(value)
            if taint is not None:
                out.append(ctx.finding(
                    "JSSEC-017", node.start, node.end,
                    f"untrusted data ({taint.description}) flows into"
                    " insertAdjacentHTML",
                    severity=Severity.ERROR, taint=taint,
                    sink_label="insertAdjacentHTML call"))
            else:
                out.append(ctx.finding(
                    "JSSEC-017", node.start, node.end,
                    "dynamic value passed to insertAdjacentHTML",
                    severity=Severity.WARNING))
        elif path in (["document", "write"], ["document", "writeln"]):
            taint = None
            for arg in node.arguments:
                taint = ctx.taint_of(unwrap_chain(arg))
                if taint is not None:
                    break
            name = path[-1]
            if taint is not None:
                out.append(ctx.finding(
                    "JSSEC-017", node.start, node.end,
                    f"untrusted data ({taint.description}) flows into"
                    f" document.{name}",
                    severity=Severity.ERROR, taint=taint,
                    sink_label=f"document.{name} call"))
            else:
                out.append(ctx.finding(
                    "JSSEC-017", node.start, node.end,
                    f"document.{name} writes directly into the document",
                    severity=Severity.WARNING))
    return out


# --- JSSEC-018: redirects ---

def _redirect_target(node: Node) -> tuple[Node, str] | None:
    """(value, sink label) when node navigates the page or redirects."""
    if node.type == "AssignmentExpression" and node.operator == "=":
        lhs = unwrap_chain(node.left)
        path = member_path(lhs)
        if path:
            path = strip_global_aliases(path)
            if path == ["location"] or (len(path) == 2 and path[0] == "location"
                                        and path[1] == "href"):
                return node.right, "location assignment"
            if path[0] == "document" and len(path) >= 2 and path[1] == "location":
                return node.right, "location assignment"
        if lhs.type == "Identifier" and lhs.name == "location":
            return node.right, "location assignment"
    if node.type == "CallExpression":
        path = _call_path(node)
        if path is not None and node.arguments:
            if tuple(path) in _REDIRECT_CALL_PATHS:
                return node.arguments[0], f"location.{path[-1]} call"
            if len(path) == 2 and path[0] in _RESPONSE_NAMES \
                    and path[1] == "redirect":
                return node.arguments[-1], "res.redirect call"
    return None


def _names_in(node: Node) -> set[str]:
    names = set()
    for n in walk(node):
        if n.type == "Identifier":
            names.add(n.name)
    return names


def _guarded_by_conditional(ctx: UnitContext, node: Node, value: Node) -> bool:
    value_names = _names_in(value)
    if not value_names:
        return False
    for anc in ctx.ancestors(node):
        if anc.type in FUNCTION_TYPES:
            break
        if anc.type in ("IfStatement", "ConditionalExpression") \
                and _names_in(anc.test) & value_names:
            return True
    return False


def check_unvalidated_redirect(ctx: UnitContext) -> list[Finding]:
    out = []
    for node in walk(ctx.tree.root):
        hit = _redirect_target(node)
        if hit is None:
            continue
        value, label = hit
        value = unwrap_chain(value)
        literal = constant_string_value(value) if is_constant_string(value) else None
        if literal is not None:
            low = literal.strip().lower()
            if low.startswith(("javascript:", "data:")):
                out.append(ctx.finding(
                    "JSSEC-018", node.start, node.end,
                    f"{label} uses the unsafe scheme"
                    f" '{low.split(':', 1)[0]}:'"))
            elif low.startswith("//"):
                out.append(ctx.finding(
                    "JSSEC-018", node.start, node.end,
                    f"{label} targets a protocol-relative URL, which can leave"
                    " the origin",
                    notes=["'//' targets are reported although same-origin"
                           " guidance often treats them as safe"]))
            continue
        if value.type in ("CallExpression", "NewExpression"):
            callee = unwrap_chain(value.callee)
            name = callee.name if callee.type == "Identifier" else (
                callee.property.name if callee.type == "MemberExpression"
                and not callee.computed
                and callee.property.type == "Identifier" else None)
            if is_sanitizer_name(name, ctx.cfg.pattern("sanitizers")):
                continue
        if _guarded_by_conditional(ctx, node, value):
            continue
        taint = ctx.taint_of(value)
        out.append(ctx.finding(
            "JSSEC-018", node.start, node.end,
            f"{label} uses a dynamic target without validation",
            taint=taint, sink_label=label if taint else None))
    return out


# --- JSSEC-019: prototype pollution ---

def _has_object_prototype_freeze(root: Node) -> bool:
    for node in walk(root):
        if node.type == "CallExpression":
            path = _call_path(node)
            if path == ["Object", "freeze"] and node.arguments:
                arg_path = member_path(unwrap_chain(node.arguments[0]))
                if arg_path == ["Object", "prototype"]:
                    return True
    return False


def _member_key_names(node: Node) -> list[str]:
    """Property names along a member chain, literal computed keys included."""
    names = []
    cur = unwrap_chain(node)
    while cur.type == "MemberExpression":
        prop = cur.property
        if cur.computed:
            p = unwrap_chain(prop)
            if p.type == "Literal" and isinstance(p.value, str):
                names.append(p.value)
        elif prop.type == "Identifier":
            names.append(prop.name)
        cur = unwrap_chain(cur.object)
    names.reverse()
    return names


def _prototype_write_path(lhs: Node) -> str | None:
    keys = _member_key_names(lhs)
    if not keys:
        return None
    if "__proto__" in keys:
        return "__proto__"
    path = member_path(unwrap_chain(lhs))
    if path and len(path) > 2 and path[0] == "Object" and path[1] == "prototype":
        return "Object.prototype"
    for i in range(len(keys) - 1):
        if keys[i] == "constructor" and keys[i + 1] == "prototype":
            return "constructor.prototype"
    return None


def _null_proto_objects(ctx: UnitContext) -> set[str]:
    names = set()
    for node in walk(ctx.tree.root):
        if node.type == "VariableDeclarator" and node.get("init") is not None:
            init = unwrap_chain(node.init)
            if init.type == "CallExpression" \
                    and _call_path(init) == ["Object", "create"] \
                    and init.arguments \
                    and unwrap_chain(init.arguments[0]).type == "Literal" \
                    and unwrap_chain(init.arguments[0]).value is None \
                    and node.id.type == "Identifier":
                names.add(node.id.name)
    return names


def _root_identifier(node: Node) -> str | None:
    cur = unwrap_chain(node)
    while cur.type == "MemberExpression":
        cur = unwrap_chain(cur.object)
    return cur.name if cur.type == "Identifier" else None


def _forin_merge_findings(ctx: UnitContext, node: Node) -> list[Finding]:
    """Merge loops copying keys from parsed JSON without a key check."""
    if node.type != "ForInStatement":
        return []
    left = node.left
    if left.type == "VariableDeclaration":
        left = left.declarations[0].id
    if left.type != "Identifier":
        return []
    key_name = left.name
    src_names = set()
    copies = []
    for inner in walk_same_function(node.body):
        if inner.type == "AssignmentExpression" and inner.operator == "=" \
                and unwrap_chain(inner.left).type == "MemberExpression":
            lhs = unwrap_chain(inner.left)
            rhs = unwrap_chain(inner.right)
            if lhs.computed and unwrap_chain(lhs.property).type == "Identifier" \
                    and unwrap_chain(lhs.property).name == key_name \
                    and rhs.type == "MemberExpression" and rhs.computed:
                src = _root_identifier(rhs)
                if src:
                    src_names.add(src)
                    copies.append(inner)
    if not copies:
        return []
    right_root = _root_identifier(node.right)
    if right_root:
        src_names.add(right_root)
    if not _merge_source_is_parsed_json(ctx, node, src_names):
        return []
    if _loop_checks_keys(node.body, key_name):
        return []
    return [ctx.finding(
        "JSSEC-019", node.start, node.end,
        "for-in merge copies keys from parsed JSON without filtering"
        " __proto__/constructor/prototype")]


def _merge_source_is_parsed_json(ctx: UnitContext, loop: Node,
                                 src_names: set[str]) -> bool:
    owner = ctx.enclosing_function(loop)
    region = owner.body if owner is not None else ctx.tree.root
    for node in walk_same_function(region):
        if node.type == "VariableDeclarator" and node.get("init") is not None \
                and node.id.type == "Identifier" and node.id.name in src_names:
            if _is_json_parse_of_suspicious(node.init):
                return True
        if node.type == "AssignmentExpression" and node.operator == "=" \
                and unwrap_chain(node.left).type == "Identifier" \
                and unwrap_chain(node.left).name in src_names:
            if _is_json_parse_of_suspicious(node.right):
                return True
    return False


def _is_json_parse_of_suspicious(node: Node) -> bool:
    node = unwrap_chain(node)
    if node.type != "CallExpression" or _call_path(node) != ["JSON", "parse"]:
        return False
    if not node.arguments:
        return False
    arg = unwrap_chain(node.arguments[0])
    if is_constant_string(arg):
        value = constant_string_value(arg) or ""
        return any(key in value for key in _PROTO_KEYS)
    return True


def _loop_checks_keys(body: Node, key_name: str) -> bool:
    for node in walk(body):
        if node.type == "IfStatement":
            test = node.test
            names = _names_in(test)
            if key_name not in names:
                continue
            for lit in walk(test):
                if lit.type == "Literal" and lit.value in _PROTO_KEYS:
                    return True
                if lit.type == "CallExpression":
                    path = _call_path(lit)
                    if path and path[-1] == "hasOwnProperty":
                        return True
    return False


def check_prototype_pollution(ctx: UnitContext) -> list[Finding]:
    if _has_object_prototype_freeze(ctx.tree.root):
        return []
    null_proto = _null_proto_objects(ctx)
    out = []
    for node in walk(ctx.tree.root):
        if node.type == "AssignmentExpression":
            target = _prototype_write_path(unwrap_chain(node.left))
            if target is not None:
                out.append(ctx.finding(
                    "JSSEC-019", node.start, node.end,
                    f"assignment modifies {target}, polluting shared objects"))
                continue
            lhs = unwrap_chain(node.left)
            if lhs.type == "MemberExpression" and lhs.computed \
                    and unwrap_chain(lhs.object).type == "MemberExpression" \
                    and unwrap_chain(lhs.object).computed:
                root = _root_identifier(lhs)
                if root in null_proto:
                    continue
                keys = [lhs.property, unwrap_chain(lhs.object).property]
                taint = None
                for key in keys:
                    taint = ctx.taint_of(unwrap_chain(key))
                    if taint is not None:
                        break
                if taint is not None:
                    out.append(ctx.finding(
                        "JSSEC-019", node.start, node.end,
                        "nested computed assignment with untrusted keys can"
                        " reach Object.prototype",
                        taint=taint, sink_label="nested computed assignment"))
        out.extend(_forin_merge_findings(ctx, node))
    return out


# --- JSSEC-020: JSON assembly ---

def _flatten_concat(node: Node) -> list[Node] | None:
    node = unwrap_chain(node)
    if node.type == "BinaryExpression" and node.operator == "+":
        left = _flatten_concat(node.left)
        right = _flatten_concat(node.right)
        if left is None or right is None:
            return None
        return left + right
    return [node]


def _is_stringify_call(node: Node) -> bool:
    node = unwrap_chain(node)
    return node.type == "CallExpression" and _call_path(node) == ["JSON", "stringify"]


def _manual_json_site(node: Node) -> bool:
    """True when literal JSON fragments sit next to interpolated values."""
    node = unwrap_chain(node)
    if node.type == "BinaryExpression" and node.operator == "+":
        parts = _flatten_concat(node)
        if parts is None:
            return False
        for i, part in enumerate(parts):
            part = unwrap_chain(part)
            if not is_constant_string(part):
                continue
            value = constant_string_value(part) or ""
            if not _JSON_FRAGMENT_RE.search(value):
                continue
            neighbors = [p for p in (parts[i - 1] if i > 0 else None,
                                     parts[i + 1] if i + 1 < len(parts) else None)
                         if p is not None]
            for other in neighbors:
                other = unwrap_chain(other)
                if not is_constant_string(other) and not _is_stringify_call(other):
                    return True
    if node.type == "TemplateLiteral" and node.expressions:
        for quasi in node.quasis:
            value = quasi.get("cooked") or ""
            if _JSON_FRAGMENT_RE.search(value):
                if not all(_is_stringify_call(e) for e in node.expressions):
                    return True
    return False


def _mentions_json(node: Node) -> bool:
    for n in walk(node):
        if n.type == "Identifier" and "json" in n.name.lower():
            return True
        if is_constant_string(n):
            value = constant_string_value(n) or ""
            if _JSON_FRAGMENT_RE.search(value):
                return True
    return False


def check_json_injection(ctx: UnitContext) -> list[Finding]:
    out = []
    flagged: set[int] = set()
    for node in walk(ctx.tree.root):
        if node.type == "CallExpression" and _call_path(node) == ["eval"]:
            if node.arguments and _mentions_json(node.arguments[0]):
                out.append(ctx.finding(
                    "JSSEC-020", node.start, node.end,
                    "eval used to parse JSON text; use JSON.parse instead"))
                for inner in walk(node):
                    flagged.add(id(inner))
            continue
        if id(node) in flagged:
            continue
        if node.type in ("BinaryExpression", "TemplateLiteral") \
                and _manual_json_site(node):
            if any(id(a) in flagged for a in ctx.ancestors(node)):
                continue
            parent = ctx.parent(node)
            if parent is not None and parent.type == "BinaryExpression" \
                    and parent.operator == "+":
                continue  # report the outermost concatenation once
            out.append(ctx.finding(
                "JSSEC-020", node.start, node.end,
                "JSON text assembled from string fragments; use"
                " JSON.stringify instead"))
    return out


# --- JSSEC-021: cookies ---

def _constant_parts(node: Node) -> tuple[list[str], bool]:
    """(literal fragments, fully_constant) across concat/template values."""
    node = unwrap_chain(node)
    if is_constant_string(node):
        return [constant_string_value(node) or ""], True
    if node.type == "TemplateLiteral":
        return [q.get("cooked") or "" for q in node.quasis], False
    if node.type == "BinaryExpression" and node.operator == "+":
        left_parts, left_const = _constant_parts(node.left)
        right_parts, right_const = _constant_parts(node.right)
        return left_parts + right_parts, left_const and right_const
    return [], False


def check_unprotected_cookies(ctx: UnitContext) -> list[Finding]:
    out = []
    for node in walk(ctx.tree.root):
        if node.type == "AssignmentExpression":
            path = member_path(unwrap_chain(node.left))
            if path and strip_global_aliases(path) == ["document", "cookie"]:
                parts, _const = _constant_parts(node.right)
                if any(_SECURE_ATTR_RE.search(p) for p in parts):
                    continue
                notes = []
                if not parts:
                    notes.append("cookie string is not statically known")
                out.append(ctx.finding(
                    "JSSEC-021", node.start, node.end,
                    "cookie is set without the Secure attribute",
                    notes=notes))
            continue
        if node.type != "CallExpression":
            continue
        path = _call_path(node)
        if path is not None and len(path) == 2 and path[0] in _RESPONSE_NAMES \
                and path[1] == "cookie" and len(node.arguments) >= 2:
            if len(node.arguments) < 3:
                out.append(ctx.finding(
                    "JSSEC-021", node.start, node.end,
                    "res.cookie called without an options object"
                    " (no secure attribute)"))
                continue
            opts = unwrap_chain(node.arguments[2])
            if opts.type == "ObjectExpression":
                secure = None
                for prop in opts.properties:
                    if prop.type == "Property" and property_name(prop.key) == "secure":
                        secure = unwrap_chain(prop.value)
                if secure is None or (secure.type == "Literal"
                                      and secure.value is not True):
                    out.append(ctx.finding(
                        "JSSEC-021", node.start, node.end,
                        "res.cookie options do not set secure: true"))
            continue
        sink = _cookie_sink_label(node)
        if sink is not None:
            arg = node.arguments[0] if node.arguments else None
            if arg is None:
                continue
            taint = ctx.taint_of(unwrap_chain(arg))
            if taint is not None and taint.kind == "cookie":
                out.append(ctx.finding(
                    "JSSEC-021", node.start, node.end,
                    f"cookie value reaches {sink} without validation",
                    taint=taint, sink_label=sink,
                    notes=["validation detection is name-based (sanitizer"
                           " list)"]))
    for node in walk(ctx.tree.root):
        hit = _html_sink_assignment(node)
        if hit is None:
            continue
        value, prop = hit
        taint = ctx.taint_of(unwrap_chain(value))
        if taint is not None and taint.kind == "cookie":
            out.append(ctx.finding(
                "JSSEC-021", node.start, node.end,
                f"cookie value reaches {prop} without validation",
                taint=taint, sink_label=f"{prop} assignment",
                notes=["validation detection is name-based (sanitizer list)"]))
    return out


def _cookie_sink_label(node: Node) -> str | None:
    path = _call_path(node)
    if path is None:
        return None
    if path == ["eval"]:
        return "eval"
    if path in (["document", "write"], ["document", "writeln"]):
        return "document.write"
    if tuple(path) in _REDIRECT_CALL_PATHS:
        return "a redirect"
    return None


# --- JSSEC-022: logging ---

def _log_call(ctx: UnitContext, node: Node) -> tuple[str, str] | None:
    """(logger path, level) for console/configured-logger calls."""
    path = _call_path(node)
    if path is None or len(path) < 2:
        return None
    base = ".".join(path[:-1])
    if path[0] == "console" and len(path) == 2:
        return "console", path[-1]
    for logger in ctx.cfg.pattern("loggers"):
        if base == logger:
            return logger, path[-1]
    return None


def check_logging_sensitive(ctx: UnitContext) -> list[Finding]:
    out = []
    for node in walk(ctx.tree.root):
        if node.type != "CallExpression":
            continue
        log = _log_call(ctx, node)
        if log is None:
            continue
        logger, level = log
        for arg in node.arguments:
            arg = unwrap_chain(arg)
            reason = _sensitive_log_argument(ctx, arg, level)
            if reason is not None:
                out.append(ctx.finding(
                    "JSSEC-022", node.start, node.end,
                    f"{logger}.{level} writes {reason} to the log"))
                break
    return out


def _sensitive_log_argument(ctx: UnitContext, arg: Node, level: str) -> str | None:
    for node in walk(arg):
        if node.type == "Identifier" and is_sensitive_name(node.name, ctx.cfg):
            return f"sensitive value '{node.name}'"
        if node.type == "MemberExpression" and not node.computed \
                and node.property.type == "Identifier":
            path = member_path(node)
            if path and strip_global_aliases(path) == ["document", "cookie"]:
                return "document.cookie"
            name = node.property.name
            if is_sensitive_name(name, ctx.cfg):
                return f"sensitive value '{name}'"
            if name == "stack" and level != "error":
                return "an exception stack trace"
    return None


# --- JSSEC-023: filesystem sinks ---

def check_insecure_file_handling(ctx: UnitContext) -> list[Finding]:
    sinks = set(ctx.cfg.pattern("fs_sinks"))
    out = []
    for node in walk(ctx.tree.root):
        if node.type != "CallExpression":
            continue
        path = _call_path(node)
        if path is None or path[-1] not in sinks or not node.arguments:
            continue
        arg = unwrap_chain(node.arguments[0])
        taint = ctx.taint_of(arg)
        if taint is None:
            continue
        out.append(ctx.finding(
            "JSSEC-023", node.start, node.end,
            f"externally controlled value ({taint.description}) used in"
            f" filesystem operation {path[-1]}",
            taint=taint, sink_label=f"{path[-1]} call"))
    return out


# --- JSSEC-024: error disclosure ---

def _response_send_call(node: Node) -> str | None:
    if node.type != "CallExpression":
        return None
    callee = unwrap_chain(node.callee)
    if callee.type != "MemberExpression" or callee.computed \
            or callee.property.type != "Identifier":
        return None
    method = callee.property.name
    cur = unwrap_chain(callee.object)
    while True:
        if cur.type == "MemberExpression":
            cur = unwrap_chain(cur.object)
        elif cur.type == "CallExpression":
            cur = unwrap_chain(cur.callee)
        else:
            break
    if cur.type == "Identifier" and cur.name in _RESPONSE_NAMES:
        return method
    return None


def _catch_bound_names(ctx: UnitContext, node: Node) -> set[str]:
    names = set()
    for anc in ctx.ancestors(node):
        if anc.type == "CatchClause" and anc.get("param") is not None \
                and anc.param.type == "Identifier":
            names.add(anc.param.name)
    return names


def _is_errorish(name: str, err_names: set[str]) -> bool:
    return name in err_names or name.lower() in ("err", "error")


def _member_root(node: Node) -> Node:
    node = unwrap_chain(node)
    while node.type == "MemberExpression":
        node = unwrap_chain(node.object)
    return node


def _discloses_error(ctx: UnitContext, arg: Node, err_names: set[str]) -> str | None:
    for node in walk(arg):
        if node.type == "MemberExpression" and not node.computed \
                and node.property.type == "Identifier" \
                and node.property.name in ("stack", "message"):
            root = _member_root(node)
            if root.type == "Identifier" and _is_errorish(root.name, err_names):
                return f"error .{node.property.name}"
        if node.type == "Identifier" and _is_errorish(node.name, err_names):
            parent = ctx.parent(node)
            if parent is not None and parent.type == "MemberExpression" \
                    and parent.get("property") is node and not parent.computed:
                continue  # a .err property name, not the error object
            if parent is not None and parent.type == "Property" \
                    and parent.get("key") is node and not parent.computed \
                    and parent.get("value") is not node:
                continue  # an object key named err/error
            return f"caught error object '{node.name}'"
    return None


def _stacky_literal_with_dynamic(node: Node) -> bool:
    node = unwrap_chain(node)
    if node.type == "TemplateLiteral" and node.expressions:
        return any(_STACKY_WORD_RE.search(q.get("cooked") or "")
                   for q in node.quasis)
    if node.type == "BinaryExpression" and node.operator == "+":
        parts = _flatten_concat(node) or []
        has_dynamic = any(not is_constant_string(unwrap_chain(p)) for p in parts)
        has_stacky = any(
            is_constant_string(unwrap_chain(p))
            and _STACKY_WORD_RE.search(constant_string_value(unwrap_chain(p)) or "")
            for p in parts)
        return has_dynamic and has_stacky
    return False


def check_error_disclosure(ctx: UnitContext) -> list[Finding]:
    sinks = set(ctx.cfg.pattern("response_sinks"))
    out = []
    for node in walk(ctx.tree.root):
        method = _response_send_call(node)
        if method is None or method not in sinks:
            continue
        err_names = _catch_bound_names(ctx, node)
        for arg in node.arguments:
            reason = _discloses_error(ctx, unwrap_chain(arg), err_names)
            if reason is not None:
                out.append(ctx.finding(
                    "JSSEC-024", node.start, node.end,
                    f"res.{method} sends {reason} to the client"))
                break
            if _stacky_literal_with_dynamic(arg):
                out.append(ctx.finding(
                    "JSSEC-024", node.start, node.end,
                    f"res.{method} response interpolates stack/trace details"))
                break
    return out
