"""Lightweight HTML scanning for embedded JavaScript.

Deliberately not a conforming HTML parser: a small scanner that finds script
elements, inline event-handler attributes and javascript: URLs while
preserving exact character offsets into the original file. Attribute values
are taken raw (no entity decoding) so spans stay truthful.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .source import ExternalScript, SourceUnit, Span, UnitKind

_JS_MIME_TYPES = {
    "",
    "module",
    "text/javascript",
    "application/javascript",
    "application/x-javascript",
    "application/ecmascript",
    "text/ecmascript",
}

_TAG_OPEN_RE = re.compile(r"<([a-zA-Z][a-zA-Z0-9:-]*)")
_ATTR_RE = re.compile(
    r"""\s*([^\s=/>"']+)(?:\s*=\s*("([^"]*)"|'([^']*)'|[^\s>]*))?"""
)
_EVENT_ATTR_RE = re.compile(r"^on[a-z]+$")


@dataclass(frozen=True)
class JsUrlAttribute:
    """Attribute whose value is a javascript: URL."""

    path: str
    tag: str
    attr: str
    span: Span


@dataclass
class HtmlExtraction:
    units: list[SourceUnit]
    external_scripts: list[ExternalScript]
    js_urls: list[JsUrlAttribute]


def _attr_value(match: re.Match) -> tuple[str | None, int, int]:
    """Returns (value, value_start, value_end) for an attribute match."""
    if match.group(2) is None:
        return None, -1, -1
    raw = match.group(2)
    if raw[:1] in "\"'":
        return raw[1:-1], match.start(2) + 1, match.end(2) - 1
    return raw, match.start(2), match.end(2)


def extract_scripts_from_html(path: str, text: str) -> HtmlExtraction:
    """Finds script blocks, inline handlers and javascript: URLs in HTML."""
    units: list[SourceUnit] = []
    externals: list[ExternalScript] = []
    js_urls: list[JsUrlAttribute] = []
    script_ordinal = 0
    handler_ordinal = 0
    base_unit = SourceUnit(unit_id=path, path=path, kind=UnitKind.JS_FILE, text=text)
    i = 0
    n = len(text)
    lower = text.lower()
    while i < n:
        lt = text.find("<", i)
        if lt < 0:
            break
        if text.startswith("<!--", lt):
            close = text.find("-->", lt + 4)
            i = n if close < 0 else close + 3
            continue
        if text.startswith("</", lt) or text.startswith("<!", lt) or text.startswith("<?", lt):
            close = text.find(">", lt + 1)
            i = n if close < 0 else close + 1
            continue
        m = _TAG_OPEN_RE.match(text, lt)
        if not m:
            i = lt + 1
            continue
        tag = m.group(1).lower()
        pos = m.end()
        attrs: list[tuple[str, str | None, int, int]] = []
        self_closing = False
        while pos < n:
            if text[pos] == ">":
                pos += 1
                break
            if text.startswith("/>", pos):
                self_closing = True
                pos += 2
                break
            if text[pos] == "/":
                pos += 1
                continue
            am = _ATTR_RE.match(text, pos)
            if not am or am.end() == pos:
                pos += 1
                continue
            value, vstart, vend = _attr_value(am)
            attrs.append((am.group(1).lower(), value, vstart, vend))
            pos = am.end()
        for name, value, vstart, vend in attrs:
            if value is None:
                continue
            if _EVENT_ATTR_RE.match(name):
                handler_ordinal += 1
                units.append(
                    SourceUnit(
                        unit_id=f"{path}#handler{handler_ordinal}",
                        path=path,
                        kind=UnitKind.HTML_INLINE_HANDLER,
                        text=text[vstart:vend],
                        base_offset=vstart,
                        file_text=text,
                        html_context=(tag, name),
                    )
                )
            elif value.strip().lower().startswith("javascript:"):
                js_urls.append(
                    JsUrlAttribute(path=path, tag=tag, attr=name,
                                   span=base_unit.span(vstart, vend))
                )
        if tag in ("script", "style") and not self_closing:
            close = lower.find(f"</{tag}", pos)
            content_end = close if close >= 0 else n
            if tag == "script":
                attr_map = {a[0]: (a[1] or "") for a in attrs}
                src = attr_map.get("src")
                mime = attr_map.get("type", "").strip().lower()
                if src is not None:
                    externals.append(
                        ExternalScript(path=path, src=src, span=base_unit.span(lt, pos))
                    )
                elif mime in _JS_MIME_TYPES:
                    script_ordinal += 1
                    unit = SourceUnit(
                        unit_id=f"{path}#script{script_ordinal}",
                        path=path,
                        kind=UnitKind.HTML_SCRIPT_BLOCK,
                        text=text[pos:content_end],
                        base_offset=pos,
                        file_text=text,
                    )
                    if mime == "module":
                        unit.source_type = "module"
                    units.append(unit)
            i = content_end
            continue
        i = pos
    return HtmlExtraction(units=units, external_scripts=externals, js_urls=js_urls)
