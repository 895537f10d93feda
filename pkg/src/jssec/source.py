"""Source units and position bookkeeping shared across the analyzer."""
from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from enum import Enum


class UnitKind(Enum):
    JS_FILE = "js_file"
    HTML_SCRIPT_BLOCK = "html_script_block"
    HTML_INLINE_HANDLER = "html_inline_handler"


@dataclass(frozen=True)
class Span:
    """Half-open character range with 1-based line/column endpoints."""

    start: int
    end: int
    start_line: int
    start_col: int
    end_line: int
    end_col: int


class LineMap:
    """Maps character offsets in a text to 1-based line/column pairs."""

    def __init__(self, text: str):
        self.text = text
        offsets = [0]
        i = 0
        n = len(text)
        while i < n:
            c = text[i]
            if c == "\r":
                i += 2 if text.startswith("\r\n", i) else 1
                offsets.append(i)
            elif c in "\n\u2028\u2029":
                i += 1
                offsets.append(i)
            else:
                i += 1
        self.offsets = offsets

    def linecol(self, offset: int) -> tuple[int, int]:
        line = bisect.bisect_right(self.offsets, offset)
        return line, offset - self.offsets[line - 1] + 1


@dataclass
class SourceUnit:
    """One analyzable chunk of JavaScript.

    For HTML-embedded units, ``base_offset`` locates ``text`` inside the
    containing file and ``file_text`` carries the full HTML so spans map back
    to positions in the original file.
    """

    unit_id: str
    path: str
    kind: UnitKind
    text: str
    base_offset: int = 0
    file_text: str | None = None
    source_type: str = "script"
    html_context: tuple[str, str] | None = None  # (tag, attribute) for inline handlers
    _linemap: LineMap | None = field(default=None, repr=False, compare=False)

    def linemap(self) -> LineMap:
        if self._linemap is None:
            base = self.file_text if self.file_text is not None else self.text
            self._linemap = LineMap(base)
        return self._linemap

    def span(self, start: int, end: int) -> Span:
        """Builds a Span in containing-file coordinates from unit offsets."""
        lm = self.linemap()
        a = start + self.base_offset
        b = end + self.base_offset
        sl, sc = lm.linecol(a)
        el, ec = lm.linecol(b)
        return Span(a, b, sl, sc, el, ec)


@dataclass(frozen=True)
class ParseDiagnostic:
    """Parse failure or parse-adjacent warning for one unit."""

    unit_id: str
    path: str
    message: str
    span: Span
    recoverable: bool = False


@dataclass(frozen=True)
class ExternalScript:
    """Record of a <script src=...> reference found during HTML extraction."""

    path: str
    src: str
    span: Span


@dataclass(frozen=True)
class SkippedFile:
    path: str
    reason: str
