"""ECMAScript 2020 tokenizer producing position-annotated tokens.

Comments are collected on the side rather than interleaved: suppression
directives, logical-LOC counting and comment-only catch detection all need
them, while the parser never sees them.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

KEYWORDS = frozenset(
    """
    break case catch class const continue debugger default delete do else enum
    export extends false finally for function if import in instanceof new null
    return super switch this throw true try typeof var void while with
    """.split()
)

# Keyword values after which a `/` starts a regular expression. await and
# yield are contextual but act as operators in practice.
_REGEX_AFTER_KEYWORD = (KEYWORDS - {"this", "true", "false", "null", "super"}) | {
    "await",
    "yield",
}

_PUNCTUATORS = sorted(
    [
        ">>>=", "...", "===", "!==", "**=", "<<=", ">>=", ">>>", "&&=", "||=",
        "??=", "=>", "==", "!=", "<=", ">=", "&&", "||", "??", "?.", "++",
        "--", "**", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<",
        ">>", "{", "}", "(", ")", "[", "]", ";", ",", "<", ">", "+", "-",
        "*", "/", "%", "&", "|", "^", "!", "~", "?", ":", "=", ".",
    ],
    key=len,
    reverse=True,
)

_LINE_TERMINATORS = "\n\r  "

_NUMBER_RE = re.compile(
    r"""
    0[xX][0-9a-fA-F](?:_?[0-9a-fA-F])*n?
    | 0[oO][0-7](?:_?[0-7])*n?
    | 0[bB][01](?:_?[01])*n?
    | 0[0-7]+(?![0-9.eEn])
    | 0[0-9]+(?:\.[0-9]*)?(?:[eE][+-]?[0-9]+)?
    | (?:(?:0|[1-9](?:_?[0-9])*)(?:\.(?:[0-9](?:_?[0-9])*)?)?|\.[0-9](?:_?[0-9])*)
      (?:[eE][+-]?[0-9](?:_?[0-9])*)?n?
    """,
    re.VERBOSE,
)

_ESCAPES = {"n": "\n", "t": "\t", "r": "\r", "b": "\b", "f": "\f", "v": "\v", "0": "\0"}


@dataclass
class Token:
    kind: str  # NAME NUM STR TEMPLATE REGEX PUNCT PRIVATE EOF
    value: str
    start: int
    end: int
    nl_before: bool
    cooked: object = None
    sub: str = ""  # template position: full head middle tail
    kw_close: bool = False  # `)` closing an if/for/while/with/switch/catch head


@dataclass(frozen=True)
class Comment:
    kind: str  # line | block
    start: int
    end: int
    text: str  # body without delimiters


class TokenizerError(Exception):
    def __init__(self, message: str, pos: int):
        super().__init__(message)
        self.message = message
        self.pos = pos


def _is_id_start(c: str) -> bool:
    return c.isalpha() or c in "_$" or (ord(c) > 127 and c.isalpha())


def _is_id_part(c: str) -> bool:
    return c.isalnum() or c in "_$‌‍" or (ord(c) > 127 and c.isalpha())


class Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: list[Token] = []
        self.comments: list[Comment] = []
        # Markers for `}` disambiguation: "block" from `{`, "template" from `${`.
        self._brace_stack: list[str] = []
        self._paren_stack: list[bool] = []
        self._nl = False

    def tokenize(self) -> tuple[list[Token], list[Comment]]:
        text = self.text
        if text.startswith("#!"):
            end = self._line_end(0)
            self.comments.append(Comment("line", 0, end, text[2:end]))
            self.pos = end
        while True:
            self._skip_blanks()
            if self.pos >= len(text):
                self.tokens.append(Token("EOF", "", self.pos, self.pos, self._nl))
                return self.tokens, self.comments
            self._next_token()

    def _line_end(self, pos: int) -> int:
        text = self.text
        while pos < len(text) and text[pos] not in _LINE_TERMINATORS:
            pos += 1
        return pos

    def _skip_blanks(self):
        text = self.text
        n = len(text)
        while self.pos < n:
            c = text[self.pos]
            if c in _LINE_TERMINATORS:
                self._nl = True
                self.pos += 1
            elif c.isspace() or c == "﻿":
                self.pos += 1
            elif c == "/" and text.startswith("//", self.pos):
                end = self._line_end(self.pos + 2)
                self.comments.append(Comment("line", self.pos, end, text[self.pos + 2 : end]))
                self.pos = end
            elif c == "/" and text.startswith("/*", self.pos):
                end = text.find("*/", self.pos + 2)
                if end < 0:
                    raise TokenizerError("unterminated block comment", self.pos)
                body = text[self.pos + 2 : end]
                self.comments.append(Comment("block", self.pos, end + 2, body))
                if any(t in body for t in _LINE_TERMINATORS):
                    self._nl = True
                self.pos = end + 2
            else:
                return

    def _emit(self, kind: str, value: str, start: int, **extra):
        tok = Token(kind, value, start, self.pos, self._nl, **extra)
        self.tokens.append(tok)
        self._nl = False
        return tok

    def _next_token(self):
        text = self.text
        start = self.pos
        c = text[start]
        if c in "\"'":
            return self._scan_string()
        if c == "`":
            return self._scan_template(start)
        if c.isdigit() or (c == "." and start + 1 < len(text) and text[start + 1].isdigit()):
            return self._scan_number()
        if c == "#":
            self.pos += 1
            name = self._scan_id_body()
            if not name:
                raise TokenizerError("invalid character '#'", start)
            return self._emit("PRIVATE", text[start : self.pos], start, cooked=name)
        if _is_id_start(c) or c == "\\":
            name = self._scan_id_body()
            if not name:
                raise TokenizerError(f"invalid character {c!r}", start)
            return self._emit("NAME", text[start : self.pos], start, cooked=name)
        if c == "/" and self._regex_allowed():
            return self._scan_regex()
        return self._scan_punct()

    def _scan_id_body(self) -> str:
        text = self.text
        n = len(text)
        out: list[str] = []
        first = True
        while self.pos < n:
            c = text[self.pos]
            if c == "\\" and self.pos + 1 < n and text[self.pos + 1] == "u":
                decoded, consumed = self._decode_unicode_escape(self.pos + 1)
                out.append(decoded)
                self.pos += 1 + consumed
            elif (first and _is_id_start(c)) or (not first and _is_id_part(c)):
                out.append(c)
                self.pos += 1
            else:
                break
            first = False
        return "".join(out)

    def _decode_unicode_escape(self, pos: int) -> tuple[str, int]:
        """Decodes from the 'u' of a \\u escape; returns (char, chars consumed)."""
        text = self.text
        if text.startswith("u{", pos):
            end = text.find("}", pos + 2)
            if end < 0:
                raise TokenizerError("unterminated unicode escape", pos)
            try:
                return chr(int(text[pos + 2 : end], 16)), end - pos + 1
            except ValueError:
                raise TokenizerError("invalid unicode escape", pos) from None
        hexpart = text[pos + 1 : pos + 5]
        if len(hexpart) < 4 or any(h not in "0123456789abcdefABCDEF" for h in hexpart):
            raise TokenizerError("invalid unicode escape", pos)
        return chr(int(hexpart, 16)), 5

    def _scan_string(self):
        text = self.text
        start = self.pos
        quote = text[start]
        self.pos += 1
        out: list[str] = []
        n = len(text)
        while True:
            if self.pos >= n:
                raise TokenizerError("unterminated string literal", start)
            c = text[self.pos]
            if c == quote:
                self.pos += 1
                break
            if c in _LINE_TERMINATORS:
                raise TokenizerError("unterminated string literal", start)
            if c == "\\":
                self.pos += 1
                cooked = self._scan_escape()
                if cooked:
                    out.append(cooked)
            else:
                out.append(c)
                self.pos += 1
        return self._emit("STR", text[start : self.pos], start, cooked="".join(out))

    def _scan_escape(self) -> str:
        """Consumes one escape sequence body (after the backslash)."""
        text = self.text
        if self.pos >= len(text):
            raise TokenizerError("bad escape at end of input", self.pos)
        c = text[self.pos]
        if c in _LINE_TERMINATORS:
            self.pos += 2 if text.startswith("\r\n", self.pos) else 1
            return ""
        if c == "u":
            decoded, consumed = self._decode_unicode_escape(self.pos)
            self.pos += consumed
            return decoded
        if c == "x":
            hexpart = text[self.pos + 1 : self.pos + 3]
            if len(hexpart) < 2 or any(h not in "0123456789abcdefABCDEF" for h in hexpart):
                raise TokenizerError("invalid hex escape", self.pos)
            self.pos += 3
            return chr(int(hexpart, 16))
        self.pos += 1
        return _ESCAPES.get(c, c)

    def _scan_template(self, brace_start: int):
        """Scans one template chunk starting at ` or at the } resuming it."""
        text = self.text
        start = self.pos
        opener = text[self.pos]  # ` or }
        self.pos += 1
        out: list[str] = []
        bad_escape = False
        n = len(text)
        while True:
            if self.pos >= n:
                raise TokenizerError("unterminated template literal", brace_start)
            c = text[self.pos]
            if c == "`":
                self.pos += 1
                sub = "full" if opener == "`" else "tail"
                break
            if c == "$" and text.startswith("${", self.pos):
                self.pos += 2
                self._brace_stack.append("template")
                sub = "head" if opener == "`" else "middle"
                break
            if c == "\\":
                self.pos += 1
                try:
                    out.append(self._scan_escape())
                except TokenizerError:
                    bad_escape = True
                    self.pos += 1
            else:
                out.append(c)
                self.pos += 1
        cooked = None if bad_escape else "".join(out)
        return self._emit("TEMPLATE", text[start : self.pos], start, cooked=cooked, sub=sub)

    def _scan_number(self):
        text = self.text
        start = self.pos
        m = _NUMBER_RE.match(text, start)
        if not m:
            raise TokenizerError("invalid number", start)
        raw = m.group(0)
        self.pos = m.end()
        if self.pos < len(text) and _is_id_start(text[self.pos]):
            raise TokenizerError("identifier immediately follows number", self.pos)
        body = raw.replace("_", "")
        if body.endswith("n"):
            cooked = int(body[:-1], 0)
        elif body[:2].lower() in ("0x", "0o", "0b"):
            cooked = int(body, 0)
        elif len(body) > 1 and body[0] == "0" and body.isdigit():
            cooked = int(body, 8) if all(d in "01234567" for d in body) else float(body)
        else:
            cooked = float(body)
            if cooked.is_integer() and "e" not in body.lower() and "." not in body:
                cooked = int(cooked)
        return self._emit("NUM", raw, start, cooked=cooked)

    def _scan_regex(self):
        text = self.text
        start = self.pos
        self.pos += 1
        in_class = False
        n = len(text)
        while True:
            if self.pos >= n or text[self.pos] in _LINE_TERMINATORS:
                raise TokenizerError("unterminated regular expression", start)
            c = text[self.pos]
            if c == "\\":
                self.pos += 2
                continue
            if c == "[":
                in_class = True
            elif c == "]":
                in_class = False
            elif c == "/" and not in_class:
                self.pos += 1
                break
            self.pos += 1
        while self.pos < n and _is_id_part(text[self.pos]):
            self.pos += 1
        return self._emit("REGEX", text[start : self.pos], start)

    def _regex_allowed(self) -> bool:
        if not self.tokens:
            return True
        t = self.tokens[-1]
        if t.kind in ("NUM", "STR", "TEMPLATE", "REGEX", "PRIVATE"):
            return False
        if t.kind == "NAME":
            return t.cooked in _REGEX_AFTER_KEYWORD
        if t.kind == "PUNCT":
            if t.value == ")":
                return t.kw_close
            if t.value in ("]", "++", "--"):
                return False
            return True
        return True

    def _scan_punct(self):
        text = self.text
        start = self.pos
        for p in _PUNCTUATORS:
            if text.startswith(p, start):
                # `?.3` is `?` `.3`, not optional chaining.
                if p == "?." and start + 2 < len(text) and text[start + 2].isdigit():
                    p = "?"
                if p == "{":
                    self._brace_stack.append("block")
                elif p == "}":
                    if self._brace_stack and self._brace_stack[-1] == "template":
                        self._brace_stack.pop()
                        return self._scan_template(start)
                    if self._brace_stack:
                        self._brace_stack.pop()
                elif p == "(":
                    prev = self.tokens[-1] if self.tokens else None
                    self._paren_stack.append(
                        prev is not None
                        and prev.kind == "NAME"
                        and prev.cooked in ("if", "for", "while", "with", "switch", "catch")
                    )
                self.pos = start + len(p)
                tok = self._emit("PUNCT", p, start)
                if p == ")" and self._paren_stack:
                    tok.kw_close = self._paren_stack.pop()
                return tok
        raise TokenizerError(f"unexpected character {text[start]!r}", start)


def tokenize(text: str) -> tuple[list[Token], list[Comment]]:
    """Tokenizes JS source; raises TokenizerError on malformed input."""
    return Tokenizer(text).tokenize()
