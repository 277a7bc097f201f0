import re
from dataclasses import dataclass

# Tipi di token del formato .tkb
IDENT = "IDENT"
STRING = "STRING"
PUNCT = "PUNCT"
EOF = "EOF"

PUNCTUATION = ":{}=(),"
ESCAPES = {'"': '"', '\\': '\\', 'n': '\n', 'r': '\r'}

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_SPACE_RE = re.compile(r"[ \t\f\v\n]+")


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    line: int
    column: int


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    message: str

    def __str__(self):
        return f"{self.line}:{self.column}: {self.message}"


def normalize_newlines(text):
    return text.replace("\r\n", "\n").replace("\r", "\n")


class Lexer:
    """Scanner a mano: produce i token e accumula le diagnostiche lessicali senza fermarsi."""

    def __init__(self, text):
        self.text = normalize_newlines(text)
        self.pos = 0
        self.line = 1
        self.column = 1
        self.diagnostics = []

    def _advance(self, count):
        for ch in self.text[self.pos:self.pos + count]:
            if ch == "\n":
                self.line += 1
                self.column = 1
            else:
                self.column += 1
        self.pos += count

    def _error(self, line, column, message):
        self.diagnostics.append(ParseDiagnostic(line, column, message))

    def tokens(self):
        result = []
        text = self.text
        while self.pos < len(text):
            ch = text[self.pos]
            if m := _SPACE_RE.match(text, self.pos):
                self._advance(m.end() - self.pos)
                continue
            if ch == "#":
                end = text.find("\n", self.pos)
                self._advance((len(text) if end < 0 else end) - self.pos)
                continue
            if m := _IDENT_RE.match(text, self.pos):
                result.append(Token(IDENT, m.group(), self.line, self.column))
                self._advance(m.end() - self.pos)
                continue
            if ch in PUNCTUATION:
                result.append(Token(PUNCT, ch, self.line, self.column))
                self._advance(1)
                continue
            if ch == '"':
                result.append(self._string())
                continue
            self._error(self.line, self.column, f"unexpected character {ch!r}")
            self._advance(1)
        result.append(Token(EOF, "", self.line, self.column))
        return result

    def _string(self):
        line, column = self.line, self.column
        self._advance(1)
        chars = []
        while True:
            if self.pos >= len(self.text) or self.text[self.pos] == "\n":
                self._error(line, column, "unterminated string literal")
                break
            ch = self.text[self.pos]
            if ch == '"':
                self._advance(1)
                break
            if ch == "\\":
                nxt = self.text[self.pos + 1:self.pos + 2]
                if nxt and nxt in ESCAPES:
                    chars.append(ESCAPES[nxt])
                else:
                    self._error(self.line, self.column, f"invalid escape sequence '\\{nxt}'")
                self._advance(2 if nxt and nxt != "\n" else 1)
                continue
            chars.append(ch)
            self._advance(1)
        return Token(STRING, "".join(chars), line, column)


def escape_string(value):
    return '"' + value.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n").replace("\r", "\\r") + '"'
