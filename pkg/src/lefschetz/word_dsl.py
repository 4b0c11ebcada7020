"""Text format for twist words (the .lfw format).

A document is a genus header followed by a word expression:

    genus: 2
    word: (c1 c2 c3 c4 c5)^6    # thirty twists

Tokens are chain curves c<k>, separating twists s<h>, literal classes
v[i1,...,i2g], and the named families A, B, C, H(g), E(k).  Whitespace
separates, '(' ')' group, '^n' repeats, '#' comments to end of line.
Powers expand eagerly; the flat word may not exceed MAX_EXPANDED twists.

Every failure is a ParseError carrying a 1-based line and column.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NoReturn

from . import families
from .monodromy import Nonseparating, Separating, Twist, Word
from .surface import chain_curve_class, is_primitive

MAX_EXPANDED = 10**6

_PUNCT = {
    "(": "LPAREN",
    ")": "RPAREN",
    "^": "CARET",
    "[": "LBRACKET",
    "]": "RBRACKET",
    ",": "COMMA",
    ":": "COLON",
}


class ParseError(ValueError):
    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col
        self.message = message


@dataclass(frozen=True)
class _Token:
    kind: str  # NAME, INT, or a punctuation kind
    text: str
    line: int
    col: int


def _lex(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch in _PUNCT:
            tokens.append(_Token(_PUNCT[ch], ch, line, start_col))
            i += 1
            col += 1
            continue
        if ch.isdigit() or (ch == "-" and i + 1 < n and text[i + 1].isdigit()):
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i + 1
            while j < n and (text[j].isalnum()):
                j += 1
            tokens.append(_Token("NAME", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        raise ParseError(line, start_col, f"unexpected character {ch!r}")
    tokens.append(_Token("EOF", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0
        self.genus = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def fail(self, tok: _Token, message: str) -> NoReturn:
        raise ParseError(tok.line, tok.col, message)

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            self.fail(tok, f"expected {what}, found {tok.text!r}" if tok.text else f"expected {what}, found end of input")
        return self.advance()

    def expect_keyword(self, word: str) -> None:
        tok = self.peek()
        if tok.kind != "NAME" or tok.text != word:
            self.fail(tok, f"expected {word!r}" + (f", found {tok.text!r}" if tok.text else ", found end of input"))
        self.advance()

    def int_value(self, what: str) -> tuple[int, _Token]:
        tok = self.expect("INT", what)
        return int(tok.text), tok

    # --- grammar ---

    def document(self) -> Word:
        self.expect_keyword("genus")
        self.expect("COLON", "':' after 'genus'")
        g, gtok = self.int_value("genus value")
        if g < 1:
            self.fail(gtok, f"genus must be >= 1, got {g}")
        self.genus = g
        self.expect_keyword("word")
        self.expect("COLON", "':' after 'word'")
        twists = self.expression()
        tok = self.peek()
        if tok.kind != "EOF":
            self.fail(tok, f"unexpected {tok.text!r} after word expression")
        if not twists:
            self.fail(tok, "empty word")
        return Word(self.genus, tuple(twists))

    def expression(self) -> list[Twist]:
        out: list[Twist] = []
        while self.peek().kind in ("NAME", "LPAREN"):
            at = self.peek()
            piece = self.factor()
            if len(out) + len(piece) > MAX_EXPANDED:
                self.fail(at, f"expanded word exceeds {MAX_EXPANDED} twists")
            out += piece
        return out

    def factor(self) -> list[Twist]:
        base = self.atom()
        if self.peek().kind == "CARET":
            caret = self.advance()
            k, ktok = self.int_value("power")
            if k < 1:
                self.fail(ktok, f"power must be >= 1, got {k}")
            if len(base) * k > MAX_EXPANDED:
                self.fail(caret, f"expanded word exceeds {MAX_EXPANDED} twists")
            base = base * k
        return base

    def atom(self) -> list[Twist]:
        tok = self.peek()
        if tok.kind == "LPAREN":
            self.advance()
            inner = self.expression()
            self.expect("RPAREN", "')'")
            return inner
        if tok.kind == "NAME":
            return self.named_atom(self.advance())
        self.fail(tok, f"expected a twist token, found {tok.text!r}" if tok.text else "expected a twist token, found end of input")

    def named_atom(self, tok: _Token) -> list[Twist]:
        text = tok.text
        g = self.genus
        if text[0] == "c" and text[1:].isdigit():
            k = int(text[1:])
            if not 1 <= k <= 2 * g + 1:
                self.fail(tok, f"chain index {k} out of range 1..{2 * g + 1} at genus {g}")
            return [Nonseparating(chain_curve_class(g, k))]
        if text[0] == "s" and text[1:].isdigit():
            if g == 1:
                self.fail(tok, "separating twists are not allowed at genus 1")
            h = int(text[1:])
            if not 1 <= h <= g // 2:
                self.fail(tok, f"separating type {h} out of range 1..{g // 2} at genus {g}")
            return [Separating(h)]
        if text == "A" or text == "B" or text == "C":
            if g != 2:
                self.fail(tok, f"family {text} needs genus 2, document says {g}")
            maker = {"A": families.word_A, "B": families.word_B, "C": families.word_C}[text]
            return list(maker().twists)
        if text == "H":
            k, ktok = self.family_argument(tok)
            if k < 2:
                self.fail(ktok, f"family H needs genus >= 2, got {k}")
            if k != g:
                self.fail(ktok, f"family H({k}) does not match document genus {g}")
            return list(families.hyperelliptic_word(k).twists)
        if text == "E":
            k, ktok = self.family_argument(tok)
            if g != 1:
                self.fail(tok, f"family E needs genus 1, document says {g}")
            if k < 1:
                self.fail(ktok, f"family E needs a positive argument, got {k}")
            if 12 * k > MAX_EXPANDED:
                self.fail(ktok, f"expanded word exceeds {MAX_EXPANDED} twists")
            return list(families.genus1_word(k).twists)
        if text == "v":
            return [self.literal_class(tok)]
        self.fail(tok, f"unknown token {text!r}")

    def family_argument(self, name_tok: _Token) -> tuple[int, _Token]:
        self.expect("LPAREN", f"'(' after family {name_tok.text}")
        k, ktok = self.int_value("family argument")
        self.expect("RPAREN", "')'")
        return k, ktok

    def literal_class(self, vtok: _Token) -> Twist:
        self.expect("LBRACKET", "'[' after 'v'")
        entries = [self.int_value("class entry")[0]]
        while self.peek().kind == "COMMA":
            self.advance()
            entries.append(self.int_value("class entry")[0])
        self.expect("RBRACKET", "']' or ','")
        g = self.genus
        if len(entries) != 2 * g:
            self.fail(vtok, f"class has {len(entries)} entries, genus {g} needs {2 * g}")
        vec = tuple(entries)
        if all(x == 0 for x in vec):
            if g == 1:
                self.fail(vtok, "separating twists are not allowed at genus 1")
            # a zero literal is read as a type-1 reducible fibre
            return Separating(1)
        if not is_primitive(vec):
            self.fail(vtok, f"class {list(vec)} is imprimitive")
        return Nonseparating(vec)


def parse(text: str) -> Word:
    """Parse a .lfw document into a flat Word."""
    return _Parser(_lex(text)).document()


def serialize(w: Word) -> str:
    """Canonical flat form: chain names where classes match, literals otherwise."""
    g = w.genus
    chain_names = {chain_curve_class(g, k): f"c{k}" for k in range(1, 2 * g + 2)}
    parts = []
    for t in w.twists:
        if isinstance(t, Separating):
            parts.append(f"s{t.h}")
        else:
            parts.append(chain_names.get(t.cls) or "v[" + ",".join(str(x) for x in t.cls) + "]")
    return f"genus: {g}\nword: " + " ".join(parts) + "\n"
