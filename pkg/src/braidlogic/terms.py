"""Closed terms over the signature (·, T, 1, σ, σ̄) and their concrete syntax.

Grammar::

    term    := factor { "*" factor }
    factor  := "1" | "s" | "S" | atom_idx | "T" [ "^" nat ] "(" term ")" | "(" term ")"
    atom_idx:= ("s" | "S") "_" nat

``s_i`` abbreviates ``T^(i-1)(s)`` and ``T^k(x)`` abbreviates k nested shifts.
Products are left-associative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

__all__ = [
    "One",
    "Sigma",
    "SigmaBar",
    "Prod",
    "Shift",
    "Term",
    "TermSyntaxError",
    "MAX_EXPONENT",
    "parse_term",
    "render_term",
    "term_size",
]

MAX_EXPONENT = 10**6


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Sigma:
    pass


@dataclass(frozen=True)
class SigmaBar:
    pass


@dataclass(frozen=True)
class Prod:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Shift:
    inner: "Term"


Term = Union[One, Sigma, SigmaBar, Prod, Shift]

_LEAF_TEXT = {One: "1", Sigma: "s", SigmaBar: "S"}


class TermSyntaxError(SyntaxError):
    """Malformed term text. ``offset`` is the 0-based byte offset of the problem."""

    def __init__(self, message: str, text: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.msg = message
        self.text = text
        self.offset = offset


def _shifted(t: Term, k: int) -> Term:
    for _ in range(k):
        t = Shift(t)
    return t


class _Parser:
    def __init__(self, text: str, max_exponent: int):
        self.text = text
        self.data = text.encode("utf-8")
        self.pos = 0
        self.max_exponent = max_exponent

    def error(self, message: str, pos: int | None = None) -> TermSyntaxError:
        return TermSyntaxError(message, self.text, self.pos if pos is None else pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.data) and self.data[self.pos] in b" \t\r\n":
            self.pos += 1

    def peek(self) -> int | None:
        self.skip_ws()
        if self.pos < len(self.data):
            return self.data[self.pos]
        return None

    def expect(self, ch: bytes) -> None:
        if self.peek() != ch[0]:
            found = "end of input" if self.peek() is None else repr(chr(self.data[self.pos]))
            raise self.error(f"expected {ch.decode()!r}, found {found}")
        self.pos += 1

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.data) and 0x30 <= self.data[self.pos] <= 0x39:
            self.pos += 1
        digits = self.data[start:self.pos]
        if not digits:
            raise self.error("expected a positive integer", start)
        if digits[0] == 0x30:
            raise self.error("integers must be nonzero without leading zeros", start)
        # compare digit counts before converting; huge literals are rejected cheaply
        if len(digits) > len(str(self.max_exponent)) or int(digits) > self.max_exponent:
            raise OverflowError(
                f"exponent {digits.decode()} at offset {start} exceeds maximum {self.max_exponent}"
            )
        return int(digits)

    def term(self) -> Term:
        result = self.factor()
        while self.peek() == ord("*"):
            self.pos += 1
            result = Prod(result, self.factor())
        return result

    def factor(self) -> Term:
        c = self.peek()
        if c is None:
            raise self.error("unexpected end of input")
        if c == ord("1"):
            self.pos += 1
            return One()
        if c in (ord("s"), ord("S")):
            self.pos += 1
            leaf: Term = Sigma() if c == ord("s") else SigmaBar()
            if self.pos < len(self.data) and self.data[self.pos] == ord("_"):
                self.pos += 1
                return _shifted(leaf, self.nat() - 1)
            return leaf
        if c == ord("T"):
            self.pos += 1
            k = 1
            if self.peek() == ord("^"):
                self.pos += 1
                k = self.nat()
            self.expect(b"(")
            inner = self.term()
            self.expect(b")")
            return _shifted(inner, k)
        if c == ord("("):
            self.pos += 1
            inner = self.term()
            self.expect(b")")
            return inner
        raise self.error(f"unexpected character {chr(c)!r}")


def parse_term(text: str, max_exponent: int = MAX_EXPONENT) -> Term:
    """Parse ``text`` into a :data:`Term`.

    Raises :class:`TermSyntaxError` on malformed input and ``OverflowError`` when a
    ``^k`` or ``_i`` number exceeds ``max_exponent``.
    """
    parser = _Parser(text, max_exponent)
    result = parser.term()
    if parser.peek() is not None:
        raise parser.error(f"unexpected character {chr(parser.data[parser.pos])!r}")
    return result


def render_term(t: Term) -> str:
    """Canonical text: every product parenthesised, shifts spelled ``T(...)``."""
    out: list[str] = []
    # explicit stack; terms can be nested far beyond the recursion limit
    stack: list[object] = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, str):
            out.append(node)
        elif isinstance(node, Prod):
            stack.extend((")", node.right, " * ", node.left, "("))
        elif isinstance(node, Shift):
            stack.extend((")", node.inner, "T("))
        else:
            out.append(_LEAF_TEXT[type(node)])
    return "".join(out)


def term_size(t: Term) -> int:
    """Number of nodes in the tree."""
    count = 0
    stack = [t]
    while stack:
        node = stack.pop()
        count += 1
        if isinstance(node, Prod):
            stack.append(node.left)
            stack.append(node.right)
        elif isinstance(node, Shift):
            stack.append(node.inner)
    return count
