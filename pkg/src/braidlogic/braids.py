"""Braid words: elements of the infinite braid group as freely reduced words.

A letter is stored as a signed nonzero integer, ``+i`` for σ_i and ``-i`` for
σ_i⁻¹.  Words are immutable and always freely reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "MAX_INDEX",
    "WidthError",
    "Generator",
    "BraidWord",
    "Permutation",
    "multiply",
    "inverse",
    "shift",
    "permutation",
    "mirror",
    "parse_word",
    "format_word",
]

MAX_INDEX = 1 << 16


class WidthError(ValueError):
    """A strand count too small for the word it is applied to."""


@dataclass(frozen=True, order=True)
class Generator:
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"generator index must be >= 1, got {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"generator sign must be +1 or -1, got {self.sign}")

    @property
    def letter(self) -> int:
        return self.sign * self.index

    @classmethod
    def from_letter(cls, letter: int) -> "Generator":
        return cls(abs(letter), 1 if letter > 0 else -1)

    def inverse(self) -> "Generator":
        return Generator(self.index, -self.sign)


def _free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class BraidWord:
    """A freely reduced word in the generators σ_i^{±1}."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int | Generator] = ()):
        raw = []
        for x in letters:
            if isinstance(x, Generator):
                x = x.letter
            x = int(x)
            if x == 0:
                raise ValueError("0 is not a generator")
            if abs(x) > MAX_INDEX:
                raise OverflowError(f"generator index {abs(x)} exceeds MAX_INDEX={MAX_INDEX}")
            raw.append(x)
        object.__setattr__(self, "letters", _free_reduce(raw))

    @classmethod
    def _trusted(cls, letters: tuple[int, ...]) -> "BraidWord":
        # caller guarantees the tuple is already freely reduced and in range
        w = cls.__new__(cls)
        object.__setattr__(w, "letters", letters)
        return w

    def __setattr__(self, name, value):
        raise AttributeError("BraidWord is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Generator]:
        return (Generator.from_letter(x) for x in self.letters)

    def __eq__(self, other) -> bool:
        # letter-for-letter equality; group equality is garside.equal
        return isinstance(other, BraidWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"BraidWord({list(self.letters)})"

    def __str__(self) -> str:
        return format_word(self)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return multiply(self, other)

    @property
    def width(self) -> int:
        """Max index + 1; the empty word has width 1."""
        if not self.letters:
            return 1
        return max(abs(x) for x in self.letters) + 1

    @property
    def generators(self) -> tuple[Generator, ...]:
        return tuple(self)


def multiply(a: BraidWord, b: BraidWord) -> BraidWord:
    la, lb = a.letters, b.letters
    i = 0
    while i < len(la) and i < len(lb) and la[len(la) - 1 - i] == -lb[i]:
        i += 1
    return BraidWord._trusted(la[: len(la) - i] + lb[i:])


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord._trusted(tuple(-x for x in reversed(w.letters)))


def shift(w: BraidWord, k: int = 1) -> BraidWord:
    """Apply the shift endomorphism σ_i ↦ σ_{i+k}."""
    if k < 0:
        raise ValueError("shift amount must be nonnegative")
    if k == 0:
        return w
    if w.letters and w.width - 1 + k > MAX_INDEX:
        raise OverflowError(f"shift by {k} exceeds MAX_INDEX={MAX_INDEX}")
    return BraidWord._trusted(tuple(x + k if x > 0 else x - k for x in w.letters))


def _check_width(w: BraidWord, n: int) -> None:
    if n < w.width:
        raise WidthError(f"width {n} is smaller than the word's width {w.width}")


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[k-1]`` is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = []
            k = start
            while k not in seen:
                seen.add(k)
                cycle.append(k)
                k = self(k)
            out.append(tuple(cycle))
        return out

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, 1))


def permutation(w: BraidWord, n: int) -> Permutation:
    """Product of the transpositions (i, i+1) in word order, as a map on {1..n}.

    Composition is right to left, so σ₁σ₂ gives 1→2→3→1.
    """
    _check_width(w, n)
    images = list(range(1, n + 1))
    # w = s_{i1} ... s_{ik}; (u s_i) in one-line notation swaps positions i, i+1 of u
    for x in w.letters:
        i = abs(x)
        images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def mirror(w: BraidWord, n: int) -> BraidWord:
    """Rotate the braid about its vertical axis: σ_i^ε ↦ σ_{n-i}^ε."""
    if n < 2:
        raise WidthError("mirror needs at least 2 strands")
    _check_width(w, n)
    return BraidWord._trusted(tuple(n - x if x > 0 else -(n + x) for x in w.letters))


def parse_word(text: str) -> BraidWord:
    """Read space-separated signed indices, e.g. ``"1 2 -1"``; empty text is the identity."""
    letters = []
    for tok in text.split():
        try:
            letters.append(int(tok))
        except ValueError:
            raise ValueError(f"bad braid letter {tok!r}") from None
    return BraidWord(letters)


def format_word(w: BraidWord | Sequence[int]) -> str:
    letters = w.letters if isinstance(w, BraidWord) else w
    return " ".join(str(x) for x in letters)
