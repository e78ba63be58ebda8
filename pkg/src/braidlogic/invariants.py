"""Invariants of braid closures.

A braid word ``w`` closed up on ``n >= width(w)`` strands gives a link; every
function here takes an optional ``n`` that defaults to ``width(w)`` (so the
empty word closes to the unknot).  Component count, Burau matrices, the
Alexander polynomial and the Kauffman bracket depend on ``n``: closing on one
more strand adds a split unknot.  :func:`jones` by default strips the factors
of δ that split unknots contribute, which makes it an invariant of stable
equivalence and independent of ``n``.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Sequence

from .braids import BraidWord, WidthError, permutation
from .laurent import LaurentPoly, NormalizedPoly

__all__ = [
    "STATE_SUM_LIMIT",
    "TooManyCrossings",
    "AlexanderDivisionError",
    "DELTA",
    "closure_components",
    "exponent_sum",
    "burau_reduced",
    "alexander",
    "kauffman_bracket",
    "jones",
    "strip_delta",
    "UnionFind",
]

STATE_SUM_LIMIT = 24

DELTA = LaurentPoly({2: -1, -2: -1}, "A")
_T = LaurentPoly({1: 1}, "t")
_T_INV = LaurentPoly({-1: 1}, "t")
_ONE_T = LaurentPoly({0: 1}, "t")
_ZERO_T = LaurentPoly({}, "t")


class TooManyCrossings(ValueError):
    pass


class AlexanderDivisionError(RuntimeError):
    """det(ρ̄ − I) was not divisible by 1 + t + … + t^{n-1}; this is a bug, not bad input."""


def _width(w: BraidWord, n: int | None) -> int:
    if n is None:
        return w.width
    if n < w.width:
        raise WidthError(f"width {n} is smaller than the word's width {w.width}")
    return n


def closure_components(w: BraidWord, n: int | None = None) -> int:
    """Number of components of the closure on ``n`` strands (cycles of the permutation)."""
    return len(permutation(w, _width(w, n)).cycles())


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


# -- Burau / Alexander -------------------------------------------------------


def burau_reduced(w: BraidWord, n: int | None = None) -> tuple[tuple[LaurentPoly, ...], ...]:
    """Reduced Burau matrix of ``w`` in B_n, an (n-1)×(n-1) matrix over Z[t, t⁻¹].

    Generators act by right multiplication; σ_i changes only column i-1::

        σ_i:     col ← t·left − t·col + right
        σ_i⁻¹:   col ← left − t⁻¹·col + t⁻¹·right

    (``left``/``right`` are the neighbouring columns, absent at the edges.)
    For n = 2 this is σ₁ ↦ (−t).
    """
    n = _width(w, n)
    d = n - 1
    cols = [[_ONE_T if r == c else _ZERO_T for r in range(d)] for c in range(d)]
    for x in w.letters:
        j = abs(x) - 1
        col = cols[j]
        left = cols[j - 1] if j > 0 else None
        right = cols[j + 1] if j + 1 < d else None
        if x > 0:
            new = [-(_T * v) for v in col]
            if left is not None:
                new = [a + _T * b for a, b in zip(new, left)]
            if right is not None:
                new = [a + b for a, b in zip(new, right)]
        else:
            new = [-(_T_INV * v) for v in col]
            if left is not None:
                new = [a + b for a, b in zip(new, left)]
            if right is not None:
                new = [a + _T_INV * b for a, b in zip(new, right)]
        cols[j] = new
    return tuple(tuple(cols[c][r] for c in range(d)) for r in range(d))


def _det(matrix: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free (Bareiss) determinant over Z[t, t⁻¹]."""
    m = [list(row) for row in matrix]
    size = len(m)
    if size == 0:
        return _ONE_T
    sign = 1
    prev = _ONE_T
    for k in range(size - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, size):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return _ZERO_T
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]).exact_div(prev)
        prev = pivot
    return m[size - 1][size - 1] if sign > 0 else -m[size - 1][size - 1]


def alexander(w: BraidWord, n: int | None = None) -> NormalizedPoly:
    """Alexander polynomial of the closure: det(ρ̄(w) − I) / (1 + t + … + t^{n-1}), up to ±t^k."""
    n = _width(w, n)
    rho = burau_reduced(w, n)
    shifted = [
        [entry - (_ONE_T if r == c else _ZERO_T) for c, entry in enumerate(row)]
        for r, row in enumerate(rho)
    ]
    det = _det(shifted)
    cyclotomic = LaurentPoly({e: 1 for e in range(n)}, "t")
    try:
        quotient = det.exact_div(cyclotomic)
    except ArithmeticError as exc:
        raise AlexanderDivisionError(f"{det} not divisible by {cyclotomic}") from exc
    return NormalizedPoly.of(quotient)


# -- Kauffman bracket / Jones ------------------------------------------------


class UnionFind:
    """Disjoint sets over 0..size-1 with path halving and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size
        self.count = size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True


def _bracket_from_counts(counts: dict[tuple[int, int], int]) -> LaurentPoly:
    """Σ count · A^s · δ^(loops − 1) over (s, loops) keys."""
    max_loops = max(loops for _, loops in counts)
    powers = [LaurentPoly({0: 1}, "A")]
    for _ in range(max_loops):
        powers.append(powers[-1] * DELTA)
    total: dict[int, int] = defaultdict(int)
    for (s, loops), c in counts.items():
        for e, k in powers[loops - 1].terms.items():
            total[e + s] += c * k
    return LaurentPoly(total, "A")


def _state_sum(letters: tuple[int, ...], n: int) -> LaurentPoly:
    c = len(letters)
    if c == 0:
        return _bracket_from_counts({(0, n): 1})
    # node (level, position) -> level*n + position; level c is identified with 0
    fixed: list[tuple[int, int]] = []
    crossings = []
    for k, x in enumerate(letters):
        i = abs(x) - 1
        top, bottom = k * n, ((k + 1) % c) * n
        for p in range(n):
            if p != i and p != i + 1:
                fixed.append((top + p, bottom + p))
        vertical = ((top + i, bottom + i), (top + i + 1, bottom + i + 1))
        horizontal = ((top + i, top + i + 1), (bottom + i, bottom + i + 1))
        # A-smoothing of a positive crossing is vertical, of a negative one horizontal
        crossings.append((vertical, horizontal) if x > 0 else (horizontal, vertical))
    base = UnionFind(c * n)
    for a, b in fixed:
        base.union(a, b)
    counts: dict[tuple[int, int], int] = defaultdict(int)
    for state in range(1 << c):
        uf = UnionFind.__new__(UnionFind)
        uf.parent = base.parent.copy()
        uf.size = base.size.copy()
        uf.count = base.count
        a_count = 0
        for k in range(c):
            if state >> k & 1:
                pair = crossings[k][1]
            else:
                pair = crossings[k][0]
                a_count += 1
            uf.union(*pair[0])
            uf.union(*pair[1])
        counts[(2 * a_count - c, uf.count)] += 1
    return _bracket_from_counts(counts)


def _transfer(letters: tuple[int, ...], n: int) -> LaurentPoly:
    """Same state sum, grouped by the connectivity of the 2n boundary points.

    Points 0..n-1 are the top of the braid, n..2n-1 the current bottom; a
    state records which points are joined by arcs, how many loops have closed,
    and the A-exponent.  Smoothings are applied one crossing at a time.
    """
    start = tuple(list(range(n, 2 * n)) + list(range(n)))
    states: dict[tuple[tuple[int, ...], int, int], int] = {(start, 0, 0): 1}
    for x in letters:
        a = n + abs(x) - 1
        b = a + 1
        # exponent contributed by the vertical / horizontal smoothing
        ev, eh = (1, -1) if x > 0 else (-1, 1)
        nxt: dict[tuple[tuple[int, ...], int, int], int] = defaultdict(int)
        for (match, s, loops), cnt in states.items():
            nxt[(match, s + ev, loops)] += cnt
            m = list(match)
            p, q = m[a], m[b]
            if p == b:
                closed = loops + 1
            else:
                m[p], m[q] = q, p
                closed = loops
            m[a], m[b] = b, a
            nxt[(tuple(m), s + eh, closed)] += cnt
        states = nxt
    counts: dict[tuple[int, int], int] = defaultdict(int)
    for (match, s, loops), cnt in states.items():
        # close the braid: top k joins bottom n+k, then count cycles
        seen = [False] * (2 * n)
        cycles = 0
        for startpt in range(2 * n):
            if seen[startpt]:
                continue
            cycles += 1
            pt = startpt
            while not seen[pt]:
                seen[pt] = True
                other = match[pt]
                seen[other] = True
                pt = other + n if other < n else other - n
        counts[(s, loops + cycles)] += cnt
    return _bracket_from_counts(counts)


def kauffman_bracket(
    w: BraidWord,
    n: int | None = None,
    *,
    method: str = "statesum",
    max_crossings: int = STATE_SUM_LIMIT,
) -> LaurentPoly:
    """Kauffman bracket ⟨closure of w on n strands⟩ in A, with ⟨○⟩ = 1 and δ = −A² − A⁻².

    ``method="statesum"`` enumerates all 2^c smoothings and counts loops with
    union-find (limited to ``max_crossings``); ``method="transfer"`` evaluates
    the same sum grouped by boundary connectivity and has no crossing limit.
    """
    n = _width(w, n)
    if method == "statesum":
        if len(w.letters) > max_crossings:
            raise TooManyCrossings(
                f"{len(w.letters)} crossings exceeds the state-sum limit {max_crossings}"
            )
        return _state_sum(w.letters, n)
    if method == "transfer":
        return _transfer(w.letters, n)
    raise ValueError(f"unknown bracket method {method!r}")


def strip_delta(p: LaurentPoly) -> LaurentPoly:
    """Divide out every factor of δ = −A² − A⁻²."""
    if p.is_zero():
        return p
    while True:
        try:
            p = p.exact_div(DELTA)
        except ArithmeticError:
            return p


def jones(w: BraidWord, n: int | None = None, *, stable: bool = True) -> LaurentPoly:
    """Writhe-normalised bracket (−A³)^{−e}·⟨closure⟩, the Jones polynomial at t = A⁻⁴.

    With ``stable=True`` (the default) all factors of δ are divided out, so the
    value does not change when split unknots are added; for knots nothing is
    removed.
    """
    n = _width(w, n)
    e = exponent_sum(w)
    bracket = _transfer(w.letters, n)
    value = bracket.shift(-3 * e)
    if e % 2:
        value = -value
    return strip_delta(value) if stable else value
