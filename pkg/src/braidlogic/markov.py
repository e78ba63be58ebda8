"""Stable equivalence of braids: Markov moves, certificates and a bounded search.

The relation ≡ on B∞ is generated by conjugation ``b ≡ a b a⁻¹`` and the
stabilisations ``b ≡ σ₁^{±1} T(b)``.  :func:`search_equivalence` either finds
a replayable chain of such moves, shows the closures differ through a
stable-equivalence invariant, or gives up when its budget runs out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Union

from .braids import BraidWord, Generator, format_word, multiply, parse_word, shift
from .garside import equal, normal_form, parabolic_section
from .invariants import alexander, closure_components, jones

__all__ = [
    "ConjugateBy",
    "Stabilize",
    "Destabilize",
    "Move",
    "MoveNotApplicable",
    "Certificate",
    "SearchBudget",
    "Equivalent",
    "Distinct",
    "Unknown",
    "Verdict",
    "apply_move",
    "inverse_move",
    "neighbors",
    "replay",
    "reverse_certificate",
    "compose_certificates",
    "stable_invariants",
    "search_equivalence",
    "format_certificate",
    "parse_certificate",
]


class MoveNotApplicable(ValueError):
    pass


@dataclass(frozen=True)
class ConjugateBy:
    generator: Generator

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (0, self.generator.index, self.generator.sign)


@dataclass(frozen=True)
class Stabilize:
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("stabilisation sign must be ±1")

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (1, 1, self.sign)


@dataclass(frozen=True)
class Destabilize:
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("destabilisation sign must be ±1")

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (2, 1, self.sign)


Move = Union[ConjugateBy, Stabilize, Destabilize]


def apply_move(w: BraidWord, m: Move) -> BraidWord:
    """Apply one Markov move.

    ``ConjugateBy(g)`` gives g·w·g⁻¹, ``Stabilize(ε)`` gives σ₁^ε·T(w) and
    ``Destabilize(ε)`` returns the v with w = σ₁^ε·T(v) in the group, raising
    :class:`MoveNotApplicable` when there is none.
    """
    if isinstance(m, ConjugateBy):
        g = m.generator.letter
        return multiply(multiply(BraidWord._trusted((g,)), w), BraidWord._trusted((-g,)))
    if isinstance(m, Stabilize):
        return BraidWord._trusted((m.sign,) + shift(w, 1).letters)
    if isinstance(m, Destabilize):
        v = parabolic_section(multiply(BraidWord._trusted((-m.sign,)), w))
        if v is None:
            raise MoveNotApplicable(f"{format_word(w)!r} is not σ₁^{m.sign:+d}·T(v)")
        return v
    raise TypeError(f"not a move: {m!r}")


def inverse_move(m: Move) -> Move:
    if isinstance(m, ConjugateBy):
        return ConjugateBy(m.generator.inverse())
    if isinstance(m, Stabilize):
        return Destabilize(m.sign)
    return Stabilize(m.sign)


@dataclass(frozen=True)
class SearchBudget:
    max_depth: int = 8
    max_word_length: int = 24
    max_width: int = 8
    max_states: int = 10**6

    def __post_init__(self):
        for name in ("max_depth", "max_word_length", "max_width", "max_states"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


def _candidate_moves(w: BraidWord) -> list[Move]:
    moves: list[Move] = []
    for i in range(1, w.width + 1):
        moves.append(ConjugateBy(Generator(i, -1)))
        moves.append(ConjugateBy(Generator(i, 1)))
    moves += [Stabilize(-1), Stabilize(1), Destabilize(-1), Destabilize(1)]
    return moves


def neighbors(w: BraidWord, budget: SearchBudget | None = None) -> list[tuple[Move, BraidWord]]:
    """All single-move successors of ``w`` within the budget, in tie-break order.

    Conjugation uses σ_i^{±1} for 1 ≤ i ≤ width(w); order is by
    (move kind, generator index, sign).
    """
    budget = budget or SearchBudget()
    out = []
    for m in _candidate_moves(w):
        try:
            v = apply_move(w, m)
        except MoveNotApplicable:
            continue
        if len(v) <= budget.max_word_length and v.width <= budget.max_width:
            out.append((m, v))
    return out


@dataclass(frozen=True)
class Certificate:
    start: BraidWord
    moves: tuple[Move, ...]
    end: BraidWord

    def __len__(self) -> int:
        return len(self.moves)


def replay(c: Certificate) -> bool:
    w = c.start
    for m in c.moves:
        try:
            w = apply_move(w, m)
        except MoveNotApplicable:
            return False
    return equal(w, c.end)


def reverse_certificate(c: Certificate) -> Certificate:
    return Certificate(c.end, tuple(inverse_move(m) for m in reversed(c.moves)), c.start)


def compose_certificates(first: Certificate, second: Certificate) -> Certificate:
    if not equal(first.end, second.start):
        raise ValueError("certificates do not compose: first.end != second.start")
    return Certificate(first.start, first.moves + second.moves, second.end)


@dataclass(frozen=True)
class Equivalent:
    certificate: Certificate


@dataclass(frozen=True)
class Distinct:
    invariant: str
    left: object
    right: object


@dataclass(frozen=True)
class Unknown:
    reason: str
    states: int = 0


Verdict = Union[Equivalent, Distinct, Unknown]


def _knot_alexander(w: BraidWord):
    # the Alexander polynomial is only compared between closures that are knots:
    # stably equivalent knots are isotopic, but a link may gain split unknots
    if closure_components(w) != 1:
        return None
    return alexander(w)


STABLE_INVARIANTS: tuple[tuple[str, Callable[[BraidWord], object]], ...] = (
    ("jones", jones),
    ("alexander", _knot_alexander),
)


def stable_invariants(w: BraidWord) -> dict[str, object]:
    """Invariant values usable to refute stable equivalence (None = not applicable)."""
    return {name: fn(w) for name, fn in STABLE_INVARIANTS}


def _distinguish(a: BraidWord, b: BraidWord) -> Distinct | None:
    for name, fn in STABLE_INVARIANTS:
        va, vb = fn(a), fn(b)
        if va is not None and vb is not None and va != vb:
            return Distinct(name, va, vb)
    return None


@dataclass
class _Side:
    parents: dict = field(default_factory=dict)  # key -> (parent key, move) or None
    words: dict = field(default_factory=dict)    # key -> representative word
    depths: dict = field(default_factory=dict)
    frontier: list = field(default_factory=list)
    depth: int = 0


def _path_to(side: _Side, key) -> list[Move]:
    moves = []
    while side.parents[key] is not None:
        key, m = side.parents[key]
        moves.append(m)
    moves.reverse()
    return moves


def search_equivalence(
    a: BraidWord, b: BraidWord, budget: SearchBudget | None = None, *, check_invariants: bool = True
) -> Verdict:
    """Decide a ≡ b as far as the budget allows.

    Invariants are compared first; then a bidirectional breadth-first search
    runs over states keyed by their Garside normal form at the budget width.
    The returned certificate goes from ``a`` to ``b`` and is as short as any
    the search could find.
    """
    budget = budget or SearchBudget()
    if equal(a, b):
        return Equivalent(Certificate(a, (), b))
    if check_invariants:
        witness = _distinguish(a, b)
        if witness is not None:
            return witness
    width = max(budget.max_width, a.width, b.width)
    eff = SearchBudget(
        budget.max_depth,
        max(budget.max_word_length, len(a), len(b)),
        width,
        budget.max_states,
    )

    def key(w: BraidWord):
        nf = normal_form(w, width)
        return (nf.infimum, nf.factors)

    fwd, bwd = _Side(), _Side()
    for side, w in ((fwd, a), (bwd, b)):
        k = key(w)
        side.parents[k] = None
        side.words[k] = w
        side.depths[k] = 0
        side.frontier = [k]

    states = 2
    while fwd.depth + bwd.depth < eff.max_depth:
        if not fwd.frontier or not bwd.frontier:
            return Unknown("search space exhausted", states)
        # expand the smaller frontier; ties go forward
        side, other = (fwd, bwd) if len(fwd.frontier) <= len(bwd.frontier) else (bwd, fwd)
        new_frontier = []
        best = None
        for k in side.frontier:
            for m, v in neighbors(side.words[k], eff):
                kv = key(v)
                if kv in side.parents:
                    continue
                side.parents[kv] = (k, m)
                side.words[kv] = v
                side.depths[kv] = side.depth + 1
                new_frontier.append(kv)
                states += 1
                if kv in other.parents and (best is None or other.depths[kv] < other.depths[best]):
                    best = kv
                if states >= eff.max_states and best is None:
                    return Unknown(f"state limit {eff.max_states} reached", states)
        if best is not None:
            return Equivalent(_join(a, b, fwd, bwd, best))
        side.frontier = new_frontier
        side.depth += 1
    return Unknown(f"depth limit {eff.max_depth} reached", states)


def _join(a: BraidWord, b: BraidWord, fwd: _Side, bwd: _Side, meet) -> Certificate:
    forward = _path_to(fwd, meet)
    backward = [inverse_move(m) for m in reversed(_path_to(bwd, meet))]
    return Certificate(a, tuple(forward + backward), b)


# -- text format -------------------------------------------------------------


def _format_move(m: Move) -> str:
    if isinstance(m, ConjugateBy):
        return f"conj {m.generator.letter:+d}"
    if isinstance(m, Stabilize):
        return f"stab {m.sign:+d}"
    return f"destab {m.sign:+d}"


def format_certificate(c: Certificate) -> str:
    lines = [f"start {format_word(c.start)}".rstrip()]
    lines += [_format_move(m) for m in c.moves]
    lines.append(f"end {format_word(c.end)}".rstrip())
    return "\n".join(lines) + "\n"


def parse_certificate(text: str | Iterable[str]) -> Certificate:
    lines = text.splitlines() if isinstance(text, str) else list(text)
    start = end = None
    moves: list[Move] = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        try:
            if head == "start":
                start = parse_word(rest)
            elif head == "end":
                end = parse_word(rest)
            elif head == "conj":
                moves.append(ConjugateBy(Generator.from_letter(int(rest))))
            elif head == "stab":
                moves.append(Stabilize(int(rest)))
            elif head == "destab":
                moves.append(Destabilize(int(rest)))
            else:
                raise ValueError(f"unknown directive {head!r}")
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if start is None or end is None:
        raise ValueError("certificate needs both a start and an end line")
    return Certificate(start, tuple(moves), end)
