"""Property checks that a structure satisfies the fourteen link axioms.

Each axiom is instantiated with random closed terms, interpreted in a model,
and checked with the model's equality (group, shift and braid axioms) or by
replaying a certificate built from the shape of the axiom (equivalence and
Markov axioms).  :class:`BraidModel` is B∞ itself; tests subclass it to
inject faults.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import garside, markov
from .braids import BraidWord, Generator, multiply, shift
from .markov import Certificate, ConjugateBy, Destabilize, Move, MoveNotApplicable, Stabilize
from .terms import One, Prod, Shift, Sigma, SigmaBar, Term, render_term

__all__ = [
    "AXIOMS",
    "AxiomReport",
    "BraidModel",
    "random_term",
    "run_suite",
    "DEFAULT_SEED",
]

DEFAULT_SEED = 0
DEFAULT_MAX_SIZE = 16


class BraidModel:
    """The canonical link model (B∞, T, ·, ≡, 1, σ₁, σ₁⁻¹)."""

    def one(self) -> BraidWord:
        return BraidWord()

    def sigma(self) -> BraidWord:
        return BraidWord([1])

    def sigma_bar(self) -> BraidWord:
        return BraidWord([-1])

    def mul(self, a: BraidWord, b: BraidWord) -> BraidWord:
        return multiply(a, b)

    def shift(self, a: BraidWord) -> BraidWord:
        return shift(a, 1)

    def equal(self, a: BraidWord, b: BraidWord) -> bool:
        return garside.equal(a, b)

    def apply_move(self, w: BraidWord, m: Move) -> BraidWord:
        return markov.apply_move(w, m)

    def letters(self, w: BraidWord) -> list[Generator]:
        return list(w)

    def interpret(self, t: Term) -> BraidWord:
        values: list[BraidWord] = []
        stack: list[tuple[Term, bool]] = [(t, False)]
        while stack:
            node, done = stack.pop()
            if isinstance(node, Prod):
                if done:
                    right = values.pop()
                    values.append(self.mul(values.pop(), right))
                else:
                    stack += [(node, True), (node.right, False), (node.left, False)]
            elif isinstance(node, Shift):
                if done:
                    values.append(self.shift(values.pop()))
                else:
                    stack += [(node, True), (node.inner, False)]
            elif isinstance(node, One):
                values.append(self.one())
            elif isinstance(node, Sigma):
                values.append(self.sigma())
            elif isinstance(node, SigmaBar):
                values.append(self.sigma_bar())
            else:
                raise TypeError(f"not a term: {node!r}")
        return values[0]

    def replay(self, c: Certificate) -> bool:
        w = c.start
        for m in c.moves:
            try:
                w = self.apply_move(w, m)
            except MoveNotApplicable:
                return False
        return self.equal(w, c.end)


# -- random terms ------------------------------------------------------------

_LEAVES = (One, Sigma, SigmaBar)


def _gen(rng: random.Random, budget: int) -> Term:
    # leaves become likelier as the remaining budget shrinks
    if budget <= 1 or rng.random() < 1.0 / budget:
        return rng.choice(_LEAVES)()
    if budget < 3 or rng.random() < 0.3:
        return Shift(_gen(rng, budget - 1))
    left = rng.randint(1, budget - 2)
    return Prod(_gen(rng, left), _gen(rng, budget - 1 - left))


def _random_term(rng: random.Random, max_size: int) -> Term:
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    return _gen(rng, rng.randint(1, max_size))


def random_term(seed: int, max_size: int = DEFAULT_MAX_SIZE) -> Term:
    """A random closed term with at most ``max_size`` nodes, deterministic in ``seed``."""
    return _random_term(random.Random(seed), max_size)


# -- axioms ------------------------------------------------------------------


@dataclass
class AxiomReport:
    axiom: str
    cases: int
    seed: int
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "cases": self.cases, "failures": self.failures, "seed": self.seed}


def _random_moves(model: BraidModel, rng: random.Random, w: BraidWord, count: int) -> list[Move]:
    moves: list[Move] = []
    for _ in range(count):
        kind = rng.random()
        if kind < 0.5:
            m: Move = ConjugateBy(Generator(rng.randint(1, w.width), rng.choice((1, -1))))
        elif kind < 0.8:
            m = Stabilize(rng.choice((1, -1)))
        else:
            m = Destabilize(rng.choice((1, -1)))
        try:
            w = model.apply_move(w, m)
        except MoveNotApplicable:
            continue
        moves.append(m)
    return moves


def _run_moves(model: BraidModel, w: BraidWord, moves: list[Move]) -> BraidWord:
    for m in moves:
        w = model.apply_move(w, m)
    return w


# each check gets (model, rng, term generator) and returns the bindings on failure
Check = Callable[[BraidModel, random.Random, Callable[[], Term]], "dict[str, Term] | None"]


def _assoc(m, rng, term):
    x, y, z = term(), term(), term()
    X, Y, Z = m.interpret(x), m.interpret(y), m.interpret(z)
    if not m.equal(m.mul(X, m.mul(Y, Z)), m.mul(m.mul(X, Y), Z)):
        return {"x": x, "y": y, "z": z}


def _left_identity(m, rng, term):
    x = term()
    X = m.interpret(x)
    if not m.equal(m.mul(m.one(), X), X):
        return {"x": x}


def _right_identity(m, rng, term):
    x = term()
    X = m.interpret(x)
    if not m.equal(m.mul(X, m.one()), X):
        return {"x": x}


def _inverse(m, rng, term):
    s, sb, one = m.sigma(), m.sigma_bar(), m.one()
    if not (m.equal(m.mul(s, sb), one) and m.equal(m.mul(sb, s), one)):
        return {}


def _shift_hom(m, rng, term):
    x, y = term(), term()
    X, Y = m.interpret(x), m.interpret(y)
    if not m.equal(m.shift(m.mul(X, Y)), m.mul(m.shift(X), m.shift(Y))):
        return {"x": x, "y": y}


def _shift_identity(m, rng, term):
    if not m.equal(m.shift(m.one()), m.one()):
        return {}


def _braid_relation(m, rng, term):
    s = m.sigma()
    ts = m.shift(s)
    if not m.equal(m.mul(m.mul(s, ts), s), m.mul(m.mul(ts, s), ts)):
        return {}


def _far_commutation(m, rng, term):
    b = term()
    t2b = m.shift(m.shift(m.interpret(b)))
    if not m.equal(m.mul(m.sigma(), t2b), m.mul(t2b, m.sigma())):
        return {"b": b}


def _reflexive(m, rng, term):
    x = term()
    X = m.interpret(x)
    if not m.replay(Certificate(X, (), X)):
        return {"x": x}


def _symmetric(m, rng, term):
    x = term()
    X = m.interpret(x)
    moves = _random_moves(m, rng, X, rng.randint(1, 4))
    c = Certificate(X, tuple(moves), _run_moves(m, X, moves))
    if not (m.replay(c) and m.replay(markov.reverse_certificate(c))):
        return {"x": x}


def _transitive(m, rng, term):
    x = term()
    X = m.interpret(x)
    first = _random_moves(m, rng, X, rng.randint(1, 3))
    Y = _run_moves(m, X, first)
    second = _random_moves(m, rng, Y, rng.randint(1, 3))
    Z = _run_moves(m, Y, second)
    c1 = Certificate(X, tuple(first), Y)
    c2 = Certificate(Y, tuple(second), Z)
    if not (m.replay(c1) and m.replay(c2) and m.replay(Certificate(X, c1.moves + c2.moves, Z))):
        return {"x": x}


def _inverse_term(w: BraidWord, rng: random.Random) -> Term:
    # a term for w⁻¹, padded with a cancelling pair so it is not literally the inverse word
    factors: list[Term] = []
    for g in reversed(list(w)):
        leaf: Term = SigmaBar() if g.sign > 0 else Sigma()
        for _ in range(g.index - 1):
            leaf = Shift(leaf)
        factors.append(leaf)
    k = rng.randint(0, 3)
    pad_s: Term = Sigma()
    pad_sb: Term = SigmaBar()
    for _ in range(k):
        pad_s, pad_sb = Shift(pad_s), Shift(pad_sb)
    factors.insert(rng.randint(0, len(factors)), Prod(pad_s, pad_sb))
    result = factors[0]
    for f in factors[1:]:
        result = Prod(result, f)
    return result


def _conjugation(m, rng, term):
    x, y = term(), term()
    X, Y = m.interpret(x), m.interpret(y)
    z = _inverse_term(Y, rng)
    Z = m.interpret(z)
    if not m.equal(m.mul(Y, Z), m.one()):
        # premise is false in this model, so the implication holds vacuously
        return None
    moves = tuple(ConjugateBy(g) for g in reversed(m.letters(Y)))
    end = m.mul(m.mul(Y, X), Z)
    if not m.replay(Certificate(X, moves, end)):
        return {"x": x, "y": y, "z": z}


def _stabilize(sign: int):
    def check(m, rng, term):
        x = term()
        X = m.interpret(x)
        lead = m.sigma() if sign > 0 else m.sigma_bar()
        if not m.replay(Certificate(X, (Stabilize(sign),), m.mul(lead, m.shift(X)))):
            return {"x": x}

    return check


AXIOMS: tuple[tuple[str, Check], ...] = (
    ("group.associativity", _assoc),
    ("group.left_identity", _left_identity),
    ("group.right_identity", _right_identity),
    ("group.inverse", _inverse),
    ("shift.homomorphism", _shift_hom),
    ("shift.identity", _shift_identity),
    ("braid.relation", _braid_relation),
    ("braid.far_commutation", _far_commutation),
    ("equivalence.reflexive", _reflexive),
    ("equivalence.symmetric", _symmetric),
    ("equivalence.transitive", _transitive),
    ("markov.conjugation", _conjugation),
    ("markov.stabilize", _stabilize(1)),
    ("markov.stabilize_inverse", _stabilize(-1)),
)


def run_axiom(
    axiom: str,
    check: Check,
    seed: int,
    cases: int,
    model: BraidModel,
    max_size: int = DEFAULT_MAX_SIZE,
) -> AxiomReport:
    rng = random.Random(f"{seed}:{axiom}")
    report = AxiomReport(axiom, cases, seed)
    for _ in range(cases):
        bindings = check(model, rng, lambda: _random_term(rng, max_size))
        if bindings is not None:
            report.failures.append({"bindings": {k: render_term(v) for k, v in bindings.items()}})
    return report


def run_suite(
    seed: int = DEFAULT_SEED,
    cases: int = 1000,
    model: BraidModel | None = None,
    max_size: int = DEFAULT_MAX_SIZE,
) -> list[AxiomReport]:
    """Check all fourteen axioms ``cases`` times each; failures are recorded, not raised."""
    if cases < 1:
        raise ValueError("cases must be at least 1")
    model = model or BraidModel()
    return [run_axiom(name, check, seed, cases, model, max_size) for name, check in AXIOMS]
