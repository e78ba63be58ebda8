"""Interpretation of closed terms in the canonical model B∞.

``evaluate`` is the homomorphism 1 ↦ e, σ ↦ σ₁, σ̄ ↦ σ₁⁻¹, · ↦ product,
T ↦ shift; ``quote`` picks a term for every braid word.
"""

from __future__ import annotations

from .braids import BraidWord, multiply, shift
from .terms import One, Prod, Shift, Sigma, SigmaBar, Term

__all__ = ["evaluate", "quote"]

_EMPTY = BraidWord()
_SIGMA = BraidWord([1])
_SIGMA_BAR = BraidWord([-1])


def evaluate(t: Term) -> BraidWord:
    # post-order over an explicit stack; runs of Shift nodes are collapsed
    # into a single shift by their length
    values: list[BraidWord] = []
    stack: list[tuple[Term, int]] = [(t, 0)]
    while stack:
        node, state = stack.pop()
        if isinstance(node, Prod):
            if state == 0:
                stack.append((node, 1))
                stack.append((node.right, 0))
                stack.append((node.left, 0))
            else:
                right = values.pop()
                left = values.pop()
                values.append(multiply(left, right))
        elif isinstance(node, Shift):
            if state == 0:
                depth = 0
                inner: Term = node
                while isinstance(inner, Shift):
                    depth += 1
                    inner = inner.inner
                stack.append((node, depth))
                stack.append((inner, 0))
            else:
                values.append(shift(values.pop(), state))
        elif isinstance(node, One):
            values.append(_EMPTY)
        elif isinstance(node, Sigma):
            values.append(_SIGMA)
        elif isinstance(node, SigmaBar):
            values.append(_SIGMA_BAR)
        else:
            raise TypeError(f"not a term: {node!r}")
    return values[0]


def _letter_term(x: int) -> Term:
    t: Term = Sigma() if x > 0 else SigmaBar()
    for _ in range(abs(x) - 1):
        t = Shift(t)
    return t


def quote(w: BraidWord) -> Term:
    """Left-associated product of T^{i-1}(σ^{±1}), one factor per letter; e ↦ 1."""
    if not w.letters:
        return One()
    result = _letter_term(w.letters[0])
    for x in w.letters[1:]:
        result = Prod(result, _letter_term(x))
    return result
