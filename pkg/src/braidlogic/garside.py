"""Left-greedy Garside normal form in B_n and the word problem.

Simple elements (permutation braids) are stored as 0-based one-line permutations
``p`` with group product ``(u v)(x) = u(v(x))``.  For such ``p``:

* right multiplication by s_i swaps positions i, i+1;
* left multiplication by s_i swaps values i, i+1;
* σ_i right-divides ``p`` iff ``p[i] > p[i+1]`` (finishing set);
* σ_i left-divides ``p`` iff value i+1 sits left of value i (starting set).
"""

from __future__ import annotations

from dataclasses import dataclass

from .braids import BraidWord, WidthError, inverse, multiply

__all__ = [
    "GarsideNormalForm",
    "normal_form",
    "equal",
    "is_identity",
    "simple_word",
    "parabolic_section",
]

Perm = tuple[int, ...]


@dataclass(frozen=True)
class GarsideNormalForm:
    """Δ_n^infimum · factors[0] · factors[1] ⋯ with each factor a proper simple element.

    Factors are recorded as 1-based permutation images.
    """

    width: int
    infimum: int
    factors: tuple[tuple[int, ...], ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def to_word(self) -> BraidWord:
        n = self.width
        delta = simple_word(tuple(range(n - 1, -1, -1)))
        if self.infimum >= 0:
            letters = delta * self.infimum
        else:
            letters = [-x for x in reversed(delta)] * (-self.infimum)
        for f in self.factors:
            letters.extend(simple_word(tuple(v - 1 for v in f)))
        return BraidWord(letters)


def simple_word(p: Perm) -> list[int]:
    """A positive word (1-based letters) for the permutation braid ``p``."""
    p = list(p)
    out: list[int] = []
    # peel right descents: p = p' s_i with len(p') = len(p) - 1
    while True:
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                out.append(i + 1)
                break
        else:
            break
    out.reverse()
    return out


def _tau(p: Perm) -> Perm:
    n = len(p)
    return tuple(n - 1 - p[n - 1 - x] for x in range(n))


def _left_weight(a: list[int], b: list[int]) -> bool:
    """Make (a, b) left-weighted in place by sliding generators from b into a.

    Returns True if anything moved.
    """
    n = len(a)
    changed = False
    pos_b = [0] * n
    for k, v in enumerate(b):
        pos_b[v] = k
    while True:
        for i in range(n - 1):
            # i in S(b) and i not in F(a)
            if pos_b[i + 1] < pos_b[i] and a[i] < a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                # b <- s_i b: swap values i and i+1
                pi, pj = pos_b[i], pos_b[i + 1]
                b[pi], b[pj] = i + 1, i
                pos_b[i], pos_b[i + 1] = pj, pi
                changed = True
                break
        else:
            return changed


def _positive_factors(w: BraidWord, n: int) -> tuple[int, list[Perm]]:
    """Write w = Δ^{-m} · y_1 ⋯ y_L with y_j simple."""
    ident = list(range(n))
    delta = tuple(range(n - 1, -1, -1))
    simples: list[Perm] = []
    for x in w.letters:
        i = abs(x) - 1
        if x > 0:
            p = ident.copy()
            p[i], p[i + 1] = p[i + 1], p[i]
        else:
            # Δ σ_i^{-1} = w0 s_i
            p = list(delta)
            p[i], p[i + 1] = p[i + 1], p[i]
        simples.append(tuple(p))
    # each Δ^{-1} moves left past earlier factors, applying τ to each
    m = 0
    for j in range(len(w.letters) - 1, -1, -1):
        if m % 2:
            simples[j] = _tau(simples[j])
        if w.letters[j] < 0:
            m += 1
    return m, simples


def normal_form(w: BraidWord, n: int | None = None) -> GarsideNormalForm:
    """Left-greedy normal form of ``w`` in B_n (``n`` defaults to max(2, width))."""
    if n is None:
        n = max(2, w.width)
    if n < max(2, w.width):
        raise WidthError(f"normal form needs n >= max(2, {w.width}), got {n}")
    m, simples = _positive_factors(w, n)
    ident = tuple(range(n))
    delta = tuple(range(n - 1, -1, -1))
    factors: list[list[int]] = []
    for s in simples:
        if s == ident:
            continue
        factors.append(list(s))
        for j in range(len(factors) - 1, 0, -1):
            if not _left_weight(factors[j - 1], factors[j]):
                break
    lead = 0
    while lead < len(factors) and tuple(factors[lead]) == delta:
        lead += 1
    end = len(factors)
    while end > lead and tuple(factors[end - 1]) == ident:
        end -= 1
    return GarsideNormalForm(
        width=n,
        infimum=lead - m,
        factors=tuple(tuple(v + 1 for v in f) for f in factors[lead:end]),
    )


def is_identity(w: BraidWord, n: int | None = None) -> bool:
    if not w.letters:
        return True
    nf = normal_form(w, n)
    return nf.infimum == 0 and not nf.factors


def equal(a: BraidWord, b: BraidWord) -> bool:
    """True iff ``a`` and ``b`` are the same element of B∞."""
    if a.letters == b.letters:
        return True
    n = max(2, a.width, b.width)
    return is_identity(multiply(a, inverse(b)), n)


def _right_complement(p: Perm) -> Perm:
    # ∂p = p^{-1} Δ
    n = len(p)
    inv = [0] * n
    for k, v in enumerate(p):
        inv[v] = k
    return tuple(inv[n - 1 - x] for x in range(n))


def parabolic_section(w: BraidWord) -> BraidWord | None:
    """Return v with T(v) equal to w in the group, or None if w ∉ ⟨σ_2, σ_3, …⟩.

    Uses the orthogonal form w = N⁻¹·P (N, P positive, no common left divisor),
    read off the left normal form.  For positive elements the set of generators
    used is an invariant, so w lies in the parabolic subgroup iff neither N nor
    P uses σ_1.
    """
    if all(abs(x) >= 2 for x in w.letters):
        return BraidWord._trusted(tuple(x - 1 if x > 0 else x + 1 for x in w.letters))
    n = max(2, w.width)
    nf = normal_form(w, n)
    factors = [tuple(v - 1 for v in f) for f in nf.factors]
    k = -nf.infimum
    if k < 0 or len(factors) < k:
        # a surviving power of Δ involves σ_1
        return None
    # Δ^{-k} A_1 ⋯ A_r = X_1^{-1} ⋯ X_k^{-1} A_{k+1} ⋯ A_r, X_j = τ^{k-j}(∂A_j)
    neg = []
    for j in range(k):
        x = _right_complement(factors[j])
        if (k - 1 - j) % 2:
            x = _tau(x)
        neg.append(x)
    pos = factors[k:]
    if any(p[0] != 0 for p in neg) or any(p[0] != 0 for p in pos):
        return None
    letters: list[int] = []
    for x in neg:
        letters.extend(-g for g in reversed(simple_word(x)))
    for p in pos:
        letters.extend(simple_word(p))
    return BraidWord(x - 1 if x > 0 else x + 1 for x in letters)
