"""Slow, independent reference implementations used only by the tests.

Nothing here imports the library's bracket, Burau or polynomial code, so an
agreement between the two is evidence rather than an echo.
"""

from __future__ import annotations

import random
from collections import defaultdict
from math import comb

import sympy

A = sympy.Symbol("A")
t = sympy.Symbol("t")


# -- Kauffman bracket by walking arcs -------------------------------------------


def loops_in_state(letters, n, state):
    """Count closed loops of one smoothing of the closed braid by walking them.

    Every point (level, strand) has an ``up`` and a ``down`` half-edge; the
    smoothing pairs half-edges, and each loop is followed until it returns to
    its starting half-edge.  Bit k of ``state`` set means crossing k is
    smoothed horizontally.
    """
    c = len(letters)
    if c == 0:
        return n
    link = {}

    def join(h1, h2):
        link[h1] = h2
        link[h2] = h1

    for k, x in enumerate(letters):
        i = abs(x) - 1
        below = (k + 1) % c
        for p in range(n):
            if p not in (i, i + 1):
                join((k, p, "down"), (below, p, "up"))
        if state >> k & 1:
            join((k, i, "down"), (k, i + 1, "down"))
            join((below, i, "up"), (below, i + 1, "up"))
        else:
            join((k, i, "down"), (below, i, "up"))
            join((k, i + 1, "down"), (below, i + 1, "up"))

    seen = set()
    loops = 0
    for start in link:
        if start in seen:
            continue
        loops += 1
        h = start
        while h not in seen:
            seen.add(h)
            other = link[h]
            seen.add(other)
            level, pos, end = other
            h = (level, pos, "up" if end == "down" else "down")
    return loops


def _delta_power(k):
    # (-A^2 - A^-2)^k as {exponent: coefficient}
    out = {}
    for j in range(k + 1):
        e = 2 * (k - j) - 2 * j
        out[e] = out.get(e, 0) + (-1) ** k * comb(k, j)
    return out


def bracket_oracle(letters, n):
    """⟨closure⟩ as an {exponent: coefficient} dict, by brute force over 2^c states."""
    c = len(letters)
    total = defaultdict(int)
    for state in range(1 << c):
        a_count = 0
        for k, x in enumerate(letters):
            horizontal = state >> k & 1
            # the A-smoothing is vertical at a positive crossing, horizontal at a negative one
            if (x > 0) != bool(horizontal):
                a_count += 1
        loops = loops_in_state(letters, n, state)
        for e, coeff in _delta_power(loops - 1).items():
            total[e + 2 * a_count - c] += coeff
    return {e: v for e, v in total.items() if v}


def bracket_oracle_expr(letters, n):
    return sum(coeff * A**e for e, coeff in bracket_oracle(letters, n).items())


def jones_oracle_expr(letters, n, stable=True):
    """(−A³)^(−writhe)·⟨⟩ as a sympy expression, optionally with δ factors removed."""
    writhe = sum(1 if x > 0 else -1 for x in letters)
    expr = sympy.expand((-(A**3)) ** (-writhe) * bracket_oracle_expr(letters, n))
    if not stable:
        return expr
    num, den = sympy.fraction(sympy.together(expr))
    num = sympy.Poly(num, A)
    delta = sympy.Poly(-(A**4) - 1, A)  # A²·δ
    while True:
        q, r = sympy.div(num, delta)
        if not r.is_zero:
            break
        # num/den = q·A²δ/den, so dividing by δ leaves q·A²/den
        num = q * sympy.Poly(A**2, A)
    return sympy.expand(num.as_expr() / den)


# -- Burau by explicit matrix products --------------------------------------------


def burau_generator(i, n, sign=1):
    """Reduced Burau matrix of σ_i^sign in B_n as a sympy Matrix."""
    d = n - 1
    m = sympy.eye(d)
    j = i - 1
    if sign > 0:
        m[j, j] = -t
        if j > 0:
            m[j - 1, j] = t
        if j + 1 < d:
            m[j + 1, j] = 1
    else:
        m[j, j] = -1 / t
        if j > 0:
            m[j - 1, j] = 1
        if j + 1 < d:
            m[j + 1, j] = 1 / t
    return m


def burau_oracle(letters, n):
    m = sympy.eye(n - 1)
    for x in letters:
        m = m * burau_generator(abs(x), n, 1 if x > 0 else -1)
    return m.applyfunc(sympy.expand)


def alexander_oracle(letters, n):
    """Δ(t) up to units: det(ρ̄ − I)/(1 + … + t^(n−1)), brought to lowest degree 0, positive."""
    if n == 1:
        return sympy.Integer(1)
    det = sympy.cancel((burau_oracle(letters, n) - sympy.eye(n - 1)).det())
    q = sympy.cancel(det / sum(t**k for k in range(n)))
    if q == 0:
        return sympy.Integer(0)
    num, den = sympy.fraction(q)
    poly = sympy.Poly(num, t)
    low = min(m[0] for m in poly.monoms())
    poly = sympy.Poly(sympy.expand(num / t**low), t)
    coeffs = poly.all_coeffs()[::-1]
    if coeffs[0] < 0:
        poly = -poly
    return sympy.expand(poly.as_expr())


# -- random inputs ------------------------------------------------------------------


def random_letters(rng: random.Random, max_len: int, width: int, min_len: int = 0):
    """A freely reduced word of length in [min_len, max_len] over σ_1..σ_{width-1}."""
    length = rng.randint(min_len, max_len)
    out: list[int] = []
    while len(out) < length:
        x = rng.randint(1, width - 1) * rng.choice((1, -1))
        if out and out[-1] == -x:
            continue
        out.append(x)
    return out


def laurent_to_expr(p, symbol):
    return sum(c * symbol**e for e, c in p.terms.items())
