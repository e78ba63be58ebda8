import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidlogic.axioms import random_term
from braidlogic.terms import (
    One,
    Prod,
    Shift,
    Sigma,
    SigmaBar,
    TermSyntaxError,
    parse_term,
    render_term,
    term_size,
)


def test_parse_examples():
    assert parse_term("1") == One()
    assert parse_term("s * T(s) * s") == Prod(Prod(Sigma(), Shift(Sigma())), Sigma())
    assert parse_term("s_3") == Shift(Shift(Sigma()))


def test_render_examples():
    assert render_term(One()) == "1"
    assert render_term(Shift(SigmaBar())) == "T(S)"
    assert render_term(Prod(Sigma(), Prod(Sigma(), Sigma()))) == "(s * (s * s))"


def test_sugar():
    assert parse_term("T^3(S)") == Shift(Shift(Shift(SigmaBar())))
    assert parse_term("S_2") == Shift(SigmaBar())
    assert parse_term("s_1") == Sigma()
    assert parse_term("T^1(s)") == Shift(Sigma())
    # sugar is never rendered back
    assert render_term(parse_term("T^2(s)")) == "T(T(s))"


def test_whitespace_and_grouping():
    assert parse_term("  ( s*S )\n* 1 ") == Prod(Prod(Sigma(), SigmaBar()), One())
    assert parse_term("s * (S * 1)") == Prod(Sigma(), Prod(SigmaBar(), One()))


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("s *", 3),
        ("(s * S", 6),
        ("s * S)", 5),
        ("T s", 2),
        ("x", 0),
        ("s s", 2),
        ("T^0(s)", 2),
        ("s_01", 2),
        ("T^(s)", 2),
        ("ss", 1),
    ],
)
def test_syntax_errors_carry_offsets(text, offset):
    with pytest.raises(TermSyntaxError) as info:
        parse_term(text)
    assert info.value.offset == offset
    assert isinstance(info.value, SyntaxError)


def test_offsets_are_bytes():
    # 'σ' is two bytes in UTF-8
    with pytest.raises(TermSyntaxError) as info:
        parse_term("s * σ")
    assert info.value.offset == 4
    with pytest.raises(TermSyntaxError) as info:
        parse_term("σ s")
    assert info.value.offset == 0


def test_exponent_bound():
    assert parse_term("T^5(1)", max_exponent=5) == Shift(Shift(Shift(Shift(Shift(One())))))
    with pytest.raises(OverflowError):
        parse_term("T^6(1)", max_exponent=5)
    with pytest.raises(OverflowError):
        parse_term("T^1000000000(s)")
    with pytest.raises(OverflowError):
        parse_term("s_" + "9" * 400)


def test_unbalanced_parentheses_never_parse():
    rng = random.Random(7)
    for _ in range(2000):
        text = render_term(random_term(rng.randrange(10**9), 30))
        opens = [i for i, c in enumerate(text) if c == "("]
        if not opens:
            continue
        i = rng.choice(opens)
        broken = text[:i] + text[i + 1:]
        with pytest.raises(TermSyntaxError):
            parse_term(broken)
        closes = [j for j, c in enumerate(text) if c == ")"]
        j = rng.choice(closes)
        with pytest.raises(TermSyntaxError):
            parse_term(text[:j] + text[j + 1:])
        with pytest.raises(TermSyntaxError):
            parse_term(text + ")")


def test_round_trip_on_random_terms():
    rng = random.Random(2024)
    for _ in range(10_000):
        t = random_term(rng.randrange(2**32), 50)
        assert term_size(t) <= 50
        text = render_term(t)
        assert parse_term(text) == t
        assert render_term(parse_term(text)) == text


def test_deep_terms_do_not_hit_recursion_limit_when_rendering():
    t = One()
    for _ in range(50_000):
        t = Shift(t)
    text = render_term(t)
    assert text.startswith("T(T(") and text.endswith("))")
    assert term_size(t) == 50_001


terms = st.recursive(
    st.sampled_from([One(), Sigma(), SigmaBar()]),
    lambda inner: st.one_of(st.builds(Shift, inner), st.builds(Prod, inner, inner)),
    max_leaves=25,
)


@settings(max_examples=300, deadline=None)
@given(terms)
def test_parse_render_identity_hypothesis(t):
    assert parse_term(render_term(t)) == t
