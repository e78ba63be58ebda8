"""Terms, braid words, and the map between them.

Closed terms are built from 1, s (σ), S (σ̄), products and the shift T.
Evaluating a term gives a word in the generators σ_i of B∞; quoting a word
gives back a term.  Run with ``python3 demos/01_terms_and_words.py``.
"""

from braidlogic import evaluate, parse_term, quote, render_term
from braidlogic.braids import format_word

print("A term and its canonical rendering")
t = parse_term("s * T(s) * s")
print("  parsed:  ", t)
print("  rendered:", render_term(t))

print("\nSugar expands into nested shifts")
for text in ("s_3", "T^2(S)", "S_2 * s"):
    print(f"  {text:10} -> {render_term(parse_term(text))}")

print("\nEvaluation into B∞ (letters are signed generator indices)")
for text in ("s * T(s) * s", "T^2(S)", "s * S", "T(s * T(s)) * S"):
    print(f"  {text:18} -> [{format_word(evaluate(parse_term(text)))}]")

# quoting goes the other way and always lands on a left-associated product
w = evaluate(parse_term("s * T(T(S)) * T(s)"))
print("\nquote([" + format_word(w) + "]) =", render_term(quote(w)))
assert evaluate(quote(w)) == w
