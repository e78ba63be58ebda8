"""Deciding equality in the braid group.

Two words can be very different letter by letter and still be the same
braid.  The left-greedy normal form (a power of the half twist Δ followed
by permutation braids) is a canonical key for the group element.
"""

from braidlogic import BraidWord, equal, normal_form
from braidlogic.braids import format_word, inverse

a = BraidWord([1, 2, 1])
b = BraidWord([2, 1, 2])
print("σ1σ2σ1 == σ2σ1σ2 ?", equal(a, b))
print("normal forms:", normal_form(a, 3), normal_form(b, 3), sep="\n  ")

print("\nFar generators commute, neighbours do not")
print("  σ1σ3 == σ3σ1 ?", equal(BraidWord([1, 3]), BraidWord([3, 1])))
print("  σ1σ2 == σ2σ1 ?", equal(BraidWord([1, 2]), BraidWord([2, 1])))

# a word and a disguised inverse: the relator in the middle is trivial
w = BraidWord([1, -2, 3, 1, 2])
disguised = list(inverse(w).letters)
disguised[2:2] = [1, 2, 1, -2, -1, -2]
product = BraidWord(list(w.letters) + disguised)
print(f"\nw = [{format_word(w)}]")
print(f"w times a disguised inverse = [{format_word(product)}]")
print("  is the identity:", equal(product, BraidWord()))

nf = normal_form(BraidWord([-1, 2, 2, -3, 1]), 4)
print("\nnormal form of σ1⁻¹σ2²σ3⁻¹σ1 in B4:")
print("  infimum", nf.infimum, "factors", nf.factors)
print("  rebuilt word:", format_word(nf.to_word()))
