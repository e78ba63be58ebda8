"""Invariants of braid closures.

Closing a braid on n strands gives a link.  Component count, the Alexander
polynomial (from the reduced Burau matrix) and the Jones polynomial (from
the Kauffman bracket) tell small links apart.
"""

from braidlogic import BraidWord, alexander, closure_components, jones, kauffman_bracket, mirror

links = {
    "unknot": (BraidWord(), 1),
    "2-component unlink": (BraidWord(), 2),
    "Hopf link": (BraidWord([1, 1]), 2),
    "trefoil": (BraidWord([1, 1, 1]), 2),
    "mirror trefoil": (BraidWord([-1, -1, -1]), 2),
    "figure-eight": (BraidWord([1, -2, 1, -2]), 3),
}

print(f"{'link':20} {'comp':>4}  {'alexander':18} jones (in A, t = A^-4)")
for name, (w, n) in links.items():
    print(f"{name:20} {closure_components(w, n):>4}  {str(alexander(w, n)):18} {jones(w, n)}")

print("\nThe bracket itself depends on how many strands the closure uses:")
for n in (2, 3, 4):
    print(f"  <σ1 closed on {n}> = {kauffman_bracket(BraidWord([1]), n)}")
print("jones() divides out those extra unknots, so it does not:")
print("  ", {n: str(jones(BraidWord([1]), n)) for n in (2, 3, 4)})

# rotating a braid about its vertical axis does not change its closure
w, n = BraidWord([1, -2, 1, 3, -2]), 4
m = mirror(w, n)
print(f"\nmirror({list(w.letters)}, {n}) = {list(m.letters)}")
print("  same jones:", jones(w, n) == jones(m, n), " same alexander:", alexander(w, n) == alexander(m, n))
