"""Searching for stable equivalence.

Two braids have stably equivalent closures when a chain of conjugations and
(de)stabilisations joins them.  The search either returns such a chain as a
replayable certificate, refutes equivalence with an invariant, or reports
that its budget ran out.
"""

from braidlogic import BraidWord, SearchBudget, replay, search_equivalence
from braidlogic.markov import Distinct, Equivalent, format_certificate


def show(label, a, b, budget=None):
    verdict = search_equivalence(a, b, budget)
    print(f"\n{label}")
    if isinstance(verdict, Equivalent):
        cert = verdict.certificate
        print(f"  Equivalent in {len(cert)} move(s); replay ok: {replay(cert)}")
        for line in format_certificate(cert).splitlines():
            print("   ", line)
    elif isinstance(verdict, Distinct):
        print(f"  Distinct, told apart by {verdict.invariant}: {verdict.left}  vs  {verdict.right}")
    else:
        print(f"  Unknown: {verdict.reason} after {verdict.states} states")


show("σ1 against the empty braid", BraidWord([1]), BraidWord())
show("σ1σ2 against the empty braid", BraidWord([1, 2]), BraidWord())
show("trefoil against a conjugate of itself", BraidWord([1, 1, 1]), BraidWord([2, 1, 1, 1, -2]))
show("trefoil against the unknot", BraidWord([1, 1, 1]), BraidWord())
show("left against right trefoil", BraidWord([1, 1, 1]), BraidWord([-1, -1, -1]))

# with too small a budget the answer is honest about not knowing
show(
    "Hopf link on 2 strands vs on 3 strands, depth 1",
    BraidWord([1, 1]),
    BraidWord([2, 1, 2]),
    SearchBudget(max_depth=1),
)
