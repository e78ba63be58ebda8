"""Checking the link axioms, and catching a model that breaks one.

The suite instantiates each of the fourteen axioms with random terms.  A
model that forgets the braid relation (free-group equality) is caught.
"""

from braidlogic import BraidModel, run_suite


class FreeGroup(BraidModel):
    def equal(self, a, b):
        return a == b


for label, model in (("braid group", BraidModel()), ("free group", FreeGroup())):
    reports = run_suite(seed=0, cases=200, model=model)
    failed = [r for r in reports if not r.passed]
    print(f"{label}: {len(reports) - len(failed)}/{len(reports)} axioms hold")
    for r in failed:
        example = r.failures[0]["bindings"] or "(no variables)"
        print(f"  {r.axiom}: {len(r.failures)} failures, e.g. {example}")
