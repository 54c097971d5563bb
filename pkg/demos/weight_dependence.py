#! /usr/bin/env python3
"""Walk the weights through every chamber and watch the answer change.

Genus and degrees stay fixed.  One representative point is taken per
chamber, and the Betti numbers are printed next to the chamber label.
"""
from parahiggs import ModuliInput, poincare_U, toledo
from parahiggs.verify import CASE_POINTS

g, a, b = 2, -1, 1

# -----------------------------------------------------------------------------
# tau must be non-zero; every representative point below gives tau < 0
# for these degrees, so no dualization happens.

seen = {}
for case, point in CASE_POINTS.items():
    inp = ModuliInput(g, (point,), a, b)
    rep = poincare_U(inp)
    print(f"{case.value:4s} tau={str(toledo(inp)):6s} dim={rep.complex_dimension:2d} betti={rep.betti}")
    seen.setdefault(tuple(rep.betti), []).append(case.value)

# -----------------------------------------------------------------------------
# Chambers sharing a polynomial are grouped here.

print()
for betti, cases in seen.items():
    print(f"{', '.join(cases):14s} {list(betti)}")
print(f"{len(seen)} distinct polynomials over {len(CASE_POINTS)} chambers")
