#! /usr/bin/env python3
"""Two genus-one moduli spaces, computed piece by piece.

Both inputs have a single marked point and a = b = 0.  Only the weights
differ, yet the Betti numbers do not agree.
"""
from parahiggs import ModuliInput, WeightPoint, classify, dimension, poincare_U, toledo
from parahiggs.strata import strata
from parahiggs.triples import triples_generic, triples_spec

# =============================================================================
# Build the two inputs.  Weights are exact rationals, given as "p/q" strings.

first = ModuliInput(g=1, points=(WeightPoint("1/10", "1/2", "6/10"),), a=0, b=0)
second = ModuliInput(g=1, points=(WeightPoint("1/10", "1/2", "1/2"),), a=0, b=0)

for inp in (first, second):
    p = inp.points[0]
    print(f"weights {p.as_dict()}  chamber {classify(p)}  tau {toledo(inp)}")

# =============================================================================
# The (1,1,1) strata.  There is one per weight distribution at the point;
# each contributes t^index times a product of two symmetric-product
# polynomials.

for st in strata(first):
    print(f"  d0={st.d0} dist={st.dist[0].value:4s} m1={st.m1} m2={st.m2} "
          f"index={st.morse_index}  ->  {st.poincare(first.g)}")

# =============================================================================
# The minimum is a moduli space of parabolic triples.  It contributes with
# Morse index zero.

print("triples:", triples_generic(triples_spec(first)))

# =============================================================================
# The full answer.  method="both" runs the closed forms and the direct sums
# and fails loudly if they disagree.

r1, r2 = poincare_U(first), poincare_U(second)
print("P_t(U) first :", r1.poincare, " betti", r1.betti)
print("P_t(U) second:", r2.poincare, " betti", r2.betti)
assert r1.poincare != r2.poincare

# Complex dimension drops by one when a weight of the first bundle meets eta.
print("dimensions:", dimension(first), dimension(second))
print("euler characteristics:", r1.euler_characteristic, r2.euler_characteristic)
