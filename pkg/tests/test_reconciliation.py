"""Both evaluation routes agree on random generic inputs, not only the grid."""
from fractions import Fraction as F

from hypothesis import HealthCheck, assume, given, settings, strategies as st

from parahiggs.assembly import poincare_U
from parahiggs.errors import UnclassifiableWeights
from parahiggs.strata import n111_closed, n111_direct
from parahiggs.triples import triples_closed, triples_generic, triples_spec
from parahiggs.weights import ModuliInput, WeightPoint, classify, dualize, toledo

weight = st.fractions(F(1, 30), F(29, 30), max_denominator=30)


@st.composite
def inputs(draw):
    a1, a2 = sorted([draw(weight), draw(weight)])
    p = WeightPoint(a1, a2, draw(weight))
    try:
        classify(p)
    except UnclassifiableWeights:
        assume(False)
    g = draw(st.integers(1, 4))
    delta = 3 * draw(st.integers(-2, 2))
    b = delta // 3 + draw(st.integers(0, 4))
    inp = ModuliInput(g, (p,), delta - b, b)
    assume(toledo(inp) != 0)
    return inp if toledo(inp) < 0 else dualize(inp)


@settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(inputs())
def test_routes_agree(inp):
    assume(toledo(inp) < 0)
    assert n111_closed(inp) == n111_direct(inp)
    spec = triples_spec(inp)
    assert triples_closed(spec) == triples_generic(spec)


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(inputs())
def test_dual_has_same_polynomial(inp):
    assume(toledo(inp) < 0)
    p = poincare_U(inp).poincare
    assert poincare_U(dualize(inp)).poincare == p
    assert all(c >= 0 for c in p.terms.values())
    assert not p or p.coeff(0) == 1
