"""Acceptance suite.

Each test carries ``@pytest.mark.criterion(n)``; ``conftest.py`` prints a
PASS/FAIL line per criterion at the end of the run.
"""
import time
from math import comb

import pytest

from parahiggs import cli
from parahiggs.assembly import poincare_U
from parahiggs.series import ZERO
from parahiggs.strata import macdonald_sym, n111_closed, n111_direct, strata
from parahiggs.triples import triples_closed, triples_generic, triples_spec
from parahiggs.verify import CASE_POINTS, default_grid
from parahiggs.weights import ModuliInput, dualize
from helpers import EX1, EX2, poly

GRID = default_grid(genera=(1, 2, 3), deltas=(-3, 0, 3))


def _timed(fn, *args):
    start = time.perf_counter()
    value = fn(*args)
    return value, time.perf_counter() - start


@pytest.mark.criterion(1)
def test_c1_first_worked_example():
    rep, dt = _timed(poincare_U, EX1, "both")
    assert rep.poincare == poly(1, 4, 7, 6, 2)
    assert rep.n111_contribution == poly(0, 0, 1, 2, 1)
    assert rep.triples_contribution == poly(1, 4, 6, 4, 1)
    assert dt < 1.0


@pytest.mark.criterion(2)
def test_c2_second_worked_example():
    rep, dt = _timed(poincare_U, EX2, "both")
    assert rep.poincare == poly(1, 4, 7, 4, 1)
    assert rep.n111_contribution == poly(0, 0, 1)
    assert rep.triples_contribution == poly(1, 4, 6, 4, 1)
    assert dt < 1.0


@pytest.mark.criterion(3)
def test_c3_weights_change_the_answer():
    assert (EX1.g, EX1.a, EX1.b) == (EX2.g, EX2.a, EX2.b)
    assert poincare_U(EX1).poincare != poincare_U(EX2).poincare


@pytest.mark.criterion(4)
def test_c4_reconciliation_grid():
    start = time.perf_counter()
    cases = set()
    for inp in GRID:
        assert n111_direct(inp, False, False) == n111_closed(inp), inp
        spec = triples_spec(inp)
        assert triples_generic(spec) == triples_closed(spec), inp
        cases.add(inp.points[0])
    assert cases == set(CASE_POINTS.values())
    assert time.perf_counter() - start < 30.0


def _binomial(n, k):
    """Generalized binomial coefficient, valid for negative ``n``."""
    if n >= 0:
        return comb(n, k)
    return (-1) ** k * comb(k - n - 1, k)


@pytest.mark.criterion(5)
def test_c5_macdonald_properties():
    start = time.perf_counter()
    for g in range(5):
        for m in range(-2, 13):
            p = macdonald_sym(g, m)
            if m < 0:
                assert p == ZERO
                continue
            assert p.degree == 2 * m and p.leading_coefficient == 1
            assert all(c >= 0 for c in p.terms.values())
            assert p(-1) == (-1) ** m * _binomial(2 * g - 2, m)
    assert time.perf_counter() - start < 5.0


@pytest.mark.criterion(6)
def test_c6_structural_invariants():
    nonempty = 0
    for inp in GRID:
        rep = poincare_U(inp, "both")
        p = rep.poincare
        for part in (p, rep.n111_contribution, rep.triples_contribution):
            assert part.is_polynomial()
        assert all(c >= 0 for c in rep.betti)
        # an empty moduli space has P = 0 on both routes; otherwise connected
        if p:
            nonempty += 1
            assert p.coeff(0) == 1
        assert all(st.morse_index % 2 == 0 for st in strata(inp, sum_all_d0=True))
        if not any(pt.has_zero_weight for pt in inp.points):
            assert poincare_U(dualize(inp)).poincare == p
    assert nonempty >= 100


@pytest.mark.criterion(7)
@pytest.mark.parametrize("flags,error", [
    (["--deg-a", "1", "--deg-b", "1"], "UnsupportedDelta"),
    (["--alpha1", "3/10", "--alpha2", "3/10", "--eta", "3/10"], "NonGenericWeights"),
    (["--alpha1", "1/4", "--alpha2", "1/2", "--eta", "3/4"], "UnclassifiableWeights"),
    (["--alpha1", "1/2", "--alpha2", "3/4", "--eta", "1/4"], "UnclassifiableWeights"),
])
def test_c7_validation_contract(flags, error, capsys):
    base = ["--genus", "1", "--deg-a", "0", "--deg-b", "0",
            "--alpha1", "1/10", "--alpha2", "1/2", "--eta", "6/10"]
    assert cli.main(base + flags) == 2
    assert capsys.readouterr().err.startswith(error + ":")
