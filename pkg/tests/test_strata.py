"""(1,1,1) strata: indicators, bounds, Morse indices and both evaluation routes."""
from math import comb

import pytest

from parahiggs.errors import UnsupportedPunctures, WrongOrientation
from parahiggs.series import T, ZERO
from parahiggs.strata import (
    CLOSED_FORMS_111, Perm, d0_lower_bound, indicators, macdonald_sym, morse_index_111,
    n111_closed, n111_direct, strata,
)
from parahiggs.verify import CASE_POINTS, default_grid
from parahiggs.weights import DistributionCase as C, ModuliInput, WeightPoint, dualize
from helpers import EX1, EX2, S3B, poly

ID, SW = (Perm.ID,), (Perm.SWAP,)
S6_INPUT = ModuliInput(1, (CASE_POINTS[C.S6],), 0, 0)


def test_indicators():
    assert indicators(EX1, SW) == (0, 1, 0)
    assert indicators(EX1, ID) == (1, 1, 0)
    for d in (ID, SW):
        assert indicators(S6_INPUT, d) == (1, 0, 0)


def test_d0_lower_bound():
    assert d0_lower_bound(EX1, ID) == 1
    assert d0_lower_bound(EX1, SW) == 0
    assert d0_lower_bound(S6_INPUT, SW) == 1


def test_morse_index():
    assert morse_index_111(1, 1, 0, 0, 0, 1) == 0
    assert morse_index_111(1, 1, 0, 0, 0, 0) == 2
    assert morse_index_111(2, 1, 1, 3, 1, 1) == 2


def test_macdonald_examples():
    assert macdonald_sym(3, -1) == ZERO
    assert macdonald_sym(3, 0) == 1
    assert macdonald_sym(1, 1) == poly(1, 2, 1)
    # S^1 X = X for any genus
    assert macdonald_sym(2, 1) == poly(1, 4, 1)


def test_macdonald_euler_characteristic():
    for g in range(4):
        for m in range(8):
            expected = (-1) ** m * comb(2 * g - 2, m) if 2 * g - 2 >= 0 else comb(m + 1, m)
            assert macdonald_sym(g, m)(-1) == expected


def test_n111_examples():
    assert n111_direct(EX1) == poly(0, 0, 1, 2, 1)
    assert n111_direct(EX2) == poly(0, 0, 1)
    assert n111_closed(EX1) == poly(0, 0, 1, 2, 1)
    assert n111_closed(EX2) == poly(0, 0, 1)


def test_n111_jacobian_variant():
    assert n111_direct(EX1, include_jacobian=True) == T**2 * (1 + T) ** 2 * poly(1, 2, 1)


def test_n111_s6_prefactor_gives_zero():
    # at a = b = 0 this point has tau = 0, so shift the degrees to get tau < 0
    inp = ModuliInput(1, (CASE_POINTS[C.S6],), -1, 1)
    assert n111_closed(inp) == ZERO == n111_direct(inp)


def test_all_chambers_have_closed_forms():
    assert set(CLOSED_FORMS_111) == set(C)


def test_morse_indices_even_on_grid():
    for inp in default_grid():
        assert all(st.morse_index % 2 == 0 for st in strata(inp, sum_all_d0=True))


def test_sum_all_d0_contains_default():
    for inp in default_grid(genera=(1, 2)):
        full = n111_direct(inp, sum_all_d0=True) - n111_direct(inp)
        assert all(c >= 0 for c in full.terms.values())


def test_multi_point_direct():
    inp = ModuliInput(2, (S3B, S3B), 0, 0)
    p = n111_direct(inp)
    assert p.is_polynomial() and all(c >= 0 for c in p.terms.values())
    assert len(list(strata(inp))) == 4
    with pytest.raises(UnsupportedPunctures):
        n111_closed(inp)


def test_wrong_orientation():
    with pytest.raises(WrongOrientation):
        n111_direct(dualize(EX1))
