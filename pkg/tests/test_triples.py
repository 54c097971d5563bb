"""Minimum stratum: parabolic triples, generic sum against closed forms."""
import pytest

from parahiggs.errors import UnsupportedPunctures, WrongOrientation
from parahiggs.strata import Perm
from parahiggs.triples import (
    CLOSED_FORMS_TRIPLES, case_group, dM_bound, triple_indicators, triples_closed,
    triples_generic, triples_spec,
)
from parahiggs.verify import CASE_POINTS, default_grid
from parahiggs.weights import DistributionCase as C, ModuliInput, dualize
from helpers import EX1, EX2, S3B, poly

QUARTIC = poly(1, 4, 6, 4, 1)


def test_spec_shape():
    spec = triples_spec(ModuliInput(2, (S3B,), -1, 1))
    assert spec.triple_type == (2, 1, 3, 1) and spec.sigma == 2


def test_dM_bound():
    spec = triples_spec(EX1)
    assert dM_bound(spec, Perm.ID) == 1
    assert dM_bound(spec, Perm.SWAP) == 0
    s6 = triples_spec(ModuliInput(1, (CASE_POINTS[C.S6],), -1, 1))
    assert dM_bound(s6, Perm.SWAP) == 1


def test_indicators_equal_weights_keep_distributions_apart():
    spec = triples_spec(ModuliInput(1, (CASE_POINTS[C.S7],), -1, 1))
    assert triple_indicators(spec, Perm.ID).v3 == 1
    assert triple_indicators(spec, Perm.SWAP).v3 == 0


@pytest.mark.parametrize("inp", [EX1, EX2])
def test_worked_examples(inp):
    spec = triples_spec(inp)
    assert triples_generic(spec) == QUARTIC
    assert triples_closed(spec) == QUARTIC


def test_groups_partition_chambers():
    seen = [c for grp in CLOSED_FORMS_TRIPLES for c in grp]
    assert sorted(seen) == sorted(C) and len(seen) == len(set(seen))
    assert case_group(C.S7) == frozenset({C.S1b, C.S7})


@pytest.mark.parametrize("case", list(C))
def test_generic_equals_closed_per_chamber(case):
    for inp in default_grid(genera=(1, 2, 3, 4), points=[CASE_POINTS[case]]):
        spec = triples_spec(inp)
        assert triples_generic(spec) == triples_closed(spec), inp


def test_constant_term_one_when_nonempty():
    nonempty = 0
    for inp in default_grid():
        p = triples_generic(triples_spec(inp))
        assert p.is_polynomial()
        if p:
            nonempty += 1
            assert p.coeff(0) == 1
    assert nonempty > 50


def test_rejections():
    with pytest.raises(UnsupportedPunctures):
        triples_spec(ModuliInput(1, (S3B, S3B), 0, 0))
    with pytest.raises(WrongOrientation):
        triples_spec(dualize(EX1))
