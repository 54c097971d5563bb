"""The minimum of the Morse function: moduli of parabolic triples.

For tau < 0 the absolute minimum is identified with the moduli of
``(2g-2)``-stable parabolic triples of type ``(2, 1, a + 4g - 4, b)``
carrying the weights ``(alpha1, alpha2; eta)``.  Its Morse index is zero,
so it enters the Poincaré polynomial of the whole space unshifted.

Only one marked point is supported.  :func:`triples_generic` sums over
the two weight distributions; :func:`triples_closed` evaluates the closed
form of the chamber group.  They must agree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, List

from .errors import NonPolynomialResult, UnsupportedPunctures, WrongOrientation
from .series import ZERO, BiPoly, Factor, LaurentPoly, T, X, extract_coeff
from .strata import Perm, assigned
from .weights import DistributionCase, ModuliInput, WeightPoint, validate

C = DistributionCase

# Morse index of the minimum
MINIMUM_MORSE_INDEX = 0


@dataclass(frozen=True)
class TriplesSpec:
    g: int
    a: int
    b: int
    point: WeightPoint

    @property
    def Delta(self) -> int:
        return self.a + self.b

    @property
    def sigma(self) -> int:
        return 2 * self.g - 2

    @property
    def d1(self) -> int:
        return self.a + 4 * self.g - 4

    @property
    def d2(self) -> int:
        return self.b

    @property
    def triple_type(self) -> tuple:
        return (2, 1, self.d1, self.d2)


def triples_spec(inp: ModuliInput) -> TriplesSpec:
    if inp.s != 1:
        raise UnsupportedPunctures(f"triples formulas need exactly one marked point, got s={inp.s}")
    derived = validate(inp, require_case=False)
    if derived.tau > 0:
        raise WrongOrientation(f"τ={derived.tau} > 0; dualize the input first")
    return TriplesSpec(inp.g, inp.a, inp.b, inp.points[0])


@dataclass(frozen=True)
class TripleIndicators:
    v1: int
    v2: int
    v3: int
    dM: int


def dM_bound(spec: TriplesSpec, perm: Perm) -> int:
    """Degree bound ``floor((d1 + d2 + w2 + eta - 2 w1 + sigma)/3 + 1)``.

    ``d1 + d2`` is the total degree of the triple, ``a + b + 4g - 4``.
    """
    w1, w2 = assigned(spec.point, perm)
    total = Fraction(spec.d1 + spec.d2) + w2 + spec.point.eta - 2 * w1 + spec.sigma
    return math.floor(total / 3 + 1)


def triple_indicators(spec: TriplesSpec, perm: Perm) -> TripleIndicators:
    """Indicators for one distribution.

    ``v3`` is 1 exactly for the identity distribution.  For distinct
    weights that is the same as ``w1 < w2``; for ``alpha1 == alpha2`` it
    keeps the two distributions distinct, which is what the closed forms
    of the equal-weight chambers encode.
    """
    w1, w2 = assigned(spec.point, perm)
    eta = spec.point.eta
    return TripleIndicators(
        v1=int(eta < w2), v2=int(eta < w1), v3=int(perm is Perm.ID), dM=dM_bound(spec, perm),
    )


def _check_polynomial(p: LaurentPoly) -> LaurentPoly:
    if not p.is_polynomial():
        raise NonPolynomialResult(f"negative powers of t survived: {p}")
    return p


def triples_generic(spec: TriplesSpec) -> LaurentPoly:
    """Poincaré polynomial of the triples moduli, summed over distributions."""
    g, d1, d2 = spec.g, spec.d1, spec.d2
    common = [
        Factor((1 + T) ** (4 * g)),
        Factor(1 + T * X, 2 * g),
        Factor(1 - X, -1),
        Factor(1 - T**2 * X, -1),
    ]
    total = ZERO
    for perm in (Perm.ID, Perm.SWAP):
        ind = triple_indicators(spec, perm)
        shift = X ** (ind.dM - d1 + d2 - ind.v1)
        first = T ** (2*d1 - 2*d2 + 2*ind.v2 + 2*ind.v3 - 2*ind.dM)
        second = T ** (-2*d1 + 2*g - 2*ind.v3 + 4*ind.dM)
        total = total + extract_coeff(common + [Factor(shift * first), Factor(1 - T**-2 * X, -1)])
        total = total - extract_coeff(common + [Factor(shift * second), Factor(1 - T**4 * X, -1)])
    # the 1/(1 - t^2) only divides the sum over both terms
    return _check_polynomial(total.divexact(1 - T**2))


# Closed forms by chamber group.  Each returns (numerator, t-power of the
# denominator monomial); the full expression is
#   numerator (1+t)^4g (1+tx)^2g
#   / (t^e (-1+t^2) (t^2-x) (-1+x) (-1+t^2 x) (-1+t^4 x)).
# Arguments: g, b, Delta (divisible by 3).

def _grp_s1a(g, b, D):
    k2 = 2 * D // 3
    num = X**(1 + 2*b - k2 - 2*g) * (
        T**(6*b) * X - T**(4 + 6*b) * X + T**(2*D + 2*g) * (1 + X)
        - T**(4 + 2*D + 2*g) * X * (1 + X) + T**(2 + 6*b) * (-1 + X**2))
    return num, 4*b + k2 - 2*g


def _grp_s1b_s7(g, b, D):
    k2 = 2 * D // 3
    num = -(1 + T**2) * X**(1 + 2*b - k2 - 2*g) * (
        T**(2 + 6*b) - T**(2 + 2*D + 2*g) - T**(6*b) * X + T**(6 + 2*D + 2*g) * X)
    return num, 2 + 4*b + k2 - 2*g


def _grp_s2_s4(g, b, D):
    k2 = 2 * D // 3
    num = -(1 + T**2) * X**(2 + 2*b - k2 - 2*g) * (
        T**(4 + 6*b) - T**(2*D + 2*g) - T**(2 + 6*b) * X + T**(4 + 2*D + 2*g) * X)
    return num, 2 + 4*b + k2 - 2*g


def _grp_s3a_s6_s8(g, b, D):
    k2 = 2 * D // 3
    num = -(1 + T**2) * X**(3 + 2*b - k2 - 2*g) * (
        T**(8 + 6*b) - T**(2*D + 2*g) - T**(6 + 6*b) * X + T**(4 + 2*D + 2*g) * X)
    return num, 4 + 4*b + k2 - 2*g


def _grp_s3b_s5(g, b, D):
    k2 = 2 * D // 3
    num = X**(2 + 2*b - k2 - 2*g) * (
        T**(2 + 6*b) * X - T**(6 + 6*b) * X + T**(2*D + 2*g) * (1 + X)
        - T**(4 + 2*D + 2*g) * X * (1 + X) + T**(4 + 6*b) * (-1 + X**2))
    return num, 2 + 4*b + k2 - 2*g


CLOSED_FORMS_TRIPLES: Dict[FrozenSet[DistributionCase], Callable] = {
    # S7 has the same indicators and bounds as S1b, not S1a; the two
    # forms only differ from genus 3 on
    frozenset({C.S1a}): _grp_s1a,
    frozenset({C.S1b, C.S7}): _grp_s1b_s7,
    frozenset({C.S2, C.S4}): _grp_s2_s4,
    frozenset({C.S3a, C.S6, C.S8}): _grp_s3a_s6_s8,
    frozenset({C.S3b, C.S5}): _grp_s3b_s5,
}


def case_group(case: DistributionCase) -> FrozenSet[DistributionCase]:
    for group in CLOSED_FORMS_TRIPLES:
        if case in group:
            return group
    raise KeyError(case)


def closed_factors_triples(case: DistributionCase, g: int, b: int, Delta: int) -> List[Factor]:
    num, t_exp = CLOSED_FORMS_TRIPLES[case_group(case)](g, b, Delta)
    return [
        Factor(num),
        Factor((1 + T) ** (4 * g)),
        Factor(1 + T * X, 2 * g),
        Factor(T ** t_exp, -1),
        Factor(-1 + T**2, -1),
        Factor(T**2 - X, -1),
        Factor(-1 + X, -1),
        Factor(-1 + T**2 * X, -1),
        Factor(-1 + T**4 * X, -1),
    ]


def triples_closed(spec: TriplesSpec) -> LaurentPoly:
    """Closed-form Poincaré polynomial of the triples moduli for the chamber group."""
    inp = ModuliInput(spec.g, (spec.point,), spec.a, spec.b)
    case = validate(inp, require_case=True).case_label
    return _check_polynomial(extract_coeff(closed_factors_triples(case, spec.g, spec.b, spec.Delta)))
