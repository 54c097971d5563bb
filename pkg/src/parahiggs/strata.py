"""Critical submanifolds of type (1,1,1).

A fixed point of this type is ``E0 + E1 + E2`` with line bundles
``E0, E2 ⊂ V`` and ``E1 = W``.  It is labelled by ``d0 = deg E0`` and a
distribution: at every marked point, which of the two V-weights goes to
``E0``.  Each component is ``Jac x S^m1 X x S^m2 X``.

Two ways to get the total contribution are provided:

* :func:`n111_direct` walks the strata one by one,
* :func:`n111_closed` evaluates the one-puncture closed form of the
  chamber the weights fall in.

They must agree; :mod:`parahiggs.verify` checks that on a grid.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterator, Tuple

from .errors import UnsupportedPunctures, WrongOrientation
from .series import ONE, ZERO, BiPoly, Factor, LaurentPoly, T, X, Y, extract_coeff
from .weights import DistributionCase, ModuliInput, WeightPoint, validate

C = DistributionCase


class Perm(enum.Enum):
    """Where the V-weights go at one point: ``ID`` sends alpha1 to E0."""

    ID = "id"
    SWAP = "swap"


Distribution = Tuple[Perm, ...]


def distributions(s: int) -> Iterator[Distribution]:
    return itertools.product((Perm.ID, Perm.SWAP), repeat=s)


def assigned(p: WeightPoint, perm: Perm) -> Tuple[Fraction, Fraction]:
    """(weight on E0, weight on E2)."""
    if perm is Perm.ID:
        return p.alpha1, p.alpha2
    return p.alpha2, p.alpha1


def indicators(inp: ModuliInput, dist: Distribution) -> Tuple[int, int, int]:
    """Return ``(v, v1, v2)``.

    ``v`` counts points where the E0 weight is <= the E2 weight; this is
    the convention under which the stratum sum reproduces the closed forms.
    """
    v = v1 = v2 = 0
    for p, perm in zip(inp.points, dist):
        w0, w2 = assigned(p, perm)
        v += w0 <= w2
        v1 += w0 < p.eta
        v2 += p.eta < w2
    return v, v1, v2


def d0_lower_bound(inp: ModuliInput, dist: Distribution) -> int:
    """Smallest admissible ``deg E0`` for the distribution (tau < 0)."""
    total = Fraction(inp.Delta)
    for p, perm in zip(inp.points, dist):
        w0, w2 = assigned(p, perm)
        total += p.eta + w2 - 2 * w0
    return math.floor(total / 3 + 1)


def morse_index_111(g: int, s: int, d0: int, Delta: int, b: int, v: int) -> int:
    return 2 * g - 2 + 2 * (2 * d0 - Delta + b) + 2 * (s - v)


@lru_cache(maxsize=None)
def macdonald_sym(g: int, m: int) -> LaurentPoly:
    """Poincaré polynomial of the symmetric product ``S^m X``, genus ``g``."""
    if m < 0:
        return ZERO
    factors = [Factor(1 + T * X, 2 * g), Factor(1 - X, -1), Factor(1 - T**2 * X, -1)]
    return extract_coeff(factors, m)


@dataclass(frozen=True)
class Stratum111:
    d0: int
    dist: Distribution
    v: int
    v1: int
    v2: int
    m1: int
    m2: int
    morse_index: int

    def poincare(self, g: int, include_jacobian: bool = False) -> LaurentPoly:
        """``t^lambda P(N(d0, dist))``; the Jacobian factor is optional."""
        if self.m1 < 0 or self.m2 < 0:
            return ZERO
        p = macdonald_sym(g, self.m1) * macdonald_sym(g, self.m2)
        if include_jacobian:
            p = p * (1 + T) ** (2 * g)
        return p.shift(self.morse_index)


def stratum(inp: ModuliInput, dist: Distribution, d0: int) -> Stratum111:
    v, v1, v2 = indicators(inp, dist)
    g, b, D = inp.g, inp.b, inp.Delta
    return Stratum111(
        d0=d0, dist=tuple(dist), v=v, v1=v1, v2=v2,
        m1=b - d0 + 2 * g - 2 + v1,
        m2=D - d0 - 2 * b + 2 * g - 2 + v2,
        morse_index=morse_index_111(g, inp.s, d0, D, b, v),
    )


def strata(inp: ModuliInput, sum_all_d0: bool = False) -> Iterator[Stratum111]:
    """All (1,1,1) strata; only the lowest ``d0`` per distribution unless
    ``sum_all_d0``, in which case ``d0`` runs up while ``m1, m2 >= 0``."""
    for dist in distributions(inp.s):
        d0 = d0_lower_bound(inp, dist)
        st = stratum(inp, dist, d0)
        yield st
        if not sum_all_d0:
            continue
        while True:
            d0 += 1
            st = stratum(inp, dist, d0)
            if st.m1 < 0 or st.m2 < 0:
                break
            yield st


def _require_negative_tau(inp: ModuliInput, require_case: bool):
    derived = validate(inp, require_case=require_case)
    if derived.tau > 0:
        raise WrongOrientation(f"τ={derived.tau} > 0; dualize the input first")
    return derived


def n111_direct(inp: ModuliInput, include_jacobian: bool = False,
                sum_all_d0: bool = False) -> LaurentPoly:
    """Sum ``t^lambda P(N(d0, dist))`` over the (1,1,1) strata, any number of points."""
    _require_negative_tau(inp, require_case=False)
    total = ZERO
    for st in strata(inp, sum_all_d0):
        total = total + st.poincare(inp.g, include_jacobian)
    return total


# One-puncture closed forms.  Each returns the numerator monomial/polynomial
# multiplying (1+tx)^2g (1+ty)^2g / ((1-x)(1-t^2 x)(1-y)(1-t^2 y)); the
# Coeff_{x^0 y^0} of the whole thing is the (1,1,1) contribution.
# Arguments: g, b, k = Delta / 3.

def _s1a(g, b, k):
    return T**(2*b - 2*k + 2*g) * X**(2 - b + k - 2*g) * Y**(1 + 2*b - 2*k - 2*g) * (1 + T**2 * X * Y)


def _s1b(g, b, k):
    return T**(-2 + 2*b - 2*k + 2*g) * (1 + T**2) * X**(2 - b + k - 2*g) * Y**(1 + 2*b - 2*k - 2*g)


def _s2(g, b, k):
    return T**(2*b - 2*k + 2*g) * (1 + T**2) * X**(2 - b + k - 2*g) * Y**(2 + 2*b - 2*k - 2*g)


def _s3a(g, b, k):
    return T**(2 + 2*b - 2*k + 2*g) * (1 + T**2) * X**(2 - b + k - 2*g) * Y**(3 + 2*b - 2*k - 2*g)


def _s3b(g, b, k):
    return T**(2*b - 2*k + 2*g) * X**(1 - b + k - 2*g) * Y**(2 + 2*b - 2*k - 2*g) * (1 + T**2 * X * Y)


def _s4(g, b, k):
    return T**(2*b - 2*k + 2*g) * X**(2 - b + k - 2*g) * (1 + T**2 * X) * Y**(2 + 2*b - 2*k - 2*g)


def _s5(g, b, k):
    return T**(2*b - 2*k + 2*g) * X**(2 - b + k - 2*g) * Y**(2 + 2*b - 2*k - 2*g) * (1 + T**2 * Y)


def _s6(g, b, k):
    return 2 * T**(2 + 2*b - 2*k + 2*g) * X**(3 - b + k - 2*g) * Y**(3 + 2*b - 2*k - 2*g)


def _s7(g, b, k):
    return 2 * T**(-2 + 2*b - 2*k + 2*g) * X**(2 - b + k - 2*g) * Y**(1 + 2*b - 2*k - 2*g)


def _s8(g, b, k):
    D = 3 * k
    return 2 * T**(-2 + 2*b + 4*(1 + k) - 2*D + 2*g) * X**(2 - b + k - 2*g) * Y**(3 + 2*b - 2*k - 2*g)


CLOSED_FORMS_111: Dict[DistributionCase, Callable[[int, int, int], BiPoly]] = {
    C.S1a: _s1a, C.S1b: _s1b, C.S2: _s2, C.S3a: _s3a, C.S3b: _s3b,
    C.S4: _s4, C.S5: _s5, C.S6: _s6, C.S7: _s7, C.S8: _s8,
}


def closed_factors_111(case: DistributionCase, g: int, b: int, Delta: int) -> list:
    numerator = CLOSED_FORMS_111[case](g, b, Delta // 3)
    return [
        Factor(numerator),
        Factor(1 + T * X, 2 * g),
        Factor(1 + T * Y, 2 * g),
        Factor(X - 1, -1), Factor(T**2 * X - 1, -1),
        Factor(Y - 1, -1), Factor(T**2 * Y - 1, -1),
    ]


def n111_closed(inp: ModuliInput) -> LaurentPoly:
    """Closed-form (1,1,1) contribution for one marked point."""
    if inp.s != 1:
        raise UnsupportedPunctures(f"closed forms need exactly one marked point, got s={inp.s}")
    derived = _require_negative_tau(inp, require_case=True)
    return extract_coeff(closed_factors_111(derived.case_label, inp.g, inp.b, inp.Delta))
