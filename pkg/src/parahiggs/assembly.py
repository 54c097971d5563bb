"""Poincaré polynomial of the whole moduli space and its diagnostics.

For tau < 0 the perfect Bott-Morse stratification gives

    P_t(U) = P_t(N_(1,1,1)) + P_t(triples minimum),

the second term entering with Morse index 0.  Inputs with tau > 0 are
sent through the parabolic dual first, which is an isomorphism of moduli
spaces and flips the sign of tau.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import List, Optional

from .errors import MethodMismatch, UnsupportedPunctures, ValidationError
from .series import LaurentPoly
from .strata import n111_closed, n111_direct
from .triples import MINIMUM_MORSE_INDEX, triples_closed, triples_generic, triples_spec
from .weights import Derived, ModuliInput, dualize, validate

METHODS = ("closed", "direct", "both")


@dataclass(frozen=True)
class ModuliReport:
    input: ModuliInput
    derived: Derived
    poincare: LaurentPoly
    n111_contribution: LaurentPoly
    triples_contribution: LaurentPoly
    complex_dimension: int
    method: str
    dualized: bool = False
    working_derived: Optional[Derived] = None
    discrepancies: List[dict] = field(default_factory=list)
    duality_palindrome: Optional[bool] = None
    duality_palindrome_2dim: Optional[bool] = None
    euler_characteristic: Optional[int] = None
    nonnegative: Optional[bool] = None

    @property
    def betti(self) -> List[int]:
        return self.poincare.coefficients()

    @property
    def real_dimension(self) -> int:
        return 2 * self.complex_dimension


def dimension(inp: ModuliInput) -> int:
    """Complex dimension ``1 + 9(g-1) + sum(3 - c)``, ``c`` = #{alpha_i = eta}."""
    total = 1 + 9 * (inp.g - 1)
    for p in inp.points:
        c = (p.alpha1 == p.eta) + (p.alpha2 == p.eta)
        total += 3 - c
    return total


def is_palindromic(p: LaurentPoly, about: int) -> bool:
    """``c_k == c_{about-k}`` for every k, with nothing outside ``[0, about]``."""
    if not p:
        return True
    if p.valuation < 0 or p.degree > about:
        return False
    return all(p.coeff(k) == p.coeff(about - k) for k in range(about + 1))


def diagnostics(report: ModuliReport) -> ModuliReport:
    """Attach duality, Euler characteristic and sign facts.  Reported, never asserted."""
    p = report.poincare
    return dataclasses.replace(
        report,
        duality_palindrome=is_palindromic(p, max(p.degree, 0)),
        duality_palindrome_2dim=is_palindromic(p, 2 * report.complex_dimension),
        euler_characteristic=int(p(-1)),
        nonnegative=all(c >= 0 for c in p.terms.values()),
    )


def _contributions(inp: ModuliInput, method: str, include_jacobian: bool, sum_all_d0: bool):
    if method == "closed":
        return n111_closed(inp), triples_closed(triples_spec(inp)), []
    if method == "direct":
        return (n111_direct(inp, include_jacobian, sum_all_d0),
                triples_generic(triples_spec(inp)), [])
    n_closed, n_direct = n111_closed(inp), n111_direct(inp)
    spec = triples_spec(inp)
    t_closed, t_generic = triples_closed(spec), triples_generic(spec)
    notes = []
    if n_closed != n_direct:
        notes.append({"part": "n111", "closed": str(n_closed), "direct": str(n_direct)})
    if t_closed != t_generic:
        notes.append({"part": "triples", "closed": str(t_closed), "direct": str(t_generic)})
    if notes:
        err = MethodMismatch(f"closed and direct evaluations disagree: {notes}")
        err.notes = notes
        raise err
    return n_closed, t_closed, notes


def poincare_U(inp: ModuliInput, method: str = "both", include_jacobian: bool = False,
               sum_all_d0: bool = False) -> ModuliReport:
    """Assemble ``P_t(U)`` for one marked point.

    ``method`` picks the closed forms, the direct stratum sums, or both
    (which must agree exactly, else :class:`MethodMismatch`).  The
    Jacobian / all-``d0`` variants only exist on the direct route.
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    if (include_jacobian or sum_all_d0) and method != "direct":
        raise ValueError("include_jacobian and sum_all_d0 need method='direct'")
    if inp.s != 1:
        raise UnsupportedPunctures(f"assembly needs exactly one marked point, got s={inp.s}")
    require_case = method != "direct"
    derived = validate(inp, require_case=require_case)
    work, dualized = inp, False
    if derived.tau > 0:
        work, dualized = dualize(inp), True
    working_derived = validate(work, require_case=require_case)
    if working_derived.tau > 0:
        raise ValidationError(f"dual input still has τ={working_derived.tau} > 0")

    n111, trip, notes = _contributions(work, method, include_jacobian, sum_all_d0)
    trip = trip.shift(MINIMUM_MORSE_INDEX)
    report = ModuliReport(
        input=inp,
        derived=derived,
        poincare=n111 + trip,
        n111_contribution=n111,
        triples_contribution=trip,
        complex_dimension=dimension(inp),
        method=method,
        dualized=dualized,
        working_derived=working_derived,
        discrepancies=notes,
    )
    return diagnostics(report)


def n111_only(inp: ModuliInput, include_jacobian: bool = False,
              sum_all_d0: bool = False) -> LaurentPoly:
    """(1,1,1) contribution for any number of points, dualizing if tau > 0."""
    derived = validate(inp, require_case=False)
    work = dualize(inp) if derived.tau > 0 else inp
    return n111_direct(work, include_jacobian, sum_all_d0)
