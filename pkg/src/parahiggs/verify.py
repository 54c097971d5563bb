"""Cross-path reconciliation over a grid of inputs.

Every input is pushed through both evaluation routes for each part of the
Poincaré polynomial, plus a handful of structural checks.  Used by the
``verify`` subcommand and by the acceptance tests.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction as F
from typing import Dict, Iterable, List, Optional, Sequence

from .assembly import poincare_U
from .series import LaurentPoly
from .strata import n111_closed, n111_direct, strata
from .triples import triples_closed, triples_generic, triples_spec
from .weights import DistributionCase, ModuliInput, WeightPoint, dualize, toledo

C = DistributionCase

# one interior point per chamber, denominators kept small
CASE_POINTS: Dict[DistributionCase, WeightPoint] = {
    C.S1a: WeightPoint(F(2, 10), F(6, 10), F(1, 10)),
    C.S1b: WeightPoint(F(5, 10), F(6, 10), F(1, 10)),
    C.S2: WeightPoint(F(1, 10), F(6, 10), F(3, 10)),
    C.S3a: WeightPoint(F(1, 10), F(2, 10), F(8, 10)),
    C.S3b: WeightPoint(F(1, 10), F(5, 10), F(6, 10)),
    C.S4: WeightPoint(F(2, 10), F(6, 10), F(2, 10)),
    C.S5: WeightPoint(F(1, 10), F(5, 10), F(5, 10)),
    C.S6: WeightPoint(F(3, 10), F(3, 10), F(3, 10)),
    C.S7: WeightPoint(F(5, 10), F(5, 10), F(1, 10)),
    C.S8: WeightPoint(F(2, 10), F(2, 10), F(7, 10)),
}

# the two worked genus-one examples: input, (1,1,1) part, triples part, total
WORKED_EXAMPLES = [
    (ModuliInput(1, (CASE_POINTS[C.S3b],), 0, 0),
     [0, 0, 1, 2, 1], [1, 4, 6, 4, 1], [1, 4, 7, 6, 2]),
    (ModuliInput(1, (CASE_POINTS[C.S5],), 0, 0),
     [0, 0, 1], [1, 4, 6, 4, 1], [1, 4, 7, 4, 1]),
]


def default_grid(genera: Iterable[int] = (1, 2, 3), deltas: Iterable[int] = (-3, 0, 3),
                 b_offsets: Iterable[int] = range(-1, 4),
                 points: Sequence[WeightPoint] = tuple(CASE_POINTS.values())) -> List[ModuliInput]:
    """All one-point inputs with tau < 0 from genus x Delta x b x chamber point.

    ``b`` runs over ``Delta/3 + offset``; ``a = Delta - b``.
    """
    out = []
    for g, D, off, p in itertools.product(genera, deltas, b_offsets, points):
        if D % 3:
            continue
        b = D // 3 + off
        inp = ModuliInput(g, (p,), D - b, b)
        if toledo(inp) < 0:
            out.append(inp)
    return out


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class InputReport:
    input: ModuliInput
    checks: List[Check] = field(default_factory=list)
    poincare: Optional[LaurentPoly] = None

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def _describe(inp: ModuliInput) -> str:
    p = inp.points[0]
    return f"g={inp.g} a={inp.a} b={inp.b} (α1,α2,η)=({p.alpha1},{p.alpha2},{p.eta})"


def _equal(name: str, left: LaurentPoly, right: LaurentPoly, labels=("closed", "direct")) -> Check:
    ok = left == right
    return Check(name, ok, "" if ok else f"{labels[0]}: {left}\n    {labels[1]}: {right}")


def check_input(inp: ModuliInput) -> InputReport:
    rep = InputReport(inp)
    try:
        rep.poincare = _run_checks(inp, rep.checks)
    except ArithmeticError as exc:
        # kernel or shape errors on either route count as a failed check
        rep.checks.append(Check("evaluation", False, f"{type(exc).__name__}: {exc}"))
    return rep


def _run_checks(inp: ModuliInput, checks: List[Check]) -> LaurentPoly:
    n_closed, n_direct = n111_closed(inp), n111_direct(inp)
    checks.append(_equal("n111 closed = direct", n_closed, n_direct))
    spec = triples_spec(inp)
    t_closed, t_generic = triples_closed(spec), triples_generic(spec)
    checks.append(_equal("triples closed = generic", t_closed, t_generic, ("closed", "generic")))

    indices = [st.morse_index for st in strata(inp, sum_all_d0=True)]
    odd = [i for i in indices if i % 2]
    checks.append(Check("Morse indices even", not odd, f"odd indices {odd}" if odd else ""))

    total = n_direct + t_generic
    parts = {"n111": n_direct, "triples": t_generic, "total": total}
    neg = [k for k, v in parts.items() if not v.is_polynomial()]
    checks.append(Check("no negative t-powers", not neg, f"in {neg}" if neg else ""))
    bad = [c for c in total.terms.values() if c < 0]
    checks.append(Check("Betti numbers non-negative", not bad, f"{total}" if bad else ""))
    c0_ok = (not total) or total.coeff(0) == 1
    checks.append(Check("empty or constant term 1", c0_ok, "" if c0_ok else f"{total}"))

    if not any(p.has_zero_weight for p in inp.points):
        dual = poincare_U(dualize(inp), method="both").poincare
        checks.append(_equal("dualization invariance", total, dual, ("input", "dual")))
    return total


@dataclass
class VerifyResult:
    reports: List[InputReport]

    @property
    def failures(self) -> List[InputReport]:
        return [r for r in self.reports if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def nonempty(self) -> int:
        return sum(1 for r in self.reports if r.poincare)

    def summary_lines(self) -> List[str]:
        lines = []
        for r in self.failures:
            for c in r.checks:
                if not c.ok:
                    lines.append(f"FAIL {c.name}: {_describe(r.input)}")
                    if c.detail:
                        lines.append(f"    {c.detail}")
        status = "ok" if self.ok else f"{len(self.failures)} failing"
        lines.append(f"checked {len(self.reports)} inputs ({self.nonempty} non-empty): {status}")
        return lines


def run_verify(inputs: Iterable[ModuliInput]) -> VerifyResult:
    return VerifyResult([check_input(inp) for inp in inputs])
