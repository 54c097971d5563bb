"""Parabolic weight data, the Toledo invariant and the weight chambers.

Weights are :class:`fractions.Fraction` throughout; the chamber tests are
strict/equal comparisons and would be meaningless in floating point.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import (
    InvalidWeights,
    NonGenericWeights,
    UnclassifiableWeights,
    UnsupportedDelta,
    ValidationError,
)

RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: RationalLike) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` exactly.  Decimal strings are refused."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise InvalidWeights(f"expected a rational 'p/q', got {text!r}")
    m = _RATIONAL_RE.match(text)
    if not m:
        raise InvalidWeights(f"expected a rational 'p/q', got {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise InvalidWeights(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class DistributionCase(str, enum.Enum):
    """Weight chambers at a single marked point."""

    S1a = "S1a"
    S1b = "S1b"
    S2 = "S2"
    S3a = "S3a"
    S3b = "S3b"
    S4 = "S4"
    S5 = "S5"
    S6 = "S6"
    S7 = "S7"
    S8 = "S8"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class WeightPoint:
    """Weights ``alpha1 <= alpha2`` on V and ``eta`` on W at one marked point."""

    alpha1: Fraction
    alpha2: Fraction
    eta: Fraction

    def __post_init__(self):
        for name in ("alpha1", "alpha2", "eta"):
            object.__setattr__(self, name, parse_rational(getattr(self, name)))
        a1, a2, eta = self.alpha1, self.alpha2, self.eta
        if not 0 <= a1 <= a2 < 1:
            raise InvalidWeights(f"need 0 <= alpha1 <= alpha2 < 1, got ({a1}, {a2})")
        if not 0 <= eta < 1:
            raise InvalidWeights(f"need 0 <= eta < 1, got {eta}")

    @property
    def has_zero_weight(self) -> bool:
        return 0 in (self.alpha1, self.alpha2, self.eta)

    def as_dict(self) -> dict:
        return {"alpha1": format_rational(self.alpha1),
                "alpha2": format_rational(self.alpha2),
                "eta": format_rational(self.eta)}


@dataclass(frozen=True)
class ModuliInput:
    """Genus, degrees ``a = deg V``, ``b = deg W`` and weights per marked point."""

    g: int
    points: tuple
    a: int
    b: int

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))

    @property
    def s(self) -> int:
        return len(self.points)

    @property
    def Delta(self) -> int:
        return self.a + self.b

    def as_dict(self) -> dict:
        return {"g": self.g, "a": self.a, "b": self.b,
                "points": [p.as_dict() for p in self.points]}


@dataclass(frozen=True)
class Derived:
    Delta: int
    tau: Fraction
    case_label: Optional[DistributionCase] = None

    def as_dict(self) -> dict:
        return {"Delta": self.Delta, "tau": format_rational(self.tau),
                "case": None if self.case_label is None else self.case_label.value}


def toledo(inp: ModuliInput) -> Fraction:
    """Toledo invariant ``(2/3)(Delta - 3b + sum(alpha1 + alpha2 - 2 eta))``."""
    total = Fraction(inp.Delta - 3 * inp.b)
    for p in inp.points:
        total += p.alpha1 + p.alpha2 - 2 * p.eta
    return Fraction(2, 3) * total


def classify(p: WeightPoint) -> DistributionCase:
    """Chamber of a weight point.

    The S1 and S3 sub-chambers compare the two gaps around the middle
    weight; a tie between them is not a chamber and is rejected.
    """
    a1, a2, eta = p.alpha1, p.alpha2, p.eta
    if a1 == a2:
        if eta == a1:
            return DistributionCase.S6
        return DistributionCase.S7 if eta < a1 else DistributionCase.S8
    if eta < a1:
        gap_hi, gap_lo = a2 - a1, a1 - eta
        if gap_hi == gap_lo:
            raise UnclassifiableWeights("α₂−α₁ = α₁−η")
        return DistributionCase.S1a if gap_hi > gap_lo else DistributionCase.S1b
    if eta == a1:
        return DistributionCase.S4
    if eta < a2:
        return DistributionCase.S2
    if eta == a2:
        return DistributionCase.S5
    gap_hi, gap_lo = eta - a2, a2 - a1
    if gap_hi == gap_lo:
        raise UnclassifiableWeights("η−α₂ = α₂−α₁")
    return DistributionCase.S3a if gap_hi > gap_lo else DistributionCase.S3b


def validate(inp: ModuliInput, require_case: bool = True) -> Derived:
    """Check the input and compute ``Delta``, ``tau`` and (for s = 1) the chamber.

    With ``require_case=False`` an unclassifiable single point yields
    ``case_label=None`` instead of an error; the direct summation does not
    need the chamber.
    """
    if not isinstance(inp.g, int) or inp.g < 0:
        raise ValidationError(f"genus must be a non-negative integer, got {inp.g!r}")
    if inp.s < 1:
        raise ValidationError("at least one marked point is required")
    for p in inp.points:
        if not isinstance(p, WeightPoint):
            raise InvalidWeights(f"expected WeightPoint, got {p!r}")
    if inp.Delta % 3:
        raise UnsupportedDelta(f"Δ={inp.Delta} not ≡ 0 (mod 3)")
    tau = toledo(inp)
    if tau == 0:
        raise NonGenericWeights("τ=0: the weights are not generic")
    case = None
    if inp.s == 1:
        try:
            case = classify(inp.points[0])
        except UnclassifiableWeights:
            if require_case:
                raise
    return Derived(inp.Delta, tau, case)


def _dual_weights(ws: Sequence[Fraction]) -> list:
    # a zero lowest weight stays put, the others reflect to 1 - w
    if ws[0] == 0:
        return sorted([w for w in ws if w == 0] + [1 - w for w in ws if w != 0])
    return sorted(1 - w for w in ws)


def dual_point(p: WeightPoint) -> WeightPoint:
    a1, a2 = _dual_weights([p.alpha1, p.alpha2])
    (eta,) = _dual_weights([p.eta])
    return WeightPoint(a1, a2, eta)


def dualize(inp: ModuliInput) -> ModuliInput:
    """Parabolic dual ``V* + W*``: degrees negate, weights reflect."""
    return ModuliInput(inp.g, tuple(dual_point(p) for p in inp.points), -inp.a, -inp.b)
