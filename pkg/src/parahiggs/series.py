"""
Exact Laurent polynomials in ``t`` and truncated power series over them.

Everything here works over Python integers, so no coefficient ever
overflows or rounds.  The three building blocks are

* :class:`LaurentPoly` -- finitely supported ``sum c_k t^k`` with ``k`` in Z,
* :class:`TruncSeries` -- ``sum_{k<=N} c_k x^k`` with Laurent coefficients,
* :class:`BiSeries` -- the same in two variables ``x`` and ``y``.

Rational generating functions are never simplified.  They are written as a
product of :class:`Factor` objects (a polynomial in ``x, y`` raised to an
integer power) and :func:`extract_coeff` expands just enough of each factor
to read off one coefficient::

    >>> from parahiggs.series import T, X, Factor, extract_coeff
    >>> fs = [Factor(1 + T * X, 2), Factor(1 - X, -1), Factor(1 - T**2 * X, -1)]
    >>> str(extract_coeff(fs, 1))
    '1 + 2*t + t^2'
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import InexactDivision, NonUnitLeadingTerm

__all__ = [
    "LaurentPoly", "TruncSeries", "BiSeries", "BiPoly", "Factor",
    "T", "X", "Y", "ZERO", "ONE",
    "lp_add", "lp_mul", "lp_pow", "ts_inv", "extract_coeff",
    "extract_coeff_dense",
]


class LaurentPoly:
    """Immutable Laurent polynomial in ``t`` with integer coefficients.

    Stored densely as a lowest exponent plus a coefficient tuple with no
    zero at either end.  The zero polynomial has an empty tuple.
    """

    __slots__ = ("_low", "_c", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], int, None] = None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {0: terms}
        items = {int(k): int(v) for k, v in terms.items() if v}
        if not items:
            self._low, self._c = 0, ()
        else:
            lo, hi = min(items), max(items)
            self._low = lo
            self._c = tuple(items.get(k, 0) for k in range(lo, hi + 1))
        self._hash = None

    @classmethod
    def _raw(cls, low: int, coeffs: Sequence[int]) -> "LaurentPoly":
        # strip zeros at both ends without going through a dict
        i, j = 0, len(coeffs)
        while i < j and not coeffs[i]:
            i += 1
        while j > i and not coeffs[j - 1]:
            j -= 1
        obj = cls.__new__(cls)
        obj._low = low + i if i < j else 0
        obj._c = tuple(coeffs[i:j])
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw(exponent, (coeff,))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], low: int = 0) -> "LaurentPoly":
        """Coefficients of ``t^low, t^(low+1), ...`` in order."""
        return cls._raw(low, tuple(int(c) for c in coeffs))

    # --- inspection ---------------------------------------------------

    @property
    def terms(self) -> dict:
        return {self._low + i: c for i, c in enumerate(self._c) if c}

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_polynomial(self) -> bool:
        return not self._c or self._low >= 0

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def is_unit_monomial(self) -> bool:
        return len(self._c) == 1 and self._c[0] in (1, -1)

    @property
    def valuation(self) -> int:
        """Lowest exponent present; raises on the zero polynomial."""
        if not self._c:
            raise ValueError("zero polynomial has no valuation")
        return self._low

    @property
    def degree(self) -> int:
        """Highest exponent present; -1 for the zero polynomial."""
        if not self._c:
            return -1
        return self._low + len(self._c) - 1

    def coeff(self, k: int) -> int:
        i = k - self._low
        if 0 <= i < len(self._c):
            return self._c[i]
        return 0

    def coefficients(self) -> list:
        """Coefficients from ``t^0`` up to the degree (no trailing zeros)."""
        if not self._c:
            return []
        if self._low < 0:
            raise ValueError(f"{self} has negative powers of t")
        return [0] * self._low + list(self._c)

    @property
    def leading_coefficient(self) -> int:
        return self._c[-1] if self._c else 0

    def __call__(self, value):
        """Evaluate at a number; negative powers need an invertible value."""
        if not self._c:
            return 0
        acc = 0
        for c in reversed(self._c):
            acc = acc * value + c
        if self._low >= 0:
            return acc * value ** self._low
        return Fraction(acc) / Fraction(value) ** (-self._low)

    # --- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._c:
            return self
        if not self._c:
            return other
        lo = min(self._low, other._low)
        hi = max(self.degree, other.degree)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self._c):
            out[self._low - lo + i] += c
        for i, c in enumerate(other._c):
            out[other._low - lo + i] += c
        return LaurentPoly._raw(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self._low, tuple(-c for c in self._c))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if not a or not b:
            return ZERO
        if len(b) == 1:
            k = b[0]
            return LaurentPoly._raw(self._low + other._low, tuple(c * k for c in a))
        if len(a) == 1:
            k = a[0]
            return LaurentPoly._raw(self._low + other._low, tuple(c * k for c in b))
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return LaurentPoly._raw(self._low + other._low, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.unit_inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t^k``."""
        if not self._c:
            return self
        return LaurentPoly._raw(self._low + k, self._c)

    def unit_inverse(self) -> "LaurentPoly":
        """Inverse of ``+-t^k``; anything else is not a unit."""
        if not self.is_unit_monomial():
            raise NonUnitLeadingTerm(f"{self} is not of the form +-t^k")
        return LaurentPoly._raw(-self._low, self._c)

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient ``self / other``; raises if there is a remainder."""
        other = self._coerce(other)
        if not other._c:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._c:
            return ZERO
        num, den = list(self._c), other._c
        lead = den[-1]
        q = [0] * max(len(num) - len(den) + 1, 0)
        for i in range(len(num) - len(den), -1, -1):
            c = num[i + len(den) - 1]
            if c:
                if c % lead:
                    raise InexactDivision(f"{self} is not divisible by {other}")
                k = c // lead
                q[i] = k
                for j, d in enumerate(den):
                    num[i + j] -= k * d
        if any(num):
            raise InexactDivision(f"{self} is not divisible by {other}")
        return LaurentPoly._raw(self._low - other._low, q)

    # --- comparison / display -----------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._c == other._c and (not self._c or self._low == other._low)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._low, self._c))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self.terms!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k, c in sorted(self.terms.items()):
            if k == 0:
                body = str(abs(c))
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
T = LaurentPoly.monomial(1)


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_pow(a: LaurentPoly, n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("lp_pow needs a non-negative exponent")
    return a ** n


def _lp(c) -> LaurentPoly:
    return c if isinstance(c, LaurentPoly) else LaurentPoly(int(c))


class TruncSeries:
    """Power series in ``x`` known up to and including ``x^order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_lp(c) for c in coeffs]
        if order is None:
            order = max(len(cs) - 1, 0)
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = cs[: order + 1] + [ZERO] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    def __getitem__(self, k: int) -> LaurentPoly:
        if k < 0:
            return ZERO
        if k > self.order:
            raise IndexError(f"x^{k} is beyond the truncation order {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs, min(order, self.order))

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        return TruncSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n)

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return TruncSeries([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = ZERO
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TruncSeries":
        if n < 0:
            return ts_inv(self) ** (-n)
        result = TruncSeries([ONE], self.order)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncSeries([{', '.join(map(str, self.coeffs))}], order={self.order})"


def ts_inv(d: TruncSeries) -> TruncSeries:
    """Reciprocal of ``d`` to the same order.

    The constant coefficient has to be ``+-t^k``; every denominator that
    shows up in the Poincaré formulas has that shape.
    """
    c0 = d.coeffs[0]
    if not c0.is_unit_monomial():
        raise NonUnitLeadingTerm(f"constant term {c0} is not of the form +-t^k")
    inv0 = c0.unit_inverse()
    out = [inv0]
    for n in range(1, d.order + 1):
        acc = ZERO
        for i in range(1, n + 1):
            if d.coeffs[i] and out[n - i]:
                acc = acc + d.coeffs[i] * out[n - i]
        out.append(-(inv0 * acc))
    return TruncSeries(out, d.order)


class BiSeries:
    """Power series in ``x, y`` known up to ``x^nx`` and ``y^ny``."""

    __slots__ = ("orders", "coeffs")

    def __init__(self, coeffs: Mapping, orders: tuple):
        nx, ny = orders
        if nx < 0 or ny < 0:
            raise ValueError("orders must be non-negative")
        grid = [[ZERO] * (ny + 1) for _ in range(nx + 1)]
        for (i, j), c in coeffs.items():
            if 0 <= i <= nx and 0 <= j <= ny:
                grid[i][j] = grid[i][j] + _lp(c)
        self.orders = (nx, ny)
        self.coeffs = tuple(tuple(row) for row in grid)

    def __getitem__(self, ij) -> LaurentPoly:
        i, j = ij
        if i < 0 or j < 0:
            return ZERO
        if i > self.orders[0] or j > self.orders[1]:
            raise IndexError(f"x^{i}y^{j} is beyond the truncation orders {self.orders}")
        return self.coeffs[i][j]

    def _items(self):
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c:
                    yield (i, j), c

    def __add__(self, other: "BiSeries") -> "BiSeries":
        orders = (min(self.orders[0], other.orders[0]), min(self.orders[1], other.orders[1]))
        acc: dict = {}
        for src in (self, other):
            for ij, c in src._items():
                acc[ij] = acc.get(ij, ZERO) + c
        return BiSeries(acc, orders)

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        nx = min(self.orders[0], other.orders[0])
        ny = min(self.orders[1], other.orders[1])
        acc: dict = {}
        right = list(other._items())
        for (i, j), a in self._items():
            if i > nx or j > ny:
                continue
            for (k, l), b in right:
                if i + k <= nx and j + l <= ny:
                    key = (i + k, j + l)
                    acc[key] = acc.get(key, ZERO) + a * b
        return BiSeries(acc, (nx, ny))

    def inverse(self) -> "BiSeries":
        c0 = self.coeffs[0][0]
        if not c0.is_unit_monomial():
            raise NonUnitLeadingTerm(f"constant term {c0} is not of the form +-t^k")
        inv0 = c0.unit_inverse()
        nx, ny = self.orders
        out = [[ZERO] * (ny + 1) for _ in range(nx + 1)]
        terms = [(ij, c) for ij, c in self._items() if ij != (0, 0)]
        for i in range(nx + 1):
            for j in range(ny + 1):
                if i == 0 and j == 0:
                    out[0][0] = inv0
                    continue
                acc = ZERO
                for (k, l), c in terms:
                    if k <= i and l <= j and out[i - k][j - l]:
                        acc = acc + c * out[i - k][j - l]
                out[i][j] = -(inv0 * acc)
        return BiSeries({(i, j): out[i][j] for i in range(nx + 1) for j in range(ny + 1)}, (nx, ny))


class BiPoly:
    """Sparse Laurent polynomial in ``x, y`` with :class:`LaurentPoly` coefficients.

    Only used to *write down* numerators and denominators; the expansion
    itself happens in :func:`extract_coeff`.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        for ij, c in (terms or {}).items():
            c = _lp(c)
            if c:
                clean[(int(ij[0]), int(ij[1]))] = c
        self.terms = clean

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, LaurentPoly)):
            return cls({(0, 0): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        for ij, c in other.terms.items():
            acc[ij] = acc.get(ij, ZERO) + c
        return BiPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({ij: -c for ij, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in other.terms.items():
                key = (i + k, j + l)
                acc[key] = acc.get(key, ZERO) + a * b
        return BiPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have negative powers in BiPoly")
            (i, j), c = next(iter(self.terms.items()))
            return BiPoly({(i * n, j * n): c ** n})
        result = BiPoly({(0, 0): ONE})
        for _ in range(n):
            result = result * self
        return result

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return all(ij == (0, 0) for ij in self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __repr__(self):
        return f"BiPoly({self.terms!r})"


X = BiPoly({(1, 0): 1})
Y = BiPoly({(0, 1): 1})


@dataclass(frozen=True)
class Factor:
    """``poly ** power``; a negative power puts ``poly`` in the denominator."""

    poly: BiPoly
    power: int = 1

    def __post_init__(self):
        object.__setattr__(self, "poly", BiPoly._coerce(self.poly))


def _factor_terms(factors):
    """Split factors into a monomial part and genuine series factors.

    Returns ``(scale, ex, ey, t_divisors, numerators, denominators)``.
    """
    scale, ex, ey = ONE, 0, 0
    t_divisors = []
    nums, dens = [], []
    for f in factors:
        if not isinstance(f, Factor):
            f = Factor(f)
        p, e = f.poly, f.power
        if not p.terms:
            if e < 0:
                raise ZeroDivisionError("zero factor in a denominator")
            if e > 0:
                return ZERO, 0, 0, [], [], []
            continue
        if p.is_monomial():
            (i, j), c = next(iter(p.terms.items()))
            ex += i * e
            ey += j * e
            if e >= 0:
                scale = scale * c ** e
            elif c.is_unit_monomial():
                scale = scale * c.unit_inverse() ** (-e)
            else:
                t_divisors.append(c ** (-e))
            continue
        # pull the lowest x and y powers out as a shift
        i0 = min(i for i, _ in p.terms)
        j0 = min(j for _, j in p.terms)
        if i0 or j0:
            p = BiPoly({(i - i0, j - j0): c for (i, j), c in p.terms.items()})
            ex += i0 * e
            ey += j0 * e
        (nums if e > 0 else dens).extend([p] * abs(e))
    return scale, ex, ey, t_divisors, nums, dens


def _univariate(p: BiPoly, axis: int, order: int) -> TruncSeries:
    cs = [ZERO] * (order + 1)
    for ij, c in p.terms.items():
        k = ij[axis]
        if k <= order:
            cs[k] = cs[k] + c
    return TruncSeries(cs, order)


def _finish(value: LaurentPoly, scale: LaurentPoly, t_divisors) -> LaurentPoly:
    value = value * scale
    for d in t_divisors:
        value = value.divexact(d)
    return value


def extract_coeff(factors: Sequence, k_x: int = 0, k_y: int = 0) -> LaurentPoly:
    """Coefficient of ``x^k_x y^k_y`` in the product of ``factors``.

    Monomial factors (including negative powers of ``x``, ``y``) shift the
    requested index; every other factor must be a polynomial in ``x, y``
    and, when in a denominator, have a constant term ``+-t^k``.  Factors
    involving only ``t`` may appear in a denominator if they divide the
    final coefficient exactly.

    Separable products are expanded one variable at a time; mixed
    numerators such as ``1 + t^2 x y`` are then combined term by term.
    Mixed denominators fall back to :func:`extract_coeff_dense`.
    """
    scale, ex, ey, t_div, nums, dens = _factor_terms(factors)
    nx, ny = k_x - ex, k_y - ey
    if nx < 0 or ny < 0 or not scale:
        return ZERO

    def kind(p):
        xs = any(i for i, _ in p.terms)
        ys = any(j for _, j in p.terms)
        return "xy" if xs and ys else ("x" if xs else "y")

    if any(kind(p) == "xy" for p in dens):
        return extract_coeff_dense(factors, k_x, k_y)

    xs = TruncSeries([ONE], nx)
    ys = TruncSeries([ONE], ny)
    mixed = BiPoly({(0, 0): ONE})
    for p in nums:
        k = kind(p)
        if k == "x":
            xs = xs * _univariate(p, 0, nx)
        elif k == "y":
            ys = ys * _univariate(p, 1, ny)
        else:
            mixed = BiPoly({ij: c for ij, c in (mixed * p).terms.items()
                            if ij[0] <= nx and ij[1] <= ny})
    for p in dens:
        if kind(p) == "x":
            xs = xs * ts_inv(_univariate(p, 0, nx))
        else:
            ys = ys * ts_inv(_univariate(p, 1, ny))

    value = ZERO
    for (i, j), c in mixed.terms.items():
        if i <= nx and j <= ny:
            value = value + c * xs[nx - i] * ys[ny - j]
    return _finish(value, scale, t_div)


def extract_coeff_dense(factors: Sequence, k_x: int = 0, k_y: int = 0) -> LaurentPoly:
    """Same contract as :func:`extract_coeff`, via full bivariate products."""
    scale, ex, ey, t_div, nums, dens = _factor_terms(factors)
    nx, ny = k_x - ex, k_y - ey
    if nx < 0 or ny < 0 or not scale:
        return ZERO
    acc = BiSeries({(0, 0): ONE}, (nx, ny))
    for p in nums:
        acc = acc * BiSeries(p.terms, (nx, ny))
    for p in dens:
        acc = acc * BiSeries(p.terms, (nx, ny)).inverse()
    return _finish(acc[nx, ny], scale, t_div)
