"""Truncated exact series.

:class:`IntSeries` is a truncated Laurent series with exact coefficients
(``int`` or :class:`fractions.Fraction`, reduced to ``int`` whenever
integral).  :class:`UPoly` is a polynomial in a second variable (``u`` or
``y``) whose coefficients are :class:`IntSeries` in ``x``.  Both carry their
truncation explicitly and never report a coefficient they do not know.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Sequence, Union

from .errors import (
    DivisionByZeroSeries,
    InsufficientDepth,
    NonUnitConstantTerm,
    OddValuation,
    SeriesError,
    TruncationError,
)

Number = Union[int, Fraction]


def _norm(c) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _div(a: Number, b: Number) -> Number:
    if b == 1:
        return a
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return _norm(Fraction(a) / b)


class IntSeries:
    """``sum(coeffs[i] * x**(val + i)) + O(x**order)``.

    Invariants: ``coeffs[0] != 0`` unless the series is zero to its order,
    in which case ``coeffs == []`` and ``val == order``.
    """

    __slots__ = ("val", "coeffs", "order")

    def __init__(self, coeffs: Iterable[Number], val: int = 0, order: int | None = None):
        cs = [_norm(c) for c in coeffs]
        if order is None:
            order = val + len(cs)
        cs = cs[: max(order - val, 0)]
        i = 0
        while i < len(cs) and cs[i] == 0:
            i += 1
        cs = cs[i:]
        while cs and cs[-1] == 0:
            cs.pop()
        self.val = val + i if cs else order
        self.coeffs = cs
        self.order = order

    # ---- constructors -------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> IntSeries:
        return cls([], order, order)

    @classmethod
    def one(cls, order: int) -> IntSeries:
        return cls([1], 0, order)

    @classmethod
    def x(cls, order: int) -> IntSeries:
        return cls([1], 1, order)

    @classmethod
    def monomial(cls, c: Number, k: int, order: int) -> IntSeries:
        return cls([c], k, order)

    @classmethod
    def poly(cls, coeffs: Sequence[Number] | dict[int, Number], order: int) -> IntSeries:
        """An exact polynomial (list from ``x^0`` or ``{exponent: coeff}``) truncated to ``order``."""
        if isinstance(coeffs, dict):
            if not coeffs:
                return cls.zero(order)
            lo = min(coeffs)
            cs = [0] * (max(coeffs) - lo + 1)
            for k, c in coeffs.items():
                cs[k - lo] = c
            return cls(cs, lo, order)
        return cls(coeffs, 0, order)

    @classmethod
    def geometric(cls, order: int) -> IntSeries:
        return cls([1] * max(order, 0), 0, order)

    # ---- access ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Number:
        if k >= self.order:
            raise TruncationError(f"coefficient of x^{k} is beyond the truncation order {self.order}")
        i = k - self.val
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def coeff(self, k: int) -> Number:
        return self[k]

    def coefficients(self, stop: int | None = None, start: int = 0) -> list[Number]:
        stop = self.order if stop is None else stop
        return [self[k] for k in range(start, stop)]

    def items(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.val + i, c

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def assert_integral(self) -> IntSeries:
        if not self.is_integral():
            bad = next(k for k, c in self.items() if not isinstance(c, int))
            raise SeriesError(f"non-integral coefficient at x^{bad}: {self[bad]}")
        return self

    # ---- structure -----------------------------------------------------
    def truncate(self, order: int) -> IntSeries:
        if order > self.order:
            raise TruncationError(f"cannot raise the order from {self.order} to {order}")
        return IntSeries(self.coeffs, self.val, order)

    def shift(self, k: int) -> IntSeries:
        """Multiply by ``x**k`` (``k`` may be negative)."""
        return IntSeries(self.coeffs, self.val + k, self.order + k)

    def stretch(self, k: int) -> IntSeries:
        """Substitute ``x -> x**k`` for a positive integer ``k``."""
        if k < 1:
            raise ValueError("stretch factor must be positive")
        cs: list[Number] = []
        for i, c in enumerate(self.coeffs):
            if i:
                cs.extend([0] * (k - 1))
            cs.append(c)
        return IntSeries(cs, self.val * k, self.order * k)

    def sample(self, k: int, offset: int = 0) -> IntSeries:
        """The series ``sum_n [x^(k*n + offset)] * x^n`` (inverse of :meth:`stretch`)."""
        top = -(-(self.order - offset) // k)
        lo = -((offset - self.val) // k) if self.coeffs else top
        cs = [self[k * n + offset] for n in range(lo, top)]
        return IntSeries(cs, lo, top)

    # ---- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other, order: int) -> IntSeries | None:
        if isinstance(other, IntSeries):
            return other
        if isinstance(other, (int, Rational)):
            # exact constant: order large enough never to limit the other side
            return IntSeries([other], 0, max(order, 1))
        return None

    def __neg__(self) -> IntSeries:
        return IntSeries([-c for c in self.coeffs], self.val, self.order)

    def __pos__(self) -> IntSeries:
        return self

    def __add__(self, other) -> IntSeries:
        o = self._coerce(other, self.order)
        if o is None:
            return NotImplemented
        order = min(self.order, o.order)
        lo = min(self.val, o.val, order)
        n = order - lo
        cs: list[Number] = [0] * max(n, 0)
        for s in (self, o):
            base = s.val - lo
            for i, c in enumerate(s.coeffs):
                j = base + i
                if j >= n:
                    break
                cs[j] += c
        return IntSeries(cs, lo, order)

    __radd__ = __add__

    def __sub__(self, other) -> IntSeries:
        o = self._coerce(other, self.order)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> IntSeries:
        return (-self) + other

    def __mul__(self, other) -> IntSeries:
        if isinstance(other, (int, Rational)) and not isinstance(other, IntSeries):
            return IntSeries([c * other for c in self.coeffs], self.val, self.order)
        if not isinstance(other, IntSeries):
            return NotImplemented
        order = min(self.order + other.val, other.order + self.val)
        val = self.val + other.val
        n = order - val
        if n <= 0 or not self.coeffs or not other.coeffs:
            return IntSeries.zero(order)
        a, b = self.coeffs[:n], other.coeffs[:n]
        cs: list[Number] = [0] * n
        for i, ai in enumerate(a):
            if not ai:
                continue
            lim = min(len(b), n - i)
            for j in range(lim):
                bj = b[j]
                if bj:
                    cs[i + j] += ai * bj
        return IntSeries(cs, val, order)

    __rmul__ = __mul__

    def inverse(self) -> IntSeries:
        if not self.coeffs:
            raise DivisionByZeroSeries("series is zero to its truncation order")
        n = self.order - self.val
        b = self.coeffs
        b0 = b[0]
        q: list[Number] = []
        for k in range(n):
            acc: Number = 1 if k == 0 else 0
            for j in range(1, min(k, len(b) - 1) + 1):
                if b[j]:
                    acc -= b[j] * q[k - j]
            q.append(_div(acc, b0))
        return IntSeries(q, -self.val, -self.val + n)

    def __truediv__(self, other) -> IntSeries:
        if isinstance(other, (int, Rational)) and not isinstance(other, IntSeries):
            if other == 0:
                raise DivisionByZeroSeries("division by the zero scalar")
            return IntSeries([_div(c, other) for c in self.coeffs], self.val, self.order)
        if not isinstance(other, IntSeries):
            return NotImplemented
        if not other.coeffs:
            raise DivisionByZeroSeries("series is zero to its truncation order")
        if not self.coeffs:
            return IntSeries.zero(self.order - other.val)
        # relative precision is the smaller of the two
        prec = min(self.order - self.val, other.order - other.val)
        b = other.truncate(other.val + prec) if other.order > other.val + prec else other
        a = self if not self.coeffs else self.truncate(min(self.order, self.val + prec))
        return a * b.inverse()

    def __rtruediv__(self, other) -> IntSeries:
        if isinstance(other, (int, Rational)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int) -> IntSeries:
        if n < 0:
            return (self ** (-n)).inverse()
        if n == 0:
            return IntSeries.one(max(self.order - self.val, 1))
        result: IntSeries | None = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def sqrt(self) -> IntSeries:
        """Square root of a series whose leading term is ``x**(2m)``."""
        if not self.coeffs:
            raise NonUnitConstantTerm("square root of a series that is zero to its order")
        if self.val % 2:
            raise OddValuation(f"valuation {self.val} is odd")
        if self.coeffs[0] != 1:
            raise NonUnitConstantTerm(f"leading coefficient is {self.coeffs[0]}, expected 1")
        b = self.coeffs
        n = self.order - self.val
        s: list[Number] = [1]
        for k in range(1, n):
            acc = b[k] if k < len(b) else 0
            for j in range(1, k):
                acc -= s[j] * s[k - j]
            s.append(_div(acc, 2))
        return IntSeries(s, self.val // 2, self.val // 2 + n)

    def compose(self, inner: IntSeries) -> IntSeries:
        """``self(inner(x))`` for ``inner`` of positive valuation and ``self`` a power series."""
        if self.coeffs and self.val < 0:
            raise SeriesError("outer series must be a power series")
        v = inner.val
        if v < 1:
            raise SeriesError("inner series must have positive valuation")
        order = min(self.order * v, inner.order)
        acc = IntSeries.zero(order)
        for k in range(self.order - 1, -1, -1):
            acc = acc * inner + self[k] if k < self.order else acc
            acc = acc.truncate(min(acc.order, order)) if acc.order > order else acc
        return acc.truncate(order) if acc.order > order else acc

    def reversion(self) -> IntSeries:
        """Compositional inverse by Lagrange inversion: ``[x^n] g = (1/n) [x^(n-1)] (x/f)^n``."""
        if self.val != 1:
            raise SeriesError("reversion needs f(0) = 0 and f'(0) != 0")
        n = self.order
        h = self.shift(-1).inverse()  # x / f, a unit series
        out: list[Number] = [0]
        p = IntSeries.one(h.order)
        for k in range(1, n):
            p = p * h
            out.append(_div(p[k - 1], k))
        return IntSeries(out, 0, n)

    # ---- comparison / output ------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Rational)) and not isinstance(other, IntSeries):
            other = IntSeries([other], 0, self.order)
        if not isinstance(other, IntSeries):
            return NotImplemented
        return self.order == other.order and self.val == other.val and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.val, self.order, tuple(self.coeffs)))

    def agrees(self, other: IntSeries, order: int | None = None) -> bool:
        """Coefficient equality up to the common (or given) order."""
        n = min(self.order, other.order) if order is None else order
        lo = min(self.val, other.val, n)
        return all(self[k] == other[k] for k in range(lo, n))

    def __repr__(self) -> str:
        return f"IntSeries({self.format()})"

    def __str__(self) -> str:
        return self.format(big_o=False)

    def format(self, var: str = "x", big_o: bool = True) -> str:
        parts: list[str] = []
        for k, c in self.items():
            mag = abs(c)
            term = str(mag) if k == 0 else f"{mag}*{var}^{k}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        if big_o:
            parts.append(("+ " if parts else "") + f"O({var}^{self.order})")
        return " ".join(parts) if parts else "0"

    def to_json(self) -> list[dict]:
        return [{"pow": k, "coeff": str(c)} for k, c in self.items()]

    @classmethod
    def from_json(cls, items: list[dict], order: int) -> IntSeries:
        return cls.poly({int(d["pow"]): _norm(Fraction(d["coeff"])) for d in items}, order)


def sqrt(a: IntSeries) -> IntSeries:
    return a.sqrt()


class UPoly:
    """Polynomial in a second variable with :class:`IntSeries` coefficients.

    ``deg_bound`` is the largest exponent known (``None`` for an exact
    polynomial); ``x_order`` is the common x-truncation order.
    """

    __slots__ = ("terms", "deg_bound", "x_order")

    def __init__(self, terms: dict[int, IntSeries], x_order: int, deg_bound: int | None = None):
        clean = {}
        for k, s in terms.items():
            if deg_bound is not None and k > deg_bound:
                continue
            if s.order > x_order:
                s = s.truncate(x_order)
            if not s.is_zero():
                clean[k] = s
        self.terms = dict(sorted(clean.items()))
        self.x_order = min([x_order] + [s.order for s in clean.values()])
        self.deg_bound = deg_bound

    @classmethod
    def constant(cls, s: IntSeries, deg_bound: int | None = None) -> UPoly:
        return cls({0: s}, s.order, deg_bound)

    @classmethod
    def from_rows(cls, rows: dict[int, dict[int, Number]], x_order: int, deg_bound: int | None = None) -> UPoly:
        """Build from ``{u_exponent: {x_exponent: coeff}}``."""
        return cls({k: IntSeries.poly(r, x_order) for k, r in rows.items()}, x_order, deg_bound)

    def __getitem__(self, k: int) -> IntSeries:
        if self.deg_bound is not None and k > self.deg_bound:
            raise TruncationError(f"exponent {k} is beyond the degree bound {self.deg_bound}")
        return self.terms.get(k, IntSeries.zero(self.x_order))

    def coeff(self, n: int, k: int) -> Number:
        """Coefficient of ``x^n u^k``."""
        return self[k][n]

    def x_slice(self, n: int) -> dict[int, Number]:
        """``{k: [x^n u^k]}`` with zero entries omitted."""
        if n >= self.x_order:
            raise TruncationError(f"x^{n} is beyond the truncation order {self.x_order}")
        return {k: s[n] for k, s in self.terms.items() if s[n] != 0}

    def min_exp(self) -> int:
        return min(self.terms) if self.terms else (self.deg_bound + 1 if self.deg_bound is not None else 0)

    def min_xval(self) -> int:
        return min((s.val for s in self.terms.values()), default=self.x_order)

    def is_zero(self) -> bool:
        return not self.terms

    def is_integral(self) -> bool:
        return all(s.is_integral() for s in self.terms.values())

    @staticmethod
    def _merge_bound(a: int | None, b: int | None) -> int | None:
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def _coerce(self, other) -> UPoly | None:
        if isinstance(other, UPoly):
            return other
        if isinstance(other, IntSeries):
            return UPoly.constant(other)
        if isinstance(other, (int, Rational)):
            return UPoly.constant(IntSeries([other], 0, self.x_order))
        return None

    def __add__(self, other) -> UPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for k, s in o.terms.items():
            terms[k] = terms[k] + s if k in terms else s
        return UPoly(terms, min(self.x_order, o.x_order), self._merge_bound(self.deg_bound, o.deg_bound))

    __radd__ = __add__

    def __neg__(self) -> UPoly:
        return UPoly({k: -s for k, s in self.terms.items()}, self.x_order, self.deg_bound)

    def __sub__(self, other) -> UPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> UPoly:
        return (-self) + other

    def __mul__(self, other) -> UPoly:
        if isinstance(other, (int, Rational)) and not isinstance(other, (IntSeries, UPoly)):
            return UPoly({k: s * other for k, s in self.terms.items()}, self.x_order, self.deg_bound)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        bound = None
        if self.deg_bound is not None:
            bound = self.deg_bound + o.min_exp()
        if o.deg_bound is not None:
            b2 = o.deg_bound + self.min_exp()
            bound = b2 if bound is None else min(bound, b2)
        x_order = min(self.x_order + o.min_xval(), o.x_order + self.min_xval())
        terms: dict[int, IntSeries] = {}
        for i, a in self.terms.items():
            for j, b in o.terms.items():
                k = i + j
                if bound is not None and k > bound:
                    continue
                p = a * b
                terms[k] = terms[k] + p if k in terms else p
        return UPoly(terms, x_order, bound)

    __rmul__ = __mul__

    def shift_u(self, k: int) -> UPoly:
        """Multiply by ``u**k``; negative ``k`` requires divisibility."""
        if k < 0 and self.terms and min(self.terms) + k < 0:
            raise SeriesError(f"not divisible by u^{-k}")
        bound = None if self.deg_bound is None else self.deg_bound + k
        return UPoly({e + k: s for e, s in self.terms.items()}, self.x_order, bound)

    def shift_x(self, k: int) -> UPoly:
        return UPoly({e: s.shift(k) for e, s in self.terms.items()}, self.x_order + k, self.deg_bound)

    def stretch_x(self, k: int) -> UPoly:
        return UPoly({e: s.stretch(k) for e, s in self.terms.items()}, self.x_order * k, self.deg_bound)

    def truncate(self, x_order: int | None = None, deg_bound: int | None = None) -> UPoly:
        xo = self.x_order if x_order is None else min(x_order, self.x_order)
        db = self._merge_bound(self.deg_bound, deg_bound)
        return UPoly(self.terms, xo, db)

    def _require_bound(self, what: str) -> int:
        if self.deg_bound is None:
            raise SeriesError(f"{what} of an exact polynomial needs a degree bound; call truncate() first")
        return self.deg_bound

    def inverse(self) -> UPoly:
        """``1/P`` for ``P`` whose ``u^0`` coefficient is an invertible series."""
        bound = self._require_bound("inverse")
        p0 = self[0]
        if p0.is_zero():
            raise DivisionByZeroSeries("constant term in u is zero")
        inv0 = p0.inverse()
        q: list[IntSeries] = [inv0]
        for k in range(1, bound + 1):
            acc = IntSeries.zero(self.x_order)
            for j in range(1, k + 1):
                pj = self.terms.get(j)
                if pj is not None:
                    acc = acc + pj * q[k - j]
            q.append(-(acc * inv0))
        return UPoly(dict(enumerate(q)), min(s.order for s in q), bound)

    def __truediv__(self, other) -> UPoly:
        if isinstance(other, (int, Rational)) and not isinstance(other, (IntSeries, UPoly)):
            return UPoly({k: s / other for k, s in self.terms.items()}, self.x_order, self.deg_bound)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.deg_bound is None:
            o = o.truncate(deg_bound=self._require_bound("division") if self.deg_bound is not None else None)
            if o.deg_bound is None:
                if set(o.terms) == {0}:
                    return UPoly({k: s / o.terms[0] for k, s in self.terms.items()}, self.x_order, self.deg_bound)
                raise SeriesError("division by a polynomial in u needs a degree bound")
        return self * o.inverse()

    def sqrt(self) -> UPoly:
        bound = self._require_bound("sqrt")
        r0 = self[0].sqrt()
        q: list[IntSeries] = [r0]
        two_r0 = r0 * 2
        for k in range(1, bound + 1):
            acc = self[k]
            for j in range(1, k):
                acc = acc - q[j] * q[k - j]
            q.append(acc / two_r0)
        return UPoly(dict(enumerate(q)), min(s.order for s in q), bound)

    def at_one(self) -> IntSeries:
        """Substitute ``u = 1`` (valid only for exact polynomials in ``u``)."""
        if self.deg_bound is not None:
            raise SeriesError("cannot evaluate a u-truncated polynomial at 1")
        acc = IntSeries.zero(self.x_order)
        for s in self.terms.values():
            acc = acc + s
        return acc

    def agrees(self, other: UPoly, x_order: int | None = None, deg_bound: int | None = None) -> bool:
        xo = min(self.x_order, other.x_order) if x_order is None else x_order
        db = self._merge_bound(self._merge_bound(self.deg_bound, other.deg_bound), deg_bound)
        keys = set(self.terms) | set(other.terms)
        for k in keys:
            if db is not None and k > db:
                continue
            if not self[k].agrees(other[k], xo):
                return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.terms == other.terms and self.x_order == other.x_order and self.deg_bound == other.deg_bound

    def __repr__(self) -> str:
        return f"UPoly({self.format()})"

    def format(self, xvar: str = "x", uvar: str = "u") -> str:
        rows = []
        for n in range(min((s.val for s in self.terms.values()), default=0), self.x_order):
            sl = self.x_slice(n)
            if not sl:
                continue
            poly = " + ".join(f"{c}*{uvar}^{k}" if k else str(c) for k, c in sorted(sl.items(), reverse=True))
            rows.append(f"({poly})*{xvar}^{n}" if n else f"({poly})")
        rows.append(f"O({xvar}^{self.x_order})")
        return " + ".join(rows)

    def to_json(self) -> dict:
        return {
            "x_order": self.x_order,
            "deg_bound": self.deg_bound,
            "terms": {str(k): s.to_json() for k, s in self.terms.items()},
        }


# ---- continued fractions -------------------------------------------------------

Element = Union[IntSeries, UPoly]
Levels = Union[Sequence[tuple[Element, Element]], Callable[[int], tuple[Element, Element]]]


def _monomial_floor(e: Element) -> tuple[int, int]:
    """Lower bounds (x-valuation, u-valuation) of every monomial in ``e``."""
    if isinstance(e, IntSeries):
        return e.val, 0
    return e.min_xval(), e.min_exp()


def cf_certified(levels: Levels, depth: int, order: int | tuple[int, int]) -> bool:
    """Whether truncating ``n0/(d0 - n1/(d1 - ...))`` after level ``depth`` fixes every requested coefficient.

    The dropped tail perturbs the value by a multiple of ``n0 n1 ... n_{depth+1}``.
    With a finite level sequence of length ``depth + 1`` the fraction is exact.
    """
    get = levels if callable(levels) else None
    if get is None and len(levels) <= depth + 1:
        return True
    ax = au = 0
    for k in range(depth + 2):
        num = get(k)[0] if get else levels[k][0]
        fx, fu = _monomial_floor(num)
        ax += fx
        au += fu
    if isinstance(order, tuple):
        nx, nu = order
        return ax >= nx or au >= nu
    return ax >= order


def cf_eval(levels: Levels, depth: int, order: int | tuple[int, int]) -> Element:
    """Evaluate the truncated continued fraction ``n0/(d0 - n1/(d1 - ... n_depth/d_depth))``.

    ``levels`` is a sequence of ``(numerator, denominator)`` pairs or a callable
    ``k -> (numerator, denominator)``.  Elements are :class:`IntSeries` (with
    ``order`` an int) or :class:`UPoly` (with ``order = (Nx, Nu)``: x-order and
    number of u-powers).  Raises :class:`InsufficientDepth` when the depth
    cannot certify the requested order.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if not cf_certified(levels, depth, order):
        raise InsufficientDepth(f"depth {depth} does not certify order {order}")
    get = levels if callable(levels) else (lambda k: levels[k])

    def fit(e: Element) -> Element:
        if isinstance(e, IntSeries):
            nx = order if isinstance(order, int) else order[0]
            return e.truncate(nx) if e.order > nx else e
        nx, nu = order
        return e.truncate(nx, nu - 1)

    tail: Element | None = None
    for k in range(depth, -1, -1):
        num, den = get(k)
        num, den = fit(num), fit(den)
        denom = den if tail is None else fit(den - tail)
        tail = fit(num / denom)
    return tail
