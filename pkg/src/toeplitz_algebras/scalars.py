"""Exact scalars and univariate polynomials.

The scalar field is the Gaussian rationals Q(i): complex numbers whose real
and imaginary parts are rational.  A value is stored as ``(a + b*i) / d``
with integers ``a, b`` and ``d > 0`` sharing no common factor, which keeps
the common all-integer case cheap.

Polynomials are dense coefficient tuples, index = degree, no trailing
zeros; the zero polynomial is the empty tuple.
"""

from fractions import Fraction
from math import gcd
import re

from .errors import BothZero, DivisionByZeroPoly, InvalidParameters, NotCoprime

NEG_INF = float("-inf")

_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*$")


def parse_rational(text):
    """Parse ``"num/den"`` or ``"num"`` into a Fraction."""
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational: {text!r}")
    return Fraction(text.replace(" ", ""))


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class GaussianRational:
    """Exact complex number with rational real and imaginary parts."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im:
                re = re + GaussianRational(0, 1) * GaussianRational(im)
            self._a, self._b, self._d = re._a, re._b, re._d
            return
        fr = Fraction(re) if not isinstance(re, str) else parse_rational(re)
        fi = Fraction(im) if not isinstance(im, str) else parse_rational(im)
        d = fr.denominator * fi.denominator // gcd(fr.denominator, fi.denominator)
        a = fr.numerator * (d // fr.denominator)
        b = fi.numerator * (d // fi.denominator)
        g = gcd(a, b, d)
        self._a, self._b, self._d = a // g, b // g, d // g

    @classmethod
    def _raw(cls, a, b, d):
        if d != 1:
            if d < 0:
                a, b, d = -a, -b, -d
            g = gcd(a, b, d)
            if g != 1:
                a, b, d = a // g, b // g, d // g
        obj = object.__new__(cls)
        obj._a = a
        obj._b = b
        obj._d = d
        return obj

    @property
    def re(self):
        return Fraction(self._a, self._d)

    @property
    def im(self):
        return Fraction(self._b, self._d)

    def parts(self):
        """Return the normalized integer triple ``(a, b, d)``."""
        return self._a, self._b, self._d

    def is_zero(self):
        return self._a == 0 and self._b == 0

    def __bool__(self):
        return not self.is_zero()

    def conjugate(self):
        return GaussianRational._raw(self._a, -self._b, self._d)

    def __neg__(self):
        return GaussianRational._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._d == 1 and o._d == 1:
            return GaussianRational._raw(self._a + o._a, self._b + o._b, 1)
        return GaussianRational._raw(
            self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d, self._d * o._d
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._d == 1 and o._d == 1:
            return GaussianRational._raw(self._a - o._a, self._b - o._b, 1)
        return GaussianRational._raw(
            self._a * o._d - o._a * self._d, self._b * o._d - o._b * self._d, self._d * o._d
        )

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        return GaussianRational._raw(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self):
        a, b, d = self._a, self._b, self._d
        n = a * a + b * b
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational._raw(d * a, -d * b, n)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        re_, im_ = self.re, self.im
        if im_ == 0:
            return format_rational(re_)
        if im_ == 1:
            ims = "i"
        elif im_ == -1:
            ims = "-i"
        else:
            ims = f"{format_rational(im_)}i"
        if re_ == 0:
            return ims
        sign = "" if ims.startswith("-") else "+"
        return f"{format_rational(re_)}{sign}{ims}"

    def to_json(self):
        return {"re": format_rational(self.re), "im": format_rational(self.im)}

    @classmethod
    def from_json(cls, obj):
        """Accept ``{"re": .., "im": ..}``, or a bare rational string/int as shorthand."""
        if isinstance(obj, dict):
            if set(obj) - {"re", "im"}:
                raise ValueError(f"unexpected keys in Gaussian rational: {sorted(obj)}")
            return cls(parse_rational(obj.get("re", "0")), parse_rational(obj.get("im", "0")))
        return cls(parse_rational(obj))


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return GaussianRational._raw(x, 0, 1)
    if isinstance(x, Fraction):
        return GaussianRational._raw(x.numerator, 0, x.denominator)
    return None


def gr(x, im=0):
    """Coerce ints, Fractions, strings or GaussianRationals to a GaussianRational."""
    if im == 0:
        c = _coerce(x)
        if c is not None:
            return c
    return GaussianRational(x, im)


ZERO = GaussianRational._raw(0, 0, 1)
ONE = GaussianRational._raw(1, 0, 1)
I_UNIT = GaussianRational._raw(0, 1, 1)


def _strip(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1].is_zero():
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Dense univariate polynomial over the Gaussian rationals.

    >>> x = Poly.x()
    >>> divmod(x**3 + 1, x + 1)
    (Poly(X^2 - X + 1), Poly(0))
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip([gr(c) for c in coeffs])

    @classmethod
    def _make(cls, coeffs):
        obj = object.__new__(cls)
        obj.coeffs = _strip(coeffs)
        return obj

    @classmethod
    def x(cls):
        return cls._make([ZERO, ONE])

    @classmethod
    def const(cls, c):
        return cls._make([gr(c)])

    @classmethod
    def one(cls):
        return cls._make([ONE])

    @classmethod
    def zero(cls):
        return cls._make([])

    @classmethod
    def monomial(cls, k, c=1):
        return cls._make([ZERO] * k + [gr(c)])

    @property
    def degree(self):
        """Degree; ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == ONE

    def monic(self):
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == ONE:
            return self
        inv = lead.inverse()
        return Poly._make([c * inv for c in self.coeffs])

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def padded(self, length):
        """Coefficient list of exactly ``length`` entries (zero padded)."""
        if len(self.coeffs) > length:
            raise ValueError("polynomial longer than requested length")
        return list(self.coeffs) + [ZERO] * (length - len(self.coeffs))

    def __call__(self, value):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        c = _coerce(other)
        if c is None:
            return NotImplemented
        return self.coeffs == _strip([c])

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Poly._make([-c for c in self.coeffs])

    def __add__(self, other):
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._make(out)

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly._make([])
        if len(b) == 1:
            c = b[0]
            return Poly._make([x * c for x in a])
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly._make(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result, base = Poly.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        return poly_divmod(self, o)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        return poly_rem(self, o)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            is_real = c.im == 0
            if k == 0:
                body = str(c) if is_real else f"({c})"
            else:
                mono = "X" if k == 1 else f"X^{k}"
                if c == ONE:
                    body = mono
                elif c == -ONE:
                    body = "-" + mono
                elif is_real:
                    body = f"{c}*{mono}"
                else:
                    body = f"({c})*{mono}"
            terms.append(body)
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def to_json(self):
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, list):
            raise ValueError("polynomial must be a JSON array of coefficients")
        return cls._make([GaussianRational.from_json(c) for c in obj])


def _as_poly(x):
    if isinstance(x, Poly):
        return x
    c = _coerce(x)
    if c is None:
        return None
    return Poly._make([c])


def poly_rem(a, b):
    """Remainder of ``a`` modulo ``b``; fast path for monic ``b``."""
    bc = b.coeffs
    if not bc:
        raise DivisionByZeroPoly("division by the zero polynomial")
    db = len(bc) - 1
    r = list(a.coeffs)
    if len(r) <= db:
        return a
    lead_inv = None if bc[-1] == ONE else bc[-1].inverse()
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c.is_zero():
            continue
        if lead_inv is not None:
            c = c * lead_inv
        base = k - db
        for j in range(db):
            if not bc[j].is_zero():
                r[base + j] = r[base + j] - c * bc[j]
        r[k] = ZERO
    return Poly._make(r[:db])


def poly_divmod(a, b):
    """Return ``(quotient, remainder)`` with ``a = b*quotient + remainder``."""
    bc = b.coeffs
    if not bc:
        raise DivisionByZeroPoly("division by the zero polynomial")
    db = len(bc) - 1
    r = list(a.coeffs)
    if len(r) <= db:
        return Poly.zero(), a
    q = [ZERO] * (len(r) - db)
    lead_inv = bc[-1].inverse()
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c.is_zero():
            continue
        c = c * lead_inv
        base = k - db
        q[base] = c
        for j in range(db):
            if not bc[j].is_zero():
                r[base + j] = r[base + j] - c * bc[j]
        r[k] = ZERO
    return Poly._make(q), Poly._make(r[:db])


def divides(a, b):
    """True iff ``a`` divides ``b`` (zero divides only zero)."""
    if a.is_zero():
        return b.is_zero()
    return poly_rem(b, a).is_zero()


def exact_div(a, b):
    """``a / b`` when the division is exact, else ``None``."""
    q, r = poly_divmod(a, b)
    return q if r.is_zero() else None


def poly_gcd(a, b):
    """Monic greatest common divisor."""
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd of two zero polynomials")
    while not b.is_zero():
        a, b = b, poly_rem(a, b)
    return a.monic()


def poly_gcd_many(polys):
    g = Poly.zero()
    for p in polys:
        if p.is_zero():
            continue
        g = p.monic() if g.is_zero() else poly_gcd(g, p)
        if g.degree == 0:
            break
    if g.is_zero():
        raise BothZero("gcd of zero polynomials")
    return g


def poly_xgcd(a, b):
    """Return ``(g, s, t)`` with ``g = s*a + t*b`` monic."""
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd of two zero polynomials")
    r0, r1 = a, b
    s0, s1 = Poly.one(), Poly.zero()
    t0, t1 = Poly.zero(), Poly.one()
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = r0.lead.inverse()
    return r0 * inv, s0 * inv, t0 * inv


def poly_coprime(a, b):
    """True iff gcd(a, b) is a nonzero constant; both zero gives False."""
    if a.is_zero() and b.is_zero():
        return False
    return poly_gcd(a, b).degree == 0


def poly_mod_inverse(a, m):
    """Return ``g`` with ``deg g < deg m`` and ``m | g*a - 1``."""
    if m.is_zero() or m.degree < 1:
        raise InvalidParameters("modulus must have degree >= 1")
    a = poly_rem(a, m)
    if a.is_zero():
        raise NotCoprime("zero has no inverse")
    g, s, _ = poly_xgcd(a, m)
    if g.degree != 0:
        raise NotCoprime(f"gcd({a}, {m}) = {g} is not constant")
    return poly_rem(s, m)


X = Poly.x()
