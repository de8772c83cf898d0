"""Exact Gaussian-rational scalars.

Every number in this package is an element of Q(i): a complex number whose
real and imaginary parts are arbitrary-precision rationals.  Nothing is ever
rounded, so a zero test downstream is a certificate, not an approximation.

The rational layer underneath is pluggable.  gmpy2's ``mpq`` is used when it
can be imported (same canonical-form semantics as ``fractions.Fraction``,
considerably faster); set the environment variable ``SUNHARM_RATIONAL`` to
``fraction`` or ``gmpy2`` to force one backend or the other.
"""

from __future__ import annotations

import os
from fractions import Fraction

_BACKEND = os.environ.get("SUNHARM_RATIONAL", "auto")
if _BACKEND not in ("auto", "gmpy2", "fraction"):
    raise RuntimeError(
        "SUNHARM_RATIONAL must be one of 'auto', 'gmpy2', 'fraction'"
    )

if _BACKEND in ("auto", "gmpy2"):
    try:
        from gmpy2 import mpq as Rational
    except ImportError:
        if _BACKEND == "gmpy2":
            raise
        Rational = Fraction
else:
    Rational = Fraction

#: Name of the active rational backend, for reports and benchmarks.
BACKEND_NAME = "gmpy2" if Rational is not Fraction else "fraction"

_RZERO = Rational(0)
_RONE = Rational(1)


def _to_rational(x):
    """Coerce x to the backend rational type.  Floats are refused."""
    if type(x) is type(_RZERO):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not allowed in exact arithmetic")
    return Rational(x)


class GaussianRational:
    """A complex number with exact rational real and imaginary parts.

    Values are immutable by convention: no method mutates ``re`` or ``im``.
    Rationals are kept in lowest terms with positive denominator (the backend
    guarantees it), so equality is structural.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _to_rational(re)
        self.im = _to_rational(im)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return _raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return _raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return _raw(other.re - self.re, other.im - self.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return _raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return _raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = ONE
        for _ in range(abs(k)):
            out = out * base
        return out

    def inverse(self):
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return _raw(self.re / n, -self.im / n)

    def conjugate(self):
        return _raw(self.re, -self.im)

    def norm_sq(self):
        """|z|^2, an exact nonnegative rational."""
        return self.re * self.re + self.im * self.im

    # -- predicates, hashing, display -----------------------------------

    def is_real(self):
        return not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_str(self.im)
        if self.im > 0:
            return f"{self.re}+{_imag_str(self.im)}"
        return f"{self.re}-{_imag_str(-self.im)}"

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


def _imag_str(im):
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}i"


def _raw(re, im):
    """Fast constructor for components already of the backend type."""
    z = GaussianRational.__new__(GaussianRational)
    z.re = re
    z.im = im
    return z


def _coerce(x):
    if type(x) is GaussianRational:
        return x
    if isinstance(x, int):
        return _raw(Rational(x), _RZERO)
    if isinstance(x, (Fraction,)) or type(x) is type(_RZERO):
        return _raw(_to_rational(x), _RZERO)
    return None


def gq(re=0, im=0) -> GaussianRational:
    """Build a Gaussian rational from ints, Fractions or strings like '2/3'."""
    return GaussianRational(re, im)


ZERO = gq(0)
ONE = gq(1)
I = gq(0, 1)


def sub_mul(a: GaussianRational, f: GaussianRational, b: GaussianRational):
    """a - f*b in one allocation; the elimination hot path lives on this."""
    fre, fim, bre, bim = f.re, f.im, b.re, b.im
    return _raw(a.re - (fre * bre - fim * bim), a.im - (fre * bim + fim * bre))


def dump_entry(z: GaussianRational) -> str:
    """Debug-dump form ``a/b+c/d*i`` with explicit denominators."""
    re, im = z.re, z.im
    return f"{re.numerator}/{re.denominator}+{im.numerator}/{im.denominator}*i"
