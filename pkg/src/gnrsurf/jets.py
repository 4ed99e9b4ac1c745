"""Order-4 jet arithmetic: a value together with derivatives 1..4 at a point.

A :class:`Jet` carries ``(value, d1, d2, d3, d4)`` of a scalar function of one
real variable at a fixed expansion point.  Sums, products, quotients and the
supported elementary functions propagate all five slots exactly (to machine
precision), via the Leibniz rule and Faa di Bruno's formula truncated at
order 4.

Order 4 is the smallest order that supports every derived quantity in this
package: torsion consumes third derivatives of the base curve, and the mean
curvature needs the s-derivative of a torsion-bearing expression, hence
fourth derivatives of the coordinate functions.

Shifting note: :meth:`Jet.deriv` drops the value slot and shifts derivatives
down, so the top slot of the result is *not* trustworthy.  Jet arithmetic is
triangular (slot k of a result depends only on slots <= k of the inputs), so
downstream results stay exact in every slot up to the smallest trusted order
among their inputs.  Callers must not read beyond that.
"""

from __future__ import annotations

import math

from .errors import ExpressionDomainError

_ABS_KINK_TOL = 1e-12


class _JetDomain(ValueError):
    """Internal domain failure; re-raised with context by the evaluator."""


class Jet:
    __slots__ = ("c",)

    def __init__(self, c0, c1=0.0, c2=0.0, c3=0.0, c4=0.0):
        self.c = (float(c0), float(c1), float(c2), float(c3), float(c4))

    @classmethod
    def constant(cls, x: float) -> "Jet":
        return cls(x)

    @classmethod
    def variable(cls, x: float) -> "Jet":
        """The identity function evaluated at x: value x, slope 1."""
        return cls(x, 1.0)

    @property
    def value(self) -> float:
        return self.c[0]

    def __getitem__(self, k: int) -> float:
        return self.c[k]

    def __repr__(self) -> str:
        return f"Jet{self.c!r}"

    def deriv(self, n: int = 1) -> "Jet":
        """Jet of the n-th derivative; top n slots of the result are untrusted."""
        c = self.c
        for _ in range(n):
            c = c[1:] + (0.0,)
        return Jet(*c)

    # ---------- ring operations ----------

    @staticmethod
    def _lift(x) -> "Jet":
        return x if isinstance(x, Jet) else Jet(x)

    def __add__(self, other) -> "Jet":
        o = Jet._lift(other)
        a, b = self.c, o.c
        return Jet(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], a[4] + b[4])

    __radd__ = __add__

    def __sub__(self, other) -> "Jet":
        o = Jet._lift(other)
        a, b = self.c, o.c
        return Jet(a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3], a[4] - b[4])

    def __rsub__(self, other) -> "Jet":
        return Jet._lift(other).__sub__(self)

    def __neg__(self) -> "Jet":
        a = self.c
        return Jet(-a[0], -a[1], -a[2], -a[3], -a[4])

    def __mul__(self, other) -> "Jet":
        o = Jet._lift(other)
        a, b = self.c, o.c
        # Leibniz rule with binomial weights
        return Jet(
            a[0] * b[0],
            a[1] * b[0] + a[0] * b[1],
            a[2] * b[0] + 2.0 * a[1] * b[1] + a[0] * b[2],
            a[3] * b[0] + 3.0 * a[2] * b[1] + 3.0 * a[1] * b[2] + a[0] * b[3],
            a[4] * b[0] + 4.0 * a[3] * b[1] + 6.0 * a[2] * b[2]
            + 4.0 * a[1] * b[3] + a[0] * b[4],
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Jet":
        o = Jet._lift(other)
        if o.c[0] == 0.0:
            raise _JetDomain("division by zero")
        return self * o._reciprocal()

    def __rtruediv__(self, other) -> "Jet":
        return Jet._lift(other).__truediv__(self)

    def _reciprocal(self) -> "Jet":
        x = self.c[0]
        inv = 1.0 / x
        i2 = inv * inv
        return self._compose(inv, -i2, 2.0 * i2 * inv, -6.0 * i2 * i2, 24.0 * i2 * i2 * inv)

    def _compose(self, h0, h1, h2, h3, h4) -> "Jet":
        """Chain rule through order 4 for an outer function with derivatives h0..h4
        taken at ``self.value`` (Faa di Bruno)."""
        u1, u2, u3, u4 = self.c[1], self.c[2], self.c[3], self.c[4]
        return Jet(
            h0,
            h1 * u1,
            h1 * u2 + h2 * u1 * u1,
            h1 * u3 + 3.0 * h2 * u1 * u2 + h3 * u1 ** 3,
            h1 * u4 + h2 * (4.0 * u1 * u3 + 3.0 * u2 * u2)
            + 6.0 * h3 * u1 * u1 * u2 + h4 * u1 ** 4,
        )

    def ipow(self, n: int) -> "Jet":
        """Integer power by repeated multiplication (exact for any base)."""
        if n < 0:
            if self.c[0] == 0.0:
                raise _JetDomain("zero raised to a negative power")
            return self.ipow(-n)._reciprocal()
        result = Jet(1.0)
        base = self
        k = n
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # ---------- elementary functions ----------

    def sin(self) -> "Jet":
        s, c = math.sin(self.c[0]), math.cos(self.c[0])
        return self._compose(s, c, -s, -c, s)

    def cos(self) -> "Jet":
        s, c = math.sin(self.c[0]), math.cos(self.c[0])
        return self._compose(c, -s, -c, s, c)

    def tan(self) -> "Jet":
        t = math.tan(self.c[0])
        q = 1.0 + t * t
        return self._compose(
            t, q, 2.0 * t * q, q * (2.0 + 6.0 * t * t), q * (16.0 * t + 24.0 * t ** 3)
        )

    def exp(self) -> "Jet":
        e = math.exp(self.c[0])
        return self._compose(e, e, e, e, e)

    def ln(self) -> "Jet":
        x = self.c[0]
        if x <= 0.0:
            raise _JetDomain(f"ln of non-positive value {x!r}")
        inv = 1.0 / x
        i2 = inv * inv
        return self._compose(math.log(x), inv, -i2, 2.0 * i2 * inv, -6.0 * i2 * i2)

    def sqrt(self) -> "Jet":
        x = self.c[0]
        if x < 0.0:
            raise _JetDomain(f"sqrt of negative value {x!r}")
        if x == 0.0:
            if self.c[1] == self.c[2] == self.c[3] == self.c[4] == 0.0:
                return Jet(0.0)
            raise _JetDomain("sqrt not differentiable at 0")
        r = math.sqrt(x)
        h1 = 0.5 / r
        h2 = -0.5 * h1 / x
        h3 = -1.5 * h2 / x
        h4 = -2.5 * h3 / x
        return self._compose(r, h1, h2, h3, h4)

    def asin(self) -> "Jet":
        x = self.c[0]
        if abs(x) > 1.0:
            raise _JetDomain(f"asin argument {x!r} outside [-1, 1]")
        if abs(x) == 1.0:
            if self.c[1] == self.c[2] == self.c[3] == self.c[4] == 0.0:
                return Jet(math.asin(x))
            raise _JetDomain("asin not differentiable at +-1")
        q = 1.0 - x * x
        h1 = q ** -0.5
        h2 = x * q ** -1.5
        h3 = (1.0 + 2.0 * x * x) * q ** -2.5
        h4 = (9.0 * x + 6.0 * x ** 3) * q ** -3.5
        return self._compose(math.asin(x), h1, h2, h3, h4)

    def atan(self) -> "Jet":
        x = self.c[0]
        q = 1.0 + x * x
        h1 = 1.0 / q
        h2 = -2.0 * x * h1 * h1
        h3 = (6.0 * x * x - 2.0) * h1 ** 3
        h4 = 24.0 * x * (1.0 - x * x) * h1 ** 4
        return self._compose(math.atan(x), h1, h2, h3, h4)

    def __abs__(self) -> "Jet":
        x = self.c[0]
        if abs(x) < _ABS_KINK_TOL:
            raise _JetDomain(f"abs not differentiable near 0 (value {x!r})")
        return self if x > 0.0 else -self


# ---------- 3-vectors of jets ----------
# Small helpers for curve/frame computations; vectors are plain tuples of Jet.


def jvec(jx: Jet, jy: Jet, jz: Jet):
    return (jx, jy, jz)


def jdot(a, b) -> Jet:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def jcross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def jdet(a, b, c) -> Jet:
    return jdot(jcross(a, b), c)


def jnorm(a) -> Jet:
    return jdot(a, a).sqrt()


def jscale(k: Jet, a):
    return (k * a[0], k * a[1], k * a[2])


def jadd(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def values(a, k: int = 0):
    """Extract slot k of each component as a plain tuple of floats."""
    return (a[0][k], a[1][k], a[2][k])
