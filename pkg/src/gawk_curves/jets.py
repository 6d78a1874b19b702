"""Order-5 truncated Taylor jets.

A jet stores the six Taylor coefficients c0..c5 of a scalar function at an
expansion point (c_k = f^(k)/k!).  Arithmetic on jets propagates derivatives
exactly through products, quotients and elementary-function composition, so
closed-form curves yield machine-accurate derivatives up to order five.

Coefficients, not raw derivatives, keep products well scaled (no factorial
growth).  Order is fixed at five: nothing downstream needs more.

Validity bookkeeping is by convention, not runtime tracking: differentiating
a jet loses one valid order (the top coefficient becomes a zero pad), and
every operation preserves "coefficient k depends only on input coefficients
<= k", so callers know statically how many leading coefficients are
trustworthy.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DegenerateCurveError, SingularityError

ORDER = 5
NCOEF = ORDER + 1

_FACT = np.array([math.factorial(k) for k in range(NCOEF)], dtype=float)


class Jet5:
    """Taylor coefficients c0..c5 of a scalar quantity at one point."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        c = np.asarray(coeffs, dtype=float)
        if c.shape != (NCOEF,):
            raise ValueError(f"jet needs {NCOEF} coefficients, got shape {c.shape}")
        self.c = c

    @staticmethod
    def const(value: float) -> "Jet5":
        c = np.zeros(NCOEF)
        c[0] = value
        return Jet5(c)

    @staticmethod
    def variable(t0: float) -> "Jet5":
        c = np.zeros(NCOEF)
        c[0] = t0
        c[1] = 1.0
        return Jet5(c)

    @property
    def value(self) -> float:
        return float(self.c[0])

    def deriv(self, k: int) -> float:
        """k-th derivative value, k! * c_k."""
        return float(self.c[k] * _FACT[k])

    def derivative(self) -> "Jet5":
        """Jet of the derivative; valid one order lower (top coefficient 0)."""
        out = np.zeros(NCOEF)
        out[:ORDER] = self.c[1:] * np.arange(1, NCOEF)
        return Jet5(out)

    def __add__(self, other):
        other = _as_jet(other)
        return Jet5(self.c + other.c)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_jet(other)
        return Jet5(self.c - other.c)

    def __rsub__(self, other):
        other = _as_jet(other)
        return Jet5(other.c - self.c)

    def __neg__(self):
        return Jet5(-self.c)

    def __mul__(self, other):
        other = _as_jet(other)
        a, b = self.c, other.c
        out = np.zeros(NCOEF)
        for k in range(NCOEF):
            out[k] = np.dot(a[: k + 1], b[k::-1])
        return Jet5(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_jet(other)
        a, b = self.c, other.c
        if b[0] == 0.0:
            raise SingularityError("division by a jet with zero constant term")
        out = np.zeros(NCOEF)
        for k in range(NCOEF):
            acc = a[k]
            for i in range(k):
                acc -= out[i] * b[k - i]
            out[k] = acc / b[0]
        return Jet5(out)

    def __rtruediv__(self, other):
        return _as_jet(other).__truediv__(self)

    def __repr__(self):
        return f"Jet5({self.c.tolist()})"


def _as_jet(x) -> Jet5:
    if isinstance(x, Jet5):
        return x
    return Jet5.const(float(x))


def jet_arith(a: Jet5, b: Jet5, op: str) -> Jet5:
    """Named-operation wrapper around jet arithmetic (add/sub/mul/div)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown jet operation {op!r}")


def compose(outer: Jet5, inner: Jet5) -> Jet5:
    """outer(inner(t)) for an inner jet with zero constant term (Horner)."""
    if inner.c[0] != 0.0:
        raise ValueError("compose requires inner jet with zero constant term")
    res = Jet5.const(outer.c[ORDER])
    for k in range(ORDER - 1, -1, -1):
        res = res * inner + outer.c[k]
    return res


def _compose_series(derivs, a: Jet5) -> Jet5:
    """Apply f to jet a given f's derivative values at a.c[0].

    derivs[k] is f^(k)(a0); the series f^(k)(a0)/k! is composed with (a - a0).
    """
    outer = Jet5(np.asarray(derivs, dtype=float) / _FACT)
    shifted = Jet5(a.c.copy())
    shifted.c[0] = 0.0
    return compose(outer, shifted)


def sin(a: Jet5) -> Jet5:
    u0 = a.c[0]
    s, c = math.sin(u0), math.cos(u0)
    return _compose_series([s, c, -s, -c, s, c], a)


def cos(a: Jet5) -> Jet5:
    u0 = a.c[0]
    s, c = math.sin(u0), math.cos(u0)
    return _compose_series([c, -s, -c, s, c, -s], a)


def exp(a: Jet5) -> Jet5:
    e = math.exp(a.c[0])
    return _compose_series([e] * NCOEF, a)


def sqrt(a: Jet5) -> Jet5:
    if a.c[0] <= 0.0:
        raise SingularityError("sqrt of a jet with nonpositive constant term")
    return powc(a, 0.5)


def powc(a: Jet5, p: float) -> Jet5:
    """a**p for a constant exponent.

    Integer exponents use repeated multiplication and are exact on
    polynomials (and legal at a zero constant term); fractional exponents
    need a positive constant term.
    """
    if float(p) == int(p):
        n = int(p)
        if n >= 0:
            result = Jet5.const(1.0)
            base = a
            k = n
            while k:
                if k & 1:
                    result = result * base
                base = base * base
                k >>= 1
            return result
        if a.c[0] == 0.0:
            raise SingularityError("negative power of a jet with zero constant term")
        return Jet5.const(1.0) / powc(a, -n)
    if a.c[0] <= 0.0:
        raise SingularityError(
            "fractional power of a jet with nonpositive constant term"
        )
    u0 = a.c[0]
    derivs = []
    coef = 1.0
    for k in range(NCOEF):
        derivs.append(coef * u0 ** (p - k))
        coef *= p - k
    return _compose_series(derivs, a)


def jet_elementary(a: Jet5, fn: str, exponent: float | None = None) -> Jet5:
    """Named-elementary-function wrapper (sin/cos/exp/sqrt/pow_const)."""
    if fn == "sin":
        return sin(a)
    if fn == "cos":
        return cos(a)
    if fn == "exp":
        return exp(a)
    if fn == "sqrt":
        return sqrt(a)
    if fn == "pow_const":
        if exponent is None:
            raise ValueError("pow_const needs an exponent")
        return powc(a, exponent)
    raise ValueError(f"unknown elementary function {fn!r}")


class JetPoint:
    """One jet per Euclidean coordinate, all sharing the expansion point.

    ``coeffs`` has shape (n, 6); row i holds the Taylor coefficients of the
    i-th coordinate.
    """

    __slots__ = ("coeffs",)

    def __init__(self, components):
        if isinstance(components, np.ndarray):
            coeffs = np.array(components, dtype=float)
        else:
            coeffs = np.vstack([j.c for j in components])
        if coeffs.ndim != 2 or coeffs.shape[1] != NCOEF:
            raise ValueError("JetPoint needs an (n, 6) coefficient array")
        self.coeffs = coeffs

    @property
    def dim(self) -> int:
        return self.coeffs.shape[0]

    def component(self, i: int) -> Jet5:
        return Jet5(self.coeffs[i].copy())

    def deriv_vector(self, k: int) -> np.ndarray:
        """k-th derivative of the point curve as a vector in R^n."""
        return self.coeffs[:, k] * _FACT[k]

    def deriv_vectors(self, upto: int) -> np.ndarray:
        """Stack of derivative vectors 1..upto, shape (upto, n)."""
        return (self.coeffs[:, 1 : upto + 1] * _FACT[1 : upto + 1]).T

    def __repr__(self):
        return f"JetPoint(dim={self.dim})"


def _invert_series(s: Jet5) -> Jet5:
    """Series inverse of s(t) with s(0)=0, s'(0)>0: tau with s(tau(x)) = x."""
    s1 = s.c[1]
    tau = np.zeros(NCOEF)
    tau[1] = 1.0 / s1
    target = np.zeros(NCOEF)
    target[1] = 1.0
    for m in range(2, NCOEF):
        comp = compose(s, Jet5(tau))
        tau[m] -= (comp.c[m] - target[m]) / s1
    return Jet5(tau)


def unit_speed_lift(curve_jets: JetPoint) -> JetPoint:
    """Reparametrize curve jets from an arbitrary parameter to arclength.

    Builds the local arclength series s(t) from the speed jet, inverts it
    (Lagrange reversion truncated at order five), and composes each
    coordinate jet with the inverse.  The result satisfies |dgamma/ds| = 1
    at the expansion point and is exact at the working order.
    """
    vel = [curve_jets.component(i).derivative() for i in range(curve_jets.dim)]
    speed_sq = vel[0] * vel[0]
    for v in vel[1:]:
        speed_sq = speed_sq + v * v
    if speed_sq.c[0] <= 0.0:
        raise DegenerateCurveError("zero speed at expansion point")
    sigma = powc(speed_sq, 0.5)
    # s(t) - s(t0): antiderivative of the speed jet with zero constant term
    s_jet = np.zeros(NCOEF)
    s_jet[1:] = sigma.c[:ORDER] / np.arange(1, NCOEF)
    tau = _invert_series(Jet5(s_jet))
    lifted = []
    for i in range(curve_jets.dim):
        comp = curve_jets.component(i)
        shifted = Jet5(comp.c.copy())
        shifted.c[0] = 0.0
        out = compose(shifted, tau)
        out.c[0] = comp.c[0]
        lifted.append(out)
    return JetPoint(lifted)


def scale_jetpoint(jp: JetPoint, factor: float) -> JetPoint:
    """Jets of the rescaled curve c*gamma(t/c) at the matching point.

    Rescaling multiplies the k-th Taylor coefficient by c^(1-k); curvatures
    of the rescaled curve are the originals divided by c.
    """
    powers = factor ** (1.0 - np.arange(NCOEF))
    return JetPoint(jp.coeffs * powers)
