"""Truncated Taylor arithmetic in the field direction.

A TaylorJet holds coefficients c_0..c_N of an expansion around a base
frequency: coefficient k is (1/k!) d^k/domega^k of the represented quantity.
Products use Cauchy convolution, so propagating a jet through an expression
tree yields exact derivatives up to truncation order. The order is capped at
12; susceptibilities (N! times coefficient N) are only needed for small N.
"""

from __future__ import annotations

import numpy as np

from .errors import OrderError

JET_MAX_ORDER = 12


class TaylorJet:
    """Taylor coefficients (complex) around a real base point, order <= 12."""

    __slots__ = ("coeffs", "base")

    def __init__(self, coeffs, base=0.0):
        c = np.atleast_1d(np.asarray(coeffs, dtype=complex))
        if c.ndim != 1 or c.size < 1:
            raise ValueError("jet needs a 1-d, non-empty coefficient list")
        if c.size - 1 > JET_MAX_ORDER:
            raise OrderError(f"jet order {c.size - 1} exceeds cap {JET_MAX_ORDER}")
        self.coeffs = c
        self.base = float(base)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @property
    def value(self) -> complex:
        return complex(self.coeffs[0])

    def __repr__(self):
        return f"TaylorJet({self.coeffs.tolist()!r}, base={self.base})"

    def _check_base(self, other: "TaylorJet"):
        if other.base != self.base:
            raise ValueError("jets expanded around different base points")

    def __add__(self, other):
        if isinstance(other, TaylorJet):
            self._check_base(other)
            n = min(self.order, other.order)
            return TaylorJet(self.coeffs[: n + 1] + other.coeffs[: n + 1], self.base)
        c = self.coeffs.copy()
        c[0] += other
        return TaylorJet(c, self.base)

    __radd__ = __add__

    def __neg__(self):
        return TaylorJet(-self.coeffs, self.base)

    def __sub__(self, other):
        return self + (-other if isinstance(other, TaylorJet) else -complex(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TaylorJet):
            self._check_base(other)
            n = min(self.order, other.order)
            out = np.zeros(n + 1, dtype=complex)
            for k in range(n + 1):
                out[k] = np.dot(self.coeffs[: k + 1], other.coeffs[k::-1])
            return TaylorJet(out, self.base)
        return TaylorJet(self.coeffs * complex(other), self.base)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TaylorJet):
            return self * other.reciprocal()
        return TaylorJet(self.coeffs / complex(other), self.base)

    def truncate(self, order: int) -> "TaylorJet":
        if order >= self.order:
            return self
        return TaylorJet(self.coeffs[: order + 1], self.base)

    def pad(self, order: int) -> "TaylorJet":
        """Extend with zero coefficients up to `order`."""
        if order <= self.order:
            return self
        c = np.zeros(order + 1, dtype=complex)
        c[: self.coeffs.size] = self.coeffs
        return TaylorJet(c, self.base)

    def derivative(self) -> "TaylorJet":
        """Jet of the derivative with respect to the expansion variable."""
        if self.order == 0:
            return TaylorJet([0.0], self.base)
        k = np.arange(1, self.order + 1)
        return TaylorJet(self.coeffs[1:] * k, self.base)

    def antiderivative(self) -> "TaylorJet":
        """Jet of the primitive vanishing at the base point; order grows by 1."""
        k = np.arange(1, self.order + 2)
        out = np.zeros(self.order + 2, dtype=complex)
        out[1:] = self.coeffs / k
        return TaylorJet(out, self.base)

    def reciprocal(self) -> "TaylorJet":
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("jet with vanishing constant term")
        out = np.zeros_like(a)
        out[0] = 1.0 / a[0]
        for n in range(1, a.size):
            out[n] = -np.dot(a[1 : n + 1], out[n - 1 :: -1]) / a[0]
        return TaylorJet(out, self.base)

    def exp(self) -> "TaylorJet":
        """exp of the jet, by the standard e' = a' e recurrence."""
        a = self.coeffs
        out = np.zeros_like(a)
        out[0] = np.exp(a[0])
        for n in range(1, a.size):
            k = np.arange(1, n + 1)
            out[n] = np.dot(k * a[1 : n + 1], out[n - 1 :: -1]) / n
        return TaylorJet(out, self.base)

    def __call__(self, h: complex) -> complex:
        """Evaluate the truncated polynomial at displacement h from the base."""
        return complex(np.polynomial.polynomial.polyval(h, self.coeffs))


def constant_jet(value, order: int, base: float = 0.0) -> TaylorJet:
    c = np.zeros(order + 1, dtype=complex)
    c[0] = value
    return TaylorJet(c, base)


def variable_jet(base: float, order: int) -> TaylorJet:
    """Jet of the expansion variable itself: base + h."""
    c = np.zeros(order + 1, dtype=complex)
    c[0] = base
    if order >= 1:
        c[1] = 1.0
    return TaylorJet(c, base)
