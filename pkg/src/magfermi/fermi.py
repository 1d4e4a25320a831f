"""Fermi functions f_alpha (alternating polylogarithms) on the cut plane.

f_alpha(z) = sum_{n>=1} (-1)^{n+1} z^n / n^alpha for |z| < 1, continued to
C \\ (-inf, -1] by the integral representation

    f_alpha(z) = (1/Gamma(alpha)) int_0^inf t^{alpha-1} g(t) dt,
    g(t) = z e^{-t} / (1 + z e^{-t}),

whose only singularities in z sit on the excluded ray. Two routes are kept
deliberately: the series and the quadrature must agree on the overlap ring
0.3 <= |z| <= 0.7, which is the module's self-check.

For alpha <= 0 (needed when field derivatives pull the order down through
z d/dz f_alpha = f_{alpha-1}) the continuation is evaluated in closed form:
negative-integer orders are rational functions (Eulerian polynomials over
powers of 1+z), and non-integer negative orders use the pole expansion

    f_alpha(z) = -Gamma(1-alpha) sum_{k in Z} (-ln z - i pi (2k+1))^(alpha-1),

absolutely convergent for alpha < 0, with Euler-Maclaurin closure of the
truncated tails. (It follows from integrating the representation by parts
m times and resolving the m-th derivative of the Fermi factor into its
poles; quadrature of that derivative directly is hopeless at large m, the
spike near each pole integrates to almost nothing.)
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np

from .domain import as_fugacity
from .errors import ConvergenceError, DomainError
from .jets import TaylorJet, constant_jet

#: switch from the series to the quadrature route at this |z|
SERIES_RADIUS = 0.5

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)

_POLE_TERMS = 128


@lru_cache(maxsize=32)
def _eulerian_numerator(n: int) -> tuple:
    """Coefficients of P_n with f_{-n}(z) = P_n(z) / (1+z)^(n+1), exact ints.

    P_0 = z and P_{n+1} = z (1+z) P_n' - (n+1) z P_n, the image of the
    recurrence f_{-(n+1)} = z d/dz f_{-n}.
    """
    p = [0, 1]
    for n_cur in range(n):
        dp = [k * c for k, c in enumerate(p)][1:]
        out = [0] * (len(p) + 1)
        for k, c in enumerate(dp):  # z(1+z) p'
            out[k + 1] += c
            out[k + 2] += c
        for k, c in enumerate(p):  # -(n+1) z p
            out[k + 1] -= (n_cur + 1) * c
        p = out
    return tuple(p)


def _fermi_negative_integer(n: int, z: complex) -> complex:
    """f_{-n}(z) for integer n >= 0: a rational function with pole at z = -1."""
    num = np.polynomial.polynomial.polyval(z, np.array(_eulerian_numerator(n), dtype=float))
    return complex(num / (1.0 + z) ** (n + 1))


def _fermi_hurwitz(alpha: float, z: complex) -> complex:
    """Pole-expansion evaluation for non-integer alpha < 0, any cut-plane z.

    Terms decay like |k|^(alpha-1); the explicit window of 128 pole pairs is
    closed on both sides by Euler-Maclaurin through the B_4 term, giving
    truncation error far below 1e-15 relative to the leading terms.
    """
    a = alpha - 1.0
    q = -cmath.log(z)
    k = np.arange(-_POLE_TERMS, _POLE_TERMS)
    s = np.sum((q - 1j * np.pi * (2 * k + 1)) ** a)
    c = 2j * np.pi
    up = q - 1j * np.pi * (2 * _POLE_TERMS + 1)
    lo = q + 1j * np.pi * (2 * _POLE_TERMS + 1)
    # sum_{k>=K} h = int_K^inf h dk + h(K)/2 - h'(K)/12 + h'''(K)/720, and the
    # mirrored lower tail; the tail integrals converge because alpha < 0
    s += up ** (a + 1) / (c * (a + 1)) + 0.5 * up**a \
        + a * c / 12.0 * up ** (a - 1) - a * (a - 1) * (a - 2) * c**3 / 720.0 * up ** (a - 3)
    s += -(lo ** (a + 1)) / (c * (a + 1)) + 0.5 * lo**a \
        - a * c / 12.0 * lo ** (a - 1) + a * (a - 1) * (a - 2) * c**3 / 720.0 * lo ** (a - 3)
    return -math.gamma(1.0 - alpha) * complex(s)


def _adaptive_gauss(f, a: float, b: float, rel_tol: float, max_segments: int = 8192):
    """Adaptive 16-point Gauss-Legendre on (a, b) for a vectorized complex f.

    A segment is accepted when its whole-vs-halves discrepancy is below its
    length-proportional share of the global tolerance, or below the roundoff
    floor set by the segment's L1 mass (guards cancellation-heavy integrands).
    """

    def panel(lo, hi):
        half = 0.5 * (hi - lo)
        x = 0.5 * (lo + hi) + half * _GL_NODES
        fx = f(x)
        return half * np.sum(_GL_WEIGHTS * fx), half * np.sum(_GL_WEIGHTS * np.abs(fx))

    # coarse composite pass seeds the error scale; a single whole-interval
    # panel can badly misjudge structured integrands
    edges = np.linspace(a, b, 17)
    parts = [panel(lo, hi) for lo, hi in zip(edges[:-1], edges[1:])]
    abs_whole = abs(sum(p[0] for p in parts))
    l1_total = sum(p[1] for p in parts)
    stack = list(zip(edges[:-1], edges[1:], parts))
    total = 0.0 + 0.0j
    n_segments = 16
    while stack:
        lo, hi, (est, l1) = stack.pop()
        mid = 0.5 * (lo + hi)
        left = panel(lo, mid)
        right = panel(mid, hi)
        # refinement may discover mass (near-pole spikes) the coarse pass
        # missed entirely; keep the scale in step with it
        l1_total += left[1] + right[1] - l1
        scale = max(abs_whole, 0.05 * l1_total, 1e-280)
        err = abs(est - left[0] - right[0])
        # floor ~90 eps of the segment's L1 mass: near a pole the integrand's
        # evaluation noise is roundoff amplified by the condition of 1/(1+w),
        # and whole-vs-halves cannot resolve below it; the relative length
        # backstop covers extreme amplification (cut-margin keeps real spikes
        # wider than ~1e-8 of the range, so they still get resolved)
        tol_here = max(rel_tol * scale * (hi - lo) / (b - a), 2e-14 * l1)
        if err <= tol_here or (hi - lo) <= 1e-9 * (b - a):
            total += left[0] + right[0]
            continue
        n_segments += 1
        if n_segments > max_segments:
            raise ConvergenceError(
                f"adaptive quadrature exceeded {max_segments} segments on ({a:g}, {b:g})"
            )
        stack.append((lo, mid, left))
        stack.append((mid, hi, right))
    return total


def _fermi_series(alpha: float, z: complex, n_max: int = 4000) -> complex:
    """Alternating series, valid for |z| < 1. Term cutoff near 1e-16 relative."""
    az = abs(z)
    if az == 0.0:
        return 0.0 + 0.0j
    if az >= 1.0:
        raise DomainError(f"series route needs |z| < 1, got |z| = {az:g}")
    acc = 0.0 + 0.0j
    term = 1.0 + 0.0j
    # remainder of the alternating tail is below |next term| / (1 - |z|)
    tail_factor = az / (1.0 - az)
    for n in range(1, n_max + 1):
        term *= -z
        contrib = -term / float(n) ** alpha if alpha >= 0 else -term * float(n) ** (-alpha)
        acc += contrib
        if abs(contrib) * tail_factor < 1e-17 * max(abs(acc), 1e-280):
            return acc
    raise ConvergenceError(f"Fermi series did not converge within {n_max} terms at z={z!r}")


def _fermi_integral(alpha: float, z: complex, rel_tol: float = 5e-14) -> complex:
    """Quadrature route on the cut plane for alpha > 0.

    For alpha >= 1 the integrand is t^{alpha-1} g(t) directly; for
    0 < alpha < 1 one integration by parts trades the endpoint singularity
    for the bounded g', so after t = u^2 the integrand is smooth at 0.
    Negative alpha is delegated to the closed-form continuations, where the
    quadrature would face catastrophic spike cancellation.
    """
    if z == 0:
        return 0.0 + 0.0j
    if alpha <= 0:
        if alpha == round(alpha):
            return _fermi_negative_integer(int(-alpha), z)
        return _fermi_hurwitz(alpha, z)
    m = 0 if alpha >= 1.0 else 1
    a_m = alpha + m
    u_max = math.sqrt(45.0 + math.log1p(abs(z)))
    power = 2.0 * a_m - 1.0  # >= 1, no endpoint singularity after t = u^2

    def integrand(u):
        t = u * u
        w = z * np.exp(-t)
        g = w / (1.0 + w)
        if m == 1:
            g = g * g - g  # g' in terms of g, stable
        return 2.0 * u**power * g

    integral = _adaptive_gauss(integrand, 0.0, u_max, rel_tol)
    return (-1.0) ** m * integral / math.gamma(a_m)


def fermi_f(alpha: float, z, method: str = "auto") -> complex:
    """Evaluate the Fermi function f_alpha at a cut-plane fugacity.

    z may be complex or a CutPlaneFugacity (validated against cut_end = 1).
    method: "auto" picks the series inside |z| < 0.5 and the integral
    representation outside; "series" and "integral" force one route (the
    series route additionally requires |z| < 1).

    alpha <= 0 is supported through the integration-by-parts continuation;
    the documented contract for external callers is alpha > 0.
    """
    fug = as_fugacity(z, cut_end=1.0)
    zv = fug.value
    if method == "auto":
        if abs(zv) < SERIES_RADIUS:
            return _fermi_series(alpha, zv)
        return _fermi_integral(alpha, zv)
    if method == "series":
        return _fermi_series(alpha, zv)
    if method == "integral":
        return _fermi_integral(alpha, zv)
    raise ValueError(f"unknown method {method!r}")


def fermi_f_jet(alpha: float, arg: TaylorJet, cut_end: float = 1.0) -> TaylorJet:
    """Taylor jet of f_alpha composed with the jet `arg`.

    Uses the exact cascade F_i' = F_{i+1} * (arg'/arg) with
    F_i = f_{alpha-i}(arg), i.e. the recurrence z d/dz f_alpha = f_{alpha-1}
    propagated through the chain rule; no finite differences involved.
    The zeroth coefficient of `arg` must be a valid f_alpha argument.
    """
    n = arg.order
    w0 = complex(arg.coeffs[0])
    if w0 == 0:
        # argument vanishes at the base point: the defining series truncates
        # exactly because (arg)^k has no coefficients below order k
        out = constant_jet(0.0, n, arg.base)
        power = constant_jet(1.0, n, arg.base)
        for k in range(1, n + 1):
            power = power * arg
            out = out + power * ((-1.0) ** (k + 1) * float(k) ** (-alpha))
        return out
    as_fugacity(w0, cut_end=cut_end)
    values = [fermi_f(alpha - i, w0) for i in range(n + 1)]
    if n == 0:
        return constant_jet(values[0], 0, arg.base)
    log_deriv = arg.derivative() / arg.truncate(n - 1)
    jet = constant_jet(values[n], 0, arg.base)
    for i in range(n - 1, -1, -1):
        target = n - i
        jet = (jet * log_deriv.truncate(target - 1)).antiderivative()
        jet = jet + values[i]
    return jet
