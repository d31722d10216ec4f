"""Spectral shift functions for hermitian pairs, by four routes.

For matrices the shift function of a pair (A, B) is the difference of
eigenvalue counting functions, xi = N_B - N_A: the unique piecewise
constant, integer valued, compactly supported function making the trace
identity tr(f(A) - f(B)) = int f' xi exact.  The other three routes -- a
regularized arctan trace, an oscillatory Fourier integral, and the
argument of a rank-one Cauchy transform -- approximate the same xi and
converge to it as their regularization parameters shrink.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputDomainError
from .linalg import EigenSystem, apply_function, as_hermitian, eig_hermitian
from .quadrature import QuadratureRule, symmetric_open_rule

DEFAULT_FOURIER_QUAD = (200.0, 8000)   # half-width, node count
DEFAULT_ARCTAN_QUAD = (40.0, 32000)
DEFAULT_EPSILON = 1e-2
DEFAULT_ETA = 1e-6


@dataclass(frozen=True)
class ShiftFunction:
    """Piecewise-constant integer function: values[k] on
    [breakpoints[k], breakpoints[k+1]), zero outside the span.

    The canonical empty instance (no breakpoints) is the zero function.
    """

    breakpoints: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        bp = np.asarray(self.breakpoints, dtype=float)
        v = np.asarray(self.values)
        if bp.size == 0:
            v = v.astype(np.int64) if v.size == 0 else v
            if v.size != 0:
                raise InputDomainError("empty breakpoints require empty values")
        else:
            if bp.size < 2 or v.size != bp.size - 1:
                raise InputDomainError("need one value per interval between breakpoints")
            if not np.isfinite(bp).all():
                raise InputDomainError("breakpoints must be finite")
            if (np.diff(bp) <= 0).any():
                raise InputDomainError("breakpoints must be strictly ascending")
            if not np.array_equal(v, v.astype(np.int64)):
                raise InputDomainError("shift function values must be integers")
        object.__setattr__(self, "breakpoints", bp)
        object.__setattr__(self, "values", v.astype(np.int64))

    @property
    def is_zero(self) -> bool:
        return self.values.size == 0

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        out = np.zeros(x.shape, dtype=np.int64)
        if self.is_zero:
            return out
        idx = np.searchsorted(self.breakpoints, x, side="right") - 1
        inside = (idx >= 0) & (idx < self.values.size)
        out[inside] = self.values[idx[inside]]
        return out

    def _lengths(self) -> np.ndarray:
        return np.diff(self.breakpoints) if not self.is_zero else np.zeros(0)

    def integral(self) -> float:
        return float(np.sum(self.values * self._lengths()))

    def l1(self) -> float:
        return float(np.sum(np.abs(self.values) * self._lengths()))

    def support(self):
        if self.is_zero:
            return None
        return float(self.breakpoints[0]), float(self.breakpoints[-1])

    def integrate_derivative(self, f) -> complex:
        """Exact integral of f' against this function: telescoped
        antiderivative differences over each constancy interval."""
        if self.is_zero:
            return 0.0 + 0.0j
        fb = np.asarray(f(self.breakpoints), dtype=np.complex128)
        return complex(np.sum(self.values * (fb[1:] - fb[:-1])))

    def resolvent_integral(self, z: complex) -> complex:
        """Exact integral of xi(l) / (l - z)^2 dl for Im z != 0."""
        if self.is_zero:
            return 0.0 + 0.0j
        inv = 1.0 / (self.breakpoints - z)
        return complex(np.sum(self.values * (inv[:-1] - inv[1:])))

    def l1_distance(self, other: "ShiftFunction") -> float:
        grid = np.unique(np.concatenate([self.breakpoints, other.breakpoints]))
        if grid.size < 2:
            return 0.0
        mids = (grid[:-1] + grid[1:]) / 2.0
        diff = self(mids) - other(mids)
        return float(np.sum(np.abs(diff) * np.diff(grid)))


def _canonical_shift(breakpoints: np.ndarray, values: np.ndarray) -> ShiftFunction:
    bp = [float(breakpoints[0])] if breakpoints.size else []
    vals: list[int] = []
    for k, v in enumerate(values):
        v = int(v)
        if vals and v == vals[-1]:
            bp[-1] = float(breakpoints[k + 1])
        else:
            vals.append(v)
            bp.append(float(breakpoints[k + 1]))
    while vals and vals[0] == 0:
        vals.pop(0)
        bp.pop(0)
    while vals and vals[-1] == 0:
        vals.pop()
        bp.pop()
    if not vals:
        return ShiftFunction(np.zeros(0), np.zeros(0, dtype=np.int64))
    return ShiftFunction(np.asarray(bp), np.asarray(vals, dtype=np.int64))


def xi_counting(a, b) -> ShiftFunction:
    """Exact shift function: xi(l) = #{eigs of B <= l} - #{eigs of A <= l}."""
    wa = eig_hermitian(as_hermitian(a, "A")).eigenvalues
    wb = eig_hermitian(as_hermitian(b, "B")).eigenvalues
    if wa.size != wb.size:
        raise InputDomainError(f"dimension mismatch: {wa.size} vs {wb.size}")
    bp = np.unique(np.concatenate([wa, wb]))
    counts_b = np.searchsorted(wb, bp[:-1], side="right")
    counts_a = np.searchsorted(wa, bp[:-1], side="right")
    return _canonical_shift(bp, counts_b - counts_a)


@dataclass(frozen=True)
class SampledCurve:
    """A function sampled on an ascending grid."""

    abscissae: np.ndarray
    ordinates: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.abscissae, dtype=float)
        y = np.asarray(self.ordinates, dtype=float)
        if x.shape != y.shape or x.ndim != 1:
            raise InputDomainError("curve needs matching 1-D abscissae/ordinates")
        if not (np.isfinite(x).all() and np.isfinite(y).all()):
            raise InputDomainError("curve entries must be finite")
        object.__setattr__(self, "abscissae", x)
        object.__setattr__(self, "ordinates", y)

    def to_csv(self) -> str:
        lines = ["lambda,xi"]
        lines += [f"{float(x)!r},{float(y)!r}" for x, y in zip(self.abscissae, self.ordinates)]
        return "\n".join(lines) + "\n"


def _as_grid(grid) -> np.ndarray:
    g = np.asarray(grid, dtype=float)
    if g.ndim != 1 or g.size == 0 or not np.isfinite(g).all():
        raise InputDomainError("grid must be a non-empty finite 1-D array")
    return g


def harmonic_h(a, b, x: float, y: float) -> float:
    """Harmonic extension h(x, y) = (1/pi) tr[arctan((A-x)/y) - arctan((B-x)/y)]."""
    if y <= 0:
        raise InputDomainError(f"need y > 0, got {y}")
    ea = eig_hermitian(as_hermitian(a, "A"))
    eb = eig_hermitian(as_hermitian(b, "B"))
    return _arctan_trace(ea, eb, float(x), float(y))


def _arctan_trace(ea: EigenSystem, eb: EigenSystem, s: float, eps: float) -> float:
    ma = apply_function(ea, lambda t: np.arctan((t - s) / eps))
    mb = apply_function(eb, lambda t: np.arctan((t - s) / eps))
    return float(np.trace(ma - mb).real) / np.pi


def xi_arctan(a, b, epsilon: float, grid) -> SampledCurve:
    """Regularized route: (1/pi) tr[arctan((A-s)/eps) - arctan((B-s)/eps)]."""
    if epsilon <= 0:
        raise InputDomainError(f"need epsilon > 0, got {epsilon}")
    g = _as_grid(grid)
    ea = eig_hermitian(as_hermitian(a, "A"))
    eb = eig_hermitian(as_hermitian(b, "B"))
    ords = np.array([_arctan_trace(ea, eb, s, epsilon) for s in g])
    return SampledCurve(abscissae=g, ordinates=ords)


def xi_arctan_extrapolated(a, b, epsilon: float, grid) -> SampledCurve:
    """Two-term Richardson extrapolation of the arctan route over the
    geometric ladder (eps, eps/2); first-order in eps, so 2 xi_{e/2} - xi_e."""
    coarse = xi_arctan(a, b, epsilon, grid)
    fine = xi_arctan(a, b, epsilon / 2.0, grid)
    return SampledCurve(abscissae=coarse.abscissae,
                        ordinates=2.0 * fine.ordinates - coarse.ordinates)


def xi_fourier_integrand(a, b, s: float, epsilon: float, x) -> np.ndarray:
    """Integrand of the Fourier route at frequency x (continuous at 0,
    where it takes the value i tr(A - B))."""
    ea = eig_hermitian(as_hermitian(a, "A"))
    eb = eig_hermitian(as_hermitian(b, "B"))
    x = np.asarray(x, dtype=float)
    return _fourier_integrand(ea.eigenvalues, eb.eigenvalues, s, epsilon, x)


def _fourier_integrand(wa, wb, s, epsilon, x):
    x = np.atleast_1d(np.asarray(x, dtype=float))
    tr_diff = (np.exp(1j * np.outer(x, wa)).sum(axis=1)
               - np.exp(1j * np.outer(x, wb)).sum(axis=1))
    core = np.empty_like(tr_diff)
    nz = x != 0.0
    core[nz] = tr_diff[nz] / x[nz]
    core[~nz] = 1j * (wa.sum() - wb.sum())
    return np.exp(-1j * s * x - epsilon * np.abs(x)) * core


def xi_fourier(a, b, epsilon: float, grid, quad: QuadratureRule | None = None) -> SampledCurve:
    """Oscillatory-integral route:

        xi_eps(s) = (1/2 pi i) int e^{-i s x - eps|x|} tr(e^{i x A} - e^{i x B}) / x dx.

    The quadrature must not place a node at 0 (the integrand is defined
    there only by continuous extension).  Note the kernel orientation:
    pairing e^{-isx} with tr(e^{+ixA} - e^{+ixB}) is what reproduces the
    counting function; flipping both signs reproduces -xi.
    """
    if epsilon <= 0:
        raise InputDomainError(f"need epsilon > 0, got {epsilon}")
    if quad is None:
        quad = symmetric_open_rule(*DEFAULT_FOURIER_QUAD)
    quad.require_zero_free()
    g = _as_grid(grid)
    wa = eig_hermitian(as_hermitian(a, "A")).eigenvalues
    wb = eig_hermitian(as_hermitian(b, "B")).eigenvalues
    x = quad.nodes
    tr_diff = (np.exp(1j * np.outer(x, wa)).sum(axis=1)
               - np.exp(1j * np.outer(x, wb)).sum(axis=1))
    coeff = quad.weights * np.exp(-epsilon * np.abs(x)) * tr_diff / x
    ords = (np.exp(-1j * np.outer(g, x)) @ coeff) / (2j * np.pi)
    return SampledCurve(abscissae=g, ordinates=ords.real)


def rank_one_cauchy_transform(eb: EigenSystem, w, z: complex) -> complex:
    """F(z) = sum_i |<v_i, w>|^2 / (mu_i - z) over the eigenpairs of B."""
    w = np.asarray(w, dtype=np.complex128)
    weights = np.abs(eb.unitary.conj().T @ w) ** 2
    return complex(np.sum(weights / (eb.eigenvalues - z)))


def xi_rank_one(b, w, alpha: float, grid, eta: float = DEFAULT_ETA) -> SampledCurve:
    """Boundary-argument route for A = B + alpha (., w) w:

        xi(x) ~= (1/pi) Arg(1 + alpha F(x + i eta)),  Arg in [0, 2 pi),

    so the values land in [0, 1), matching the counting function for a
    positive rank-one perturbation away from the spectra.
    """
    if eta <= 0:
        raise InputDomainError(f"need eta > 0, got {eta}")
    if alpha <= 0:
        raise InputDomainError(f"need alpha > 0, got {alpha}")
    w = np.asarray(w, dtype=np.complex128)
    norm = np.linalg.norm(w)
    if abs(norm - 1.0) > 1e-10:
        raise InputDomainError(f"w must be a unit vector, |w| = {norm!r}")
    g = _as_grid(grid)
    eb = eig_hermitian(as_hermitian(b, "B"))
    weights = np.abs(eb.unitary.conj().T @ w) ** 2
    f_vals = np.sum(weights[None, :] / (eb.eigenvalues[None, :] - g[:, None] - 1j * eta),
                    axis=1)
    ang = np.angle(1.0 + alpha * f_vals)
    ang = np.where(ang < 0, ang + 2.0 * np.pi, ang)
    return SampledCurve(abscissae=g, ordinates=ang / np.pi)


@dataclass(frozen=True)
class AtomicMeasure:
    """Finite positive measure sum_m weights[m] delta(points[m]), points != 0."""

    points: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.points, dtype=float)
        w = np.asarray(self.weights, dtype=float)
        if s.ndim != 1 or s.shape != w.shape:
            raise InputDomainError("atomic measure needs matching 1-D points/weights")
        if not (np.isfinite(s).all() and np.isfinite(w).all()):
            raise InputDomainError("atomic measure entries must be finite")
        if (s == 0.0).any():
            raise InputDomainError("atomic measure may not charge the point 0")
        if (w <= 0.0).any():
            raise InputDomainError("atomic measure weights must be positive")
        object.__setattr__(self, "points", s)
        object.__setattr__(self, "weights", w)

    def total(self) -> float:
        return float(self.weights.sum())


def admissible_f(mu: AtomicMeasure):
    """Build f(x) = i sum_m w_m (e^{-i s_m x} - 1)/s_m and its derivative
    f'(x) = sum_m w_m e^{-i s_m x}; |f'| is bounded by the total mass."""
    s = mu.points
    w = mu.weights

    def f(x):
        x = np.asarray(x, dtype=float)
        phase = np.exp(-1j * np.multiply.outer(x, s))
        return 1j * np.sum(w * (phase - 1.0) / s, axis=-1)

    def f_prime(x):
        x = np.asarray(x, dtype=float)
        phase = np.exp(-1j * np.multiply.outer(x, s))
        return np.sum(w * phase, axis=-1)

    return f, f_prime


@dataclass(frozen=True)
class TraceFormulaResult:
    lhs: complex
    rhs: complex

    @property
    def gap(self) -> float:
        return abs(self.lhs - self.rhs)


def trace_formula_check(a, b, f, f_prime=None) -> TraceFormulaResult:
    """Compare tr(f(A) - f(B)) with the exact integral of f' against the
    counting-function xi (computed from the antiderivative f, so f_prime
    is accepted for signature symmetry but not needed)."""
    ea = eig_hermitian(as_hermitian(a, "A"))
    eb = eig_hermitian(as_hermitian(b, "B"))
    lhs = complex(np.trace(apply_function(ea, f) - apply_function(eb, f)))
    xi = xi_counting(a, b)
    rhs = xi.integrate_derivative(f)
    return TraceFormulaResult(lhs=lhs, rhs=rhs)


def resolvent_identity_check(a, b, z: complex) -> float:
    """Gap in tr((A-z)^-1 - (B-z)^-1) = -int xi(l)/(l-z)^2 dl, both sides
    in closed form.  Requires Im z != 0."""
    z = complex(z)
    if z.imag == 0.0:
        raise InputDomainError("z must have nonzero imaginary part")
    wa = eig_hermitian(as_hermitian(a, "A")).eigenvalues
    wb = eig_hermitian(as_hermitian(b, "B")).eigenvalues
    lhs = np.sum(1.0 / (wa - z)) - np.sum(1.0 / (wb - z))
    rhs = -xi_counting(a, b).resolvent_integral(z)
    return float(abs(lhs - rhs))


def arctan_rep_value(t: float, quad: QuadratureRule | None = None) -> float:
    """Quadrature of (1/2i) int (e^{i s t} - 1)/s e^{-|s|} ds, which
    reproduces arctan(t)."""
    if quad is None:
        quad = symmetric_open_rule(*DEFAULT_ARCTAN_QUAD)
    quad.require_zero_free()
    s = quad.nodes
    g = (np.exp(1j * s * float(t)) - 1.0) / s * np.exp(-np.abs(s))
    return float((np.sum(quad.weights * g) / 2j).real)


def arctan_rep_check(t: float, quad: QuadratureRule | None = None) -> float:
    return abs(arctan_rep_value(t, quad) - float(np.arctan(t)))
