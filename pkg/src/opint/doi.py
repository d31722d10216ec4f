"""Double operator integrals as Schur multipliers in joint eigenbases.

For hermitian A, B with eigensystems (w_A, U) and (w_B, V), the integral
of a two-variable symbol phi against the product of their spectral
measures acts on a matrix T as

    U (Phi .* (U* T V)) V*,        Phi[i, j] = phi(w_A[i], w_B[j]),

i.e. entrywise multiplication in the rotated coordinates.  This module
holds that transformer together with the routes that feed it: divided
difference symbols, the Fourier-kernel route through a time integral,
finite decompositions phi = sum_t w_t a_t(x) b_t(y), triangular
truncation, and sampled transformer norms on Schatten classes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import InputDomainError
from .linalg import (EigenSystem, apply_function, as_complex_matrix,
                     as_hermitian, eig_hermitian, schatten_norm)
from .quadrature import QuadratureRule, trapezoid_rule
from .rng import random_complex, substream

DEFAULT_FOURIER_QUAD = (40.0, 4000)  # half-width, node count


@dataclass(frozen=True)
class SpectralPair:
    """Eigensystems of two hermitian matrices of equal dimension."""

    left: EigenSystem
    right: EigenSystem

    def __post_init__(self):
        if self.left.dim != self.right.dim:
            raise InputDomainError(
                f"spectral pair dimensions differ: {self.left.dim} vs {self.right.dim}")

    @property
    def dim(self) -> int:
        return self.left.dim

    @property
    def spectral_scale(self) -> float:
        return float(max(np.abs(self.left.eigenvalues).max(),
                         np.abs(self.right.eigenvalues).max()))


def make_spectral_pair(a, b) -> SpectralPair:
    am = as_hermitian(a, "A")
    bm = as_hermitian(b, "B")
    if am.shape != bm.shape:
        raise InputDomainError(f"dimension mismatch: {am.shape} vs {bm.shape}")
    return SpectralPair(left=eig_hermitian(am), right=eig_hermitian(bm))


@dataclass(frozen=True)
class SymbolGrid:
    """Values of a symbol on the product of the two spectra."""

    values: np.ndarray
    left_nodes: np.ndarray
    right_nodes: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.complex128)
        ln = np.asarray(self.left_nodes, dtype=float)
        rn = np.asarray(self.right_nodes, dtype=float)
        if v.size == 0:
            raise InputDomainError("empty symbol grid")
        if v.shape != (ln.size, rn.size):
            raise InputDomainError(
                f"symbol grid shape {v.shape} does not match nodes ({ln.size}, {rn.size})")
        if not np.isfinite(v.real).all() or not np.isfinite(v.imag).all():
            raise InputDomainError("symbol grid has non-finite values")
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "left_nodes", ln)
        object.__setattr__(self, "right_nodes", rn)

    def sup_norm(self) -> float:
        return float(np.abs(self.values).max())

    def to_csv(self) -> str:
        """Grid as CSV: header row of right nodes, first column of left nodes."""
        lines = ["," + ",".join(repr(float(x)) for x in self.right_nodes)]
        for i, lam in enumerate(self.left_nodes):
            row = ",".join(_fmt_complex(z) for z in self.values[i])
            lines.append(f"{float(lam)!r},{row}")
        return "\n".join(lines) + "\n"


def _fmt_complex(z: complex) -> str:
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real!r}{sign}{abs(z.imag)!r}j"


def symbol_from_function(pair: SpectralPair, phi) -> SymbolGrid:
    """Sample a closed-form symbol phi(lambda, mu) on the spectra."""
    lam = pair.left.eigenvalues
    mu = pair.right.eigenvalues
    values = np.asarray(phi(lam[:, None], mu[None, :]), dtype=np.complex128)
    return SymbolGrid(values=values, left_nodes=lam, right_nodes=mu)


def divided_difference_symbol(pair: SpectralPair, f, f_prime) -> SymbolGrid:
    """Difference-quotient symbol (f(l) - f(m))/(l - m), with f' on the
    near-diagonal |l - m| <= 1e-9 * spectral scale to avoid cancellation."""
    lam = pair.left.eigenvalues[:, None]
    mu = pair.right.eigenvalues[None, :]
    gap = lam - mu
    near = np.abs(gap) <= 1e-9 * pair.spectral_scale
    safe_gap = np.where(near, 1.0, gap)
    fl = np.asarray(f(pair.left.eigenvalues), dtype=np.complex128)
    fm = np.asarray(f(pair.right.eigenvalues), dtype=np.complex128)
    quotient = (fl[:, None] - fm[None, :]) / safe_gap
    diag = np.asarray(f_prime((lam + mu) / 2.0), dtype=np.complex128)
    values = np.where(near, diag, quotient)
    if not np.isfinite(values).all():
        raise InputDomainError("divided difference not finite on the spectra")
    return SymbolGrid(values=values,
                      left_nodes=pair.left.eigenvalues,
                      right_nodes=pair.right.eigenvalues)


def _check_grid(pair: SpectralPair, sym: SymbolGrid):
    if sym.values.shape != (pair.dim, pair.dim):
        raise InputDomainError(
            f"symbol grid {sym.values.shape} does not match pair dimension {pair.dim}")


def doi_apply(pair: SpectralPair, sym: SymbolGrid, t) -> np.ndarray:
    """Apply the double operator integral of `sym` to T."""
    _check_grid(pair, sym)
    tm = as_complex_matrix(t, "T")
    if tm.shape != (pair.dim, pair.dim):
        raise InputDomainError(f"T has shape {tm.shape}, expected {(pair.dim, pair.dim)}")
    u = pair.left.unitary
    v = pair.right.unitary
    return u @ (sym.values * (u.conj().T @ tm @ v)) @ v.conj().T


def hs_multiplier_norm(pair: SpectralPair, sym: SymbolGrid) -> float:
    """Exact C2 -> C2 transformer norm: the sup of |phi| on the grid."""
    _check_grid(pair, sym)
    return sym.sup_norm()


def doi_fourier(pair: SpectralPair, f, t, quad: QuadratureRule | None = None) -> np.ndarray:
    """Time-integral route: sum_m w_m e^{-i t_m A} T e^{i t_m B} f(t_m).

    For integrable f this approximates the integral whose symbol is the
    Fourier transform fhat(lambda - mu), fhat(x) = int e^{-i x s} f(s) ds;
    it must agree with `doi_apply` on that symbol to quadrature tolerance.
    """
    if quad is None:
        quad = trapezoid_rule(*DEFAULT_FOURIER_QUAD)
    tm = as_complex_matrix(t, "T")
    if tm.shape != (pair.dim, pair.dim):
        raise InputDomainError(f"T has shape {tm.shape}, expected {(pair.dim, pair.dim)}")
    samples = np.asarray(f(quad.nodes), dtype=np.complex128)
    if samples.shape != quad.nodes.shape:
        raise InputDomainError("integrand sampler must be vectorized over nodes")
    if not np.isfinite(samples).all():
        raise InputDomainError("integrand returned non-finite samples")
    acc = np.zeros_like(tm)
    for s, w, fs in zip(quad.nodes, quad.weights, samples):
        if fs == 0.0:
            continue
        ea = apply_function(pair.left, lambda x: np.exp(-1j * s * x))
        eb = apply_function(pair.right, lambda x: np.exp(1j * s * x))
        acc += (w * fs) * (ea @ tm @ eb)
    return acc


@dataclass(frozen=True)
class Decomposition:
    """Finite family phi(l, m) = sum_t weights[t] alphas[t](l) betas[t](m)."""

    alphas: np.ndarray  # (terms, n_left)
    betas: np.ndarray   # (terms, n_right)
    weights: np.ndarray  # (terms,) non-negative

    def __post_init__(self):
        a = np.asarray(self.alphas, dtype=np.complex128)
        b = np.asarray(self.betas, dtype=np.complex128)
        w = np.asarray(self.weights, dtype=float)
        if a.ndim != 2 or b.ndim != 2 or w.ndim != 1:
            raise InputDomainError("decomposition needs 2-D alpha/beta stacks and 1-D weights")
        if a.shape[0] != w.size or b.shape[0] != w.size or w.size == 0:
            raise InputDomainError("decomposition term counts disagree or are empty")
        if not (np.isfinite(a).all() and np.isfinite(b).all() and np.isfinite(w).all()):
            raise InputDomainError("decomposition has non-finite entries")
        if (w < 0).any():
            raise InputDomainError("decomposition weights must be non-negative")
        object.__setattr__(self, "alphas", a)
        object.__setattr__(self, "betas", b)
        object.__setattr__(self, "weights", w)

    @property
    def terms(self) -> int:
        return self.weights.size

    @classmethod
    def from_terms(cls, terms) -> "Decomposition":
        alphas, betas, weights = zip(*terms)
        return cls(np.stack([np.asarray(a, dtype=np.complex128) for a in alphas]),
                   np.stack([np.asarray(b, dtype=np.complex128) for b in betas]),
                   np.asarray(weights, dtype=float))


def peller_bound(d: Decomposition) -> float:
    """Trace-class transformer bound sum_t w_t |a_t|_inf |b_t|_inf."""
    return float(np.sum(d.weights
                        * np.abs(d.alphas).max(axis=1)
                        * np.abs(d.betas).max(axis=1)))


def symbol_from_decomposition(pair: SpectralPair, d: Decomposition) -> SymbolGrid:
    if d.alphas.shape[1] != pair.dim or d.betas.shape[1] != pair.dim:
        raise InputDomainError(
            f"decomposition vectors sized ({d.alphas.shape[1]}, {d.betas.shape[1]}), "
            f"pair dimension is {pair.dim}")
    values = np.einsum("t,ti,tj->ij", d.weights.astype(np.complex128), d.alphas, d.betas)
    return SymbolGrid(values=values,
                      left_nodes=pair.left.eigenvalues,
                      right_nodes=pair.right.eigenvalues)


def triangular_truncation_symbol(pair: SpectralPair) -> SymbolGrid:
    lam = pair.left.eigenvalues[:, None]
    mu = pair.right.eigenvalues[None, :]
    values = (lam > mu).astype(np.complex128)  # strict: ties map to 0
    return SymbolGrid(values=values,
                      left_nodes=pair.left.eigenvalues,
                      right_nodes=pair.right.eigenvalues)


def triangular_truncation(pair: SpectralPair, t) -> np.ndarray:
    """Integral of the indicator {lambda > mu}: the abstract 'take the
    strictly lower triangle' transformer in the joint eigenbases."""
    return doi_apply(pair, triangular_truncation_symbol(pair), t)


def sampled_transformer_norm(pair: SpectralPair, sym: SymbolGrid, p, trials: int,
                             seed: int, tag: str = "transformer-norm",
                             extra_candidates=()) -> float:
    """Sampled lower bound of the C_p -> C_p norm of the multiplier.

    Exact C_p transformer norms are not computable for p != 2; this is a
    best-of-N random search over the unit ball of C_p, so the value it
    returns is a certified lower bound only.
    """
    _check_grid(pair, sym)
    best = 0.0
    n = pair.dim
    for trial in range(trials):
        rng = substream(seed, tag, trial)
        t = random_complex(rng, (n, n))
        best = max(best, _normalized_image_norm(pair, sym, t, p))
    for t in extra_candidates:
        best = max(best, _normalized_image_norm(pair, sym, np.asarray(t, dtype=np.complex128), p))
    return best


def _normalized_image_norm(pair, sym, t, p) -> float:
    tn = schatten_norm(t, p)
    if tn == 0.0:
        return 0.0
    return schatten_norm(doi_apply(pair, sym, t), p) / tn


@dataclass
class ExperimentReport:
    """Seeded-experiment record; serializes to the report JSON layout."""

    op: str
    params: dict
    seed: int
    trials: int
    max_ratio: float
    per_trial: list = field(default_factory=list)
    skipped: int = 0

    def to_json(self) -> str:
        payload = {"op": self.op, "params": self.params, "seed": self.seed,
                   "trials": self.trials, "max_ratio": self.max_ratio,
                   "skipped": self.skipped, "per_trial": self.per_trial}
        return json.dumps(payload, indent=2, sort_keys=True)


def lipschitz_ratio_experiment(f, lip_const: float, p: float, trials: int, seed: int,
                               dim: int = 8, pair_sampler=None,
                               f_name: str = "f") -> ExperimentReport:
    """Max observed |f(A)-f(B)|_p / |A-B|_p over seeded hermitian pairs.

    For p = 2 the ratio is provably <= lip_const; for other p the theory
    guarantees a finite constant without giving its value, so the report
    only records what was seen.  Trials with A = B carry no ratio and are
    skipped (counted in `skipped`).
    """
    if not 1 < p < np.inf:
        raise InputDomainError(f"p must lie in the open interval (1, inf), got {p}")
    if trials < 1:
        raise InputDomainError("need at least one trial")
    ratios = []
    skipped = 0
    for trial in range(trials):
        if pair_sampler is None:
            rng = substream(seed, "lipschitz", trial)
            ga = random_complex(rng, (dim, dim))
            gb = random_complex(rng, (dim, dim))
            a = (ga + ga.conj().T) / 2
            b = (gb + gb.conj().T) / 2
        else:
            a, b = pair_sampler(trial)
        diff_norm = schatten_norm(np.asarray(a) - np.asarray(b), p)
        if diff_norm == 0.0:
            skipped += 1
            continue
        ea = eig_hermitian(a)
        eb = eig_hermitian(b)
        num = schatten_norm(apply_function(ea, f) - apply_function(eb, f), p)
        ratios.append(float(num / diff_norm))
    return ExperimentReport(
        op="lipschitz_ratio", params={"f": f_name, "lip_const": lip_const, "p": p, "dim": dim},
        seed=seed, trials=trials, max_ratio=max(ratios) if ratios else 0.0,
        per_trial=ratios, skipped=skipped)
