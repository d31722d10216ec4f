"""Dense complex/hermitian matrix algebra.

Everything downstream (operator integrals, shift functions, quantization)
runs through the primitives here: a self-contained cyclic Jacobi
eigensolver for hermitian matrices, functional calculus on the resulting
eigensystems, Schatten norms taken through the singular values, and the
unitary DFT matrix.  Matrices are plain complex ndarrays treated as
immutable values; every operation returns a fresh array.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, EvaluationError, InputDomainError

HERMITIAN_TOL = 1e-12
JACOBI_OFF_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100
PHASE_TOL = 1e-8


def as_complex_matrix(m, name: str = "matrix") -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] == 0 or a.shape[1] == 0:
        raise InputDomainError(f"{name} must be a non-empty 2-D array, got shape {a.shape}")
    if not np.isfinite(a.real).all() or not np.isfinite(a.imag).all():
        raise InputDomainError(f"{name} has non-finite entries")
    return a.copy()


def as_hermitian(m, name: str = "matrix", tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Validate hermitian symmetry to `tol` (absolute) and return the
    exactly symmetrized matrix (H + H*)/2."""
    a = as_complex_matrix(m, name)
    if a.shape[0] != a.shape[1]:
        raise InputDomainError(f"{name} must be square, got shape {a.shape}")
    asym = np.abs(a - a.conj().T).max()
    if asym > tol:
        raise InputDomainError(f"{name} is not hermitian: max asymmetry {asym:.3e} exceeds {tol:.1e}")
    return (a + a.conj().T) / 2.0


@dataclass(frozen=True)
class EigenSystem:
    """Spectral decomposition H = U diag(w) U* with w ascending.

    Column j of `unitary` is the eigenvector of eigenvalue `eigenvalues[j]`;
    rank-one projectors onto selections of columns realize the spectral
    measure of H.
    """

    eigenvalues: np.ndarray
    unitary: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.size

    def reconstruct(self) -> np.ndarray:
        u = self.unitary
        return (u * self.eigenvalues) @ u.conj().T

    def projector(self, mask) -> np.ndarray:
        """Spectral projector onto the eigenvalues selected by a boolean mask."""
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (self.dim,):
            raise InputDomainError("projector mask must have one flag per eigenvalue")
        u = self.unitary[:, mask]
        return u @ u.conj().T


def _jacobi(h: np.ndarray, want_vectors: bool):
    n = h.shape[0]
    a = h.copy()
    v = np.eye(n, dtype=np.complex128) if want_vectors else None
    scale = float(np.linalg.norm(a))
    if scale == 0.0 or n == 1:
        return np.diag(a).real.copy(), v, 0.0

    def off_norm():
        # measured directly (not by subtracting diagonal mass from the total,
        # which cancels catastrophically near convergence)
        off = a.copy()
        np.fill_diagonal(off, 0.0)
        return float(np.linalg.norm(off))

    # rotations below this size cannot move the off-diagonal residual past
    # the convergence threshold and may overflow the tangent formula
    skip = 1e-18 * scale
    for _ in range(JACOBI_MAX_SWEEPS):
        off = off_norm()
        if off <= JACOBI_OFF_TOL * scale:
            return np.diag(a).real.copy(), v, off
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                ab = abs(apq)
                if ab <= skip:
                    continue
                phase = apq / ab
                tau = (a[q, q].real - a[p, p].real) / (2.0 * ab)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c * phase
                sc = s.conjugate()
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = sc * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - sc * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                if want_vectors:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp - sc * vq
                    v[:, q] = s * vp + c * vq
    off = off_norm()
    raise ConvergenceError(
        f"Jacobi sweeps did not converge in {JACOBI_MAX_SWEEPS} sweeps: "
        f"off-diagonal residual {off:.3e} (threshold {JACOBI_OFF_TOL * scale:.3e})",
        residual=off,
    )


def _fix_phases(u: np.ndarray) -> np.ndarray:
    # first component of each column with modulus > PHASE_TOL is made real > 0
    n = u.shape[1]
    for j in range(n):
        col = u[:, j]
        idx = np.flatnonzero(np.abs(col) > PHASE_TOL)
        k = idx[0] if idx.size else int(np.argmax(np.abs(col)))
        pivot = col[k]
        if pivot != 0.0:
            u[:, j] = col * (abs(pivot) / pivot)
            u[k, j] = u[k, j].real
    return u


def eig_hermitian(h) -> EigenSystem:
    """Diagonalize a hermitian matrix by cyclic Jacobi sweeps.

    Deterministic: fixed sweep order, ascending eigenvalues with stable tie
    order, and each eigenvector's first component of modulus > 1e-8 made
    real and positive.  Raises ConvergenceError (with the off-diagonal
    residual) if 100 sweeps do not reach the 1e-13 relative threshold,
    which does not happen for finite hermitian input in practice.
    """
    hm = as_hermitian(h)
    w, v, _ = _jacobi(hm, want_vectors=True)
    order = np.argsort(w, kind="stable")
    w = w[order]
    v = _fix_phases(v[:, order])
    return EigenSystem(eigenvalues=w, unitary=v)


def hermitian_eigenvalues(h) -> np.ndarray:
    """Ascending eigenvalues only (no eigenvector accumulation)."""
    hm = as_hermitian(h)
    w, _, _ = _jacobi(hm, want_vectors=False)
    return np.sort(w, kind="stable")


def apply_function(eig: EigenSystem, f) -> np.ndarray:
    """Functional calculus: U diag(f(w)) U*.

    `f` may be real- or complex-valued; the result is hermitian exactly
    when f is real on the spectrum.  Raises EvaluationError naming the
    offending eigenvalue if f is non-finite there.
    """
    w = eig.eigenvalues
    values = _eval_on_spectrum(f, w)
    bad = ~np.isfinite(values)
    if bad.any():
        raise EvaluationError(f"function not finite at eigenvalue {w[np.argmax(bad)]!r}")
    u = eig.unitary
    return (u * values) @ u.conj().T


def _eval_on_spectrum(f, w: np.ndarray) -> np.ndarray:
    try:
        values = np.asarray(f(w), dtype=np.complex128)
        if values.shape == w.shape:
            return values
    except (TypeError, ValueError):
        pass
    out = np.empty(w.shape, dtype=np.complex128)
    for i, x in enumerate(w):
        try:
            out[i] = f(x)
        except Exception as exc:
            raise EvaluationError(f"function failed at eigenvalue {x!r}: {exc}") from exc
    return out


def singular_values(m) -> np.ndarray:
    """Singular values (descending) via the eigenvalues of M*M."""
    a = as_complex_matrix(m)
    w = hermitian_eigenvalues(a.conj().T @ a)
    return np.sqrt(np.clip(w, 0.0, None))[::-1]


def schatten_norm(m, p) -> float:
    """Schatten p-norm: the l^p norm of the singular values; p=inf gives
    the operator norm."""
    if p != np.inf and p < 1:
        raise InputDomainError(f"Schatten norm needs p >= 1 or p = inf, got {p}")
    s = singular_values(m)
    if p == np.inf:
        return float(s[0])
    if p == 1:
        return float(s.sum())
    if p == 2:
        return float(np.sqrt((s * s).sum()))
    return float((s**p).sum() ** (1.0 / p))


def operator_norm(m) -> float:
    return schatten_norm(m, np.inf)


def trace_norm(m) -> float:
    return schatten_norm(m, 1)


def dft_unitary(n: int) -> np.ndarray:
    """Unitary DFT matrix F[j,k] = exp(-2 pi i jk/n)/sqrt(n)."""
    if n < 1:
        raise InputDomainError(f"DFT size must be >= 1, got {n}")
    j, k = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    return np.exp(-2j * np.pi * (j * k % n) / n) / np.sqrt(n)


def matrix_to_json_dict(m) -> dict:
    a = as_complex_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise InputDomainError("JSON matrix format holds square matrices")
    return {"dim": a.shape[0], "re": a.real.tolist(), "im": a.imag.tolist()}


def matrix_from_json_dict(d, hermitian: bool = False, name: str = "matrix") -> np.ndarray:
    try:
        dim = int(d["dim"])
        re = np.asarray(d["re"], dtype=float)
        im = np.asarray(d["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputDomainError(f"{name}: malformed matrix JSON ({exc})") from exc
    if re.shape != (dim, dim) or im.shape != (dim, dim):
        raise InputDomainError(
            f"{name}: 're'/'im' must be {dim}x{dim} arrays, got {re.shape} and {im.shape}")
    a = as_complex_matrix(re + 1j * im, name)
    if hermitian:
        return as_hermitian(a, name)
    return a


def save_matrix(path, m):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_json_dict(m), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_matrix(path, hermitian: bool = False) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        return matrix_from_json_dict(json.load(fh), hermitian=hermitian, name=str(path))
