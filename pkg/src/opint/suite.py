"""Scenario runner: named property checks over every module.

The `suite` command executes the full check registry at the configured
dims/seed/trials and assembles a machine-readable report.  Checks encode
identities and inequalities that hold for every seed; trial counts only
change how much evidence is gathered, never whether a healthy build
passes.  Reports are byte-stable for a fixed (config, seed): wall time is
reported on stderr, not in the file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields

import numpy as np

from . import doi, quantization, shift, sylvester
from .errors import ConfigError
from .linalg import (apply_function, dft_unitary, eig_hermitian, operator_norm,
                     schatten_norm, trace_norm)
from .quadrature import symmetric_open_rule, trapezoid_rule
from .rng import random_complex, random_hermitian, random_unit_vector, substream

TOLERANCE_DEFAULTS = {
    "algebraic": 1e-10,    # exact identities up to rounding
    "quadrature": 1e-6,    # cross-checks limited by a quadrature rule
    "boundary": 0.05,      # regularized routes compared at fixed distance
}

COMMANDS = ("shift", "doi", "sylvester", "quantize", "cotlar", "peller", "suite")


@dataclass
class ScenarioConfig:
    command: str = "suite"
    dims: list = field(default_factory=lambda: [2, 4, 6, 8])
    seed: int = 42
    trials: int = 20
    tolerances: dict = field(default_factory=dict)
    grid: str = "-4:4:161"
    route: str = "counting"
    epsilon: float = 0.01
    eta: float = 1e-6
    alpha: float = 1.0
    extrapolated: bool = False
    quad_half_width: float | None = None
    quad_nodes: int | None = None
    p: float = float("inf")
    f: str = "arctan"
    n: int = 8
    terms: int = 4
    inputs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"command: unknown command {self.command!r}, "
                              f"expected one of {', '.join(COMMANDS)}")
        self.dims = [int(d) for d in self.dims]
        if not self.dims or min(self.dims) < 1:
            raise ConfigError("dims: every dimension must be >= 1")
        self.seed = int(self.seed) & (2**64 - 1)
        if self.trials < 1:
            raise ConfigError("trials: must be >= 1")
        unknown_tols = set(self.tolerances) - set(TOLERANCE_DEFAULTS)
        if unknown_tols:
            raise ConfigError(f"tolerances: unknown names {sorted(unknown_tols)}")

    @classmethod
    def from_dict(cls, raw: dict, overrides: dict | None = None) -> "ScenarioConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(raw) - known
        if unknown:
            raise ConfigError(f"config: unknown keys {sorted(unknown)}")
        merged = dict(raw)
        for key, value in (overrides or {}).items():
            if value is not None:
                merged[key] = value
        return cls(**merged)

    def tolerance(self, name: str) -> float:
        return float(self.tolerances.get(name, TOLERANCE_DEFAULTS[name]))

    def grid_array(self) -> np.ndarray:
        try:
            lo, hi, count = self.grid.split(":")
            lo, hi, count = float(lo), float(hi), int(count)
        except ValueError as exc:
            raise ConfigError(f"grid: expected min:max:count, got {self.grid!r}") from exc
        if count < 1 or hi <= lo:
            raise ConfigError(f"grid: degenerate specification {self.grid!r}")
        return np.linspace(lo, hi, count)

    def to_json_dict(self) -> dict:
        d = {f.name: getattr(self, f.name) for f in fields(self)}
        d["p"] = "inf" if self.p == float("inf") else self.p
        return d


@dataclass
class CheckRecord:
    name: str
    expected: float      # the bound the observation must stay within
    observed: float
    tolerance: float
    passed: bool
    note: str = ""

    def to_json_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected, "observed": self.observed,
                "tolerance": self.tolerance, "passed": self.passed, "note": self.note}


@dataclass
class Report:
    command: str
    config: dict
    checks: list
    extras: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> str:
        payload = {"command": self.command, "config": self.config,
                   "checks": [c.to_json_dict() for c in self.checks],
                   "passed": self.passed}
        payload.update(self.extras)
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _bounded(name, observed, bound, note="") -> CheckRecord:
    return CheckRecord(name=name, expected=float(bound), observed=float(observed),
                       tolerance=float(bound), passed=bool(observed <= bound), note=note)


# --------------------------------------------------------------------------
# suite checks; each takes (cfg) and returns a CheckRecord
# --------------------------------------------------------------------------


def _pairs(cfg: ScenarioConfig, tag: str):
    for trial in range(cfg.trials):
        dim = cfg.dims[trial % len(cfg.dims)]
        rng = substream(cfg.seed, tag, trial)
        yield trial, rng, random_hermitian(rng, dim), random_hermitian(rng, dim)


def check_eig_reconstruction(cfg):
    worst = 0.0
    for _, rng, a, _ in _pairs(cfg, "suite-eig"):
        e = eig_hermitian(a)
        worst = max(worst, np.linalg.norm(e.reconstruct() - a) / max(np.linalg.norm(a), 1e-300))
    return _bounded("linalg.eig_reconstruction", worst, cfg.tolerance("algebraic"))


def check_schatten_monotone(cfg):
    ps = [1, 1.5, 2, 4, np.inf]
    worst = 0.0
    for trial in range(cfg.trials):
        rng = substream(cfg.seed, "suite-schatten", trial)
        m = random_complex(rng, (cfg.dims[trial % len(cfg.dims)],) * 2)
        norms = [schatten_norm(m, p) for p in ps]
        worst = max(worst, max(hi - lo for lo, hi in zip(norms, norms[1:])))
    return _bounded("linalg.schatten_monotone_in_1_over_p", worst, cfg.tolerance("algebraic"))


def check_hoelder_duality(cfg):
    pairs = [(1, np.inf), (2, 2), (4, 4 / 3)]
    worst = 0.0
    for trial in range(cfg.trials):
        rng = substream(cfg.seed, "suite-hoelder", trial)
        dim = cfg.dims[trial % len(cfg.dims)]
        m, n = random_complex(rng, (dim, dim)), random_complex(rng, (dim, dim))
        p, q = pairs[trial % len(pairs)]
        slack = abs(np.trace(m @ n.conj().T)) - schatten_norm(m, p) * schatten_norm(n, q)
        worst = max(worst, slack)
    return _bounded("linalg.hoelder_trace_duality", worst, cfg.tolerance("algebraic"))


def check_dft_order_four(cfg):
    worst = 0.0
    for dim in cfg.dims:
        f = dft_unitary(dim)
        worst = max(worst, np.abs(np.linalg.matrix_power(f, 4) - np.eye(dim)).max())
    return _bounded("linalg.dft_fourth_power_identity", worst, cfg.tolerance("algebraic"))


def check_apply_function_additive(cfg):
    worst = 0.0
    for _, rng, a, _ in _pairs(cfg, "suite-additive"):
        e = eig_hermitian(a)
        lhs = apply_function(e, lambda x: np.sin(x) + np.exp(x))
        rhs = apply_function(e, np.sin) + apply_function(e, np.exp)
        worst = max(worst, np.abs(lhs - rhs).max() / max(np.abs(rhs).max(), 1.0))
    return _bounded("linalg.apply_function_additive", worst, cfg.tolerance("algebraic"))


def check_doi_identity_transformer(cfg):
    worst = 0.0
    for _, rng, a, b in _pairs(cfg, "suite-doi-id"):
        pair = doi.SpectralPair(eig_hermitian(a), eig_hermitian(b))
        sym = doi.symbol_from_function(pair, lambda lam, mu: np.ones_like(lam * mu, dtype=complex))
        t = random_complex(rng, (pair.dim, pair.dim))
        worst = max(worst, np.abs(doi.doi_apply(pair, sym, t) - t).max())
    return _bounded("doi.identity_symbol_acts_trivially", worst, cfg.tolerance("algebraic"))


def check_doi_localization(cfg):
    worst = 0.0
    for _, rng, a, b in _pairs(cfg, "suite-doi-loc"):
        pair = doi.SpectralPair(eig_hermitian(a), eig_hermitian(b))
        sym = doi.symbol_from_function(pair, lambda lam, mu: np.sin(lam) + 1j * np.cos(mu))
        mask_l = pair.left.eigenvalues <= float(rng.uniform(-1, 1))
        mask_r = pair.right.eigenvalues > float(rng.uniform(-1, 1))
        cut = doi.SymbolGrid(values=sym.values * np.outer(mask_l, mask_r),
                             left_nodes=sym.left_nodes, right_nodes=sym.right_nodes)
        t = random_complex(rng, (pair.dim, pair.dim))
        lhs = doi.doi_apply(pair, cut, t)
        rhs = (pair.left.projector(mask_l) @ doi.doi_apply(pair, sym, t)
               @ pair.right.projector(mask_r))
        worst = max(worst, np.abs(lhs - rhs).max())
    return _bounded("doi.localization_identity", worst, cfg.tolerance("algebraic"))


def check_doi_divided_difference(cfg):
    worst = 0.0
    for _, rng, a, b in _pairs(cfg, "suite-doi-dd"):
        pair = doi.SpectralPair(eig_hermitian(a), eig_hermitian(b))
        sym = doi.divided_difference_symbol(pair, lambda x: x**2, lambda x: 2 * x)
        lhs = doi.doi_apply(pair, sym, a - b)
        scale = max(np.abs(a @ a - b @ b).max(), 1.0)
        worst = max(worst, np.abs(lhs - (a @ a - b @ b)).max() / scale)
    return _bounded("doi.divided_difference_maps_difference", worst, 1e-9,
                    note="f(A)-f(B) = DOI(phi_f)(A-B) for f = x^2, relative")


def check_doi_hs_norm(cfg):
    worst = 0.0
    trials = max(2, cfg.trials // 4)
    for trial in range(trials):
        rng = substream(cfg.seed, "suite-doi-hs", trial)
        dim = min(cfg.dims[trial % len(cfg.dims)], 8)
        pair = doi.SpectralPair(eig_hermitian(random_hermitian(rng, dim)),
                                eig_hermitian(random_hermitian(rng, dim)))
        sym = doi.SymbolGrid(values=random_complex(rng, (dim, dim)),
                             left_nodes=pair.left.eigenvalues,
                             right_nodes=pair.right.eigenvalues)
        claimed = doi.hs_multiplier_norm(pair, sym)
        x = random_complex(rng, (dim, dim))
        conj_sym = doi.SymbolGrid(values=np.conj(sym.values), left_nodes=sym.left_nodes,
                                  right_nodes=sym.right_nodes)
        est = 0.0
        for _ in range(4000):
            y = doi.doi_apply(pair, conj_sym, doi.doi_apply(pair, sym, x))
            est_new = np.sqrt(abs(np.vdot(x, y)) / abs(np.vdot(x, x)))
            x = y / np.linalg.norm(y)
            if abs(est_new - est) <= 1e-14 * max(1.0, est_new):
                est = est_new
                break
            est = est_new
        worst = max(worst, abs(claimed - est))
    return _bounded("doi.hs_norm_equals_power_iteration", worst, cfg.tolerance("quadrature"))


def check_doi_fourier_cross_route(cfg):
    rng = substream(cfg.seed, "suite-doi-fourier")
    dim = min(max(cfg.dims), 6)
    a, b = random_hermitian(rng, dim), random_hermitian(rng, dim)
    pair = doi.SpectralPair(eig_hermitian(a), eig_hermitian(b))
    t = random_complex(rng, (dim, dim))
    quad = trapezoid_rule(cfg.quad_half_width or 40.0, cfg.quad_nodes or 4000)
    via_time = doi.doi_fourier(pair, lambda s: np.exp(-np.abs(s)), t, quad)
    sym = doi.symbol_from_function(pair, lambda lam, mu: 2.0 / (1.0 + (lam - mu) ** 2) + 0j)
    err = np.abs(via_time - doi.doi_apply(pair, sym, t)).max()
    return _bounded("doi.fourier_route_matches_symbol_route", err, 1e-3,
                    note="default 4000-node trapezoid; kink-limited O(h^2) ~ 1e-4")


def check_doi_fourier_norm_mass(cfg):
    quad = trapezoid_rule(40.0, 2000)
    worst = 0.0
    for _, rng, a, b in _pairs(cfg, "suite-doi-mass"):
        pair = doi.SpectralPair(eig_hermitian(a), eig_hermitian(b))
        t = random_complex(rng, (pair.dim, pair.dim))
        t /= operator_norm(t)
        out = doi.doi_fourier(pair, lambda s: np.exp(-np.abs(s)), t, quad)
        worst = max(worst, operator_norm(out) - 2.0)
    return _bounded("doi.fourier_transformer_within_l1_mass", worst, 1e-3,
                    note="slack covers the quadrature's own l1 mass error")


def check_peller_bound(cfg):
    worst = -np.inf
    for _, rng, a, b in _pairs(cfg, "suite-peller"):
        pair = doi.SpectralPair(eig_hermitian(a), eig_hermitian(b))
        k = int(rng.integers(1, 4))
        d = doi.Decomposition(alphas=random_complex(rng, (k, pair.dim)),
                              betas=random_complex(rng, (k, pair.dim)),
                              weights=rng.uniform(0.1, 2.0, k))
        sym = doi.symbol_from_decomposition(pair, d)
        bound = doi.peller_bound(d)
        t = random_complex(rng, (pair.dim, pair.dim))
        t /= trace_norm(t)
        sampled = trace_norm(doi.doi_apply(pair, sym, t))
        worst = max(worst, sampled - bound)
    return _bounded("doi.peller_bound_dominates_sampled_c1", worst, cfg.tolerance("algebraic"))


def check_triangular_truncation(cfg):
    worst = 0.0
    for dim in cfg.dims:
        if dim < 2:
            continue
        pair = doi.SpectralPair(eig_hermitian(np.diag(np.arange(1.0, dim + 1))),
                                eig_hermitian(np.diag(np.arange(1.0, dim + 1))))
        sym = doi.triangular_truncation_symbol(pair)
        worst = max(worst, abs(doi.hs_multiplier_norm(pair, sym) - 1.0))
        rng = substream(cfg.seed, "suite-tri", dim)
        t = random_complex(rng, (dim, dim))
        once = doi.triangular_truncation(pair, t)
        worst = max(worst, np.abs(doi.triangular_truncation(pair, once) - once).max())
    return _bounded("doi.triangular_truncation_idempotent_norm_one", worst,
                    cfg.tolerance("algebraic"))


def check_sylvester_cross_oracle(cfg):
    worst = 0.0
    for trial in range(cfg.trials):
        rng = substream(cfg.seed, "suite-sylv", trial)
        dim = min(cfg.dims[trial % len(cfg.dims)], 6)
        a = random_hermitian(rng, dim) + 4.0 * np.eye(dim)
        b = random_hermitian(rng, dim) - 4.0 * np.eye(dim)
        y = random_complex(rng, (dim, dim))
        x_doi, report = sylvester.solve_gap(a, b, y)
        x_kron = sylvester.kron_oracle(a, b, y)
        worst = max(worst, np.abs(x_doi - x_kron).max())
        if report.residual > 1e-9 or report.x_norm > report.bound * (1 + 1e-12):
            worst = np.inf
    return _bounded("sylvester.doi_matches_kron_and_certificate", worst, 1e-8)


def check_sylvester_bound_all_p(cfg):
    worst = 0.0
    for trial in range(cfg.trials):
        rng = substream(cfg.seed, "suite-sylvp", trial)
        dim = min(cfg.dims[trial % len(cfg.dims)], 6)
        a = random_hermitian(rng, dim) + 3.5 * np.eye(dim)
        b = random_hermitian(rng, dim) - 3.5 * np.eye(dim)
        y = random_complex(rng, (dim, dim))
        for p in (1, 2, np.inf):
            _, report = sylvester.solve_gap(a, b, y, p)
            worst = max(worst, report.x_norm - report.bound)
    return _bounded("sylvester.pi_over_two_delta_bound", worst, cfg.tolerance("algebraic"))


def check_trace_formula(cfg):
    worst = 0.0
    for trial, rng, a, b in _pairs(cfg, "suite-trace"):
        mu = shift.AtomicMeasure(points=rng.uniform(0.3, 2.5, 3) * rng.choice([-1, 1], 3),
                                 weights=rng.uniform(0.2, 1.5, 3))
        f, _ = shift.admissible_f(mu)
        res = shift.trace_formula_check(a, b, f)
        worst = max(worst, res.gap / (1.0 + abs(res.lhs)))
    return _bounded("shift.krein_trace_formula", worst, 1e-9)


def check_shift_properties(cfg):
    worst = 0.0
    for trial, rng, a, b in _pairs(cfg, "suite-props"):
        xi = shift.xi_counting(a, b)
        worst = max(worst, abs(xi.integral() - np.trace(a - b).real))
        worst = max(worst, xi.l1() - trace_norm(a - b))
        g = random_complex(rng, a.shape)
        a_pos = b + g @ g.conj().T
        xi_pos = shift.xi_counting(a_pos, b)
        if not xi_pos.is_zero and xi_pos.values.min() < 0:
            worst = np.inf
        sup = xi.support()
        if sup is not None:
            wa = eig_hermitian(a).eigenvalues
            wb = eig_hermitian(b).eigenvalues
            worst = max(worst, min(wa.min(), wb.min()) - sup[0])
            worst = max(worst, sup[1] - max(wa.max(), wb.max()))
    return _bounded("shift.properties_a_to_d", worst, cfg.tolerance("algebraic"))


def check_route_agreement(cfg):
    a = np.array([[1.0]])
    b = np.array([[0.0]])
    grid = cfg.grid_array()
    eps = cfg.epsilon
    evs = np.array([0.0, 1.0])
    keep = np.abs(grid[:, None] - evs[None, :]).min(axis=1) >= 2 * cfg.tolerance("boundary")
    grid = grid[keep]
    truth = shift.xi_counting(a, b)(grid)
    arc = shift.xi_arctan(a, b, eps, grid).ordinates
    half_width = max(200.0, 6.0 / eps)
    nodes = cfg.quad_nodes or 2 * int(half_width / 0.025)  # ~0.025 node spacing
    fou = shift.xi_fourier(a, b, eps, grid, symmetric_open_rule(half_width, nodes)).ordinates
    err = max(np.abs(arc - truth).max(), np.abs(fou - truth).max())
    return _bounded("shift.route_agreement_canonical_pair", err, cfg.tolerance("boundary"),
                    note=f"epsilon={eps}, grid points >= 2x boundary tol from eigenvalues")


def check_rank_one_route(cfg):
    rng = substream(cfg.seed, "suite-rank1")
    dim = min(max(cfg.dims), 6)
    b = random_hermitian(rng, dim)
    w = random_unit_vector(rng, dim)
    alpha = float(rng.uniform(0.3, 2.0))
    a = b + alpha * np.outer(w, w.conj())
    evs = np.concatenate([eig_hermitian(a).eigenvalues, eig_hermitian(b).eigenvalues])
    grid = np.linspace(evs.min() - 1, evs.max() + 1, 60)
    grid = grid[np.abs(grid[:, None] - evs[None, :]).min(axis=1) >= cfg.tolerance("boundary")]
    curve = shift.xi_rank_one(b, w, alpha, grid, eta=cfg.eta)
    truth = shift.xi_counting(a, b)(grid)
    return _bounded("shift.rank_one_argument_route", np.abs(curve.ordinates - truth).max(),
                    cfg.tolerance("boundary"))


def check_resolvent_identity(cfg):
    worst = 0.0
    for _, rng, a, b in _pairs(cfg, "suite-resolvent"):
        worst = max(worst, shift.resolvent_identity_check(a, b, 0.3 + 0.7j))
    return _bounded("shift.resolvent_trace_identity", worst, 1e-12)


def check_arctan_representation(cfg):
    worst = max(shift.arctan_rep_check(t) for t in (-2.0, -1.0, 0.0, 1.0, 2.0))
    return _bounded("shift.arctan_kernel_representation", worst, cfg.tolerance("quadrature"))


def check_quantize_localization(cfg):
    worst = 0.0
    n = min(cfg.n, 8)
    space = quantization.cycle_space(n)
    for trial in range(cfg.trials):
        rng = substream(cfg.seed, "suite-qloc", trial)
        sigma = random_complex(rng, (n, n))
        e = np.flatnonzero(rng.random(n) < 0.5)
        f = np.flatnonzero(rng.random(n) < 0.5)
        cut = sigma * np.outer(np.isin(np.arange(n), e), np.isin(np.arange(n), f))
        lhs = (quantization.position_projector(space, e) @ quantization.quantize(space, sigma)
               @ quantization.momentum_projector(space, f))
        worst = max(worst, np.abs(quantization.quantize(space, cut) - lhs).max())
    return _bounded("quantization.localization_identity", worst, cfg.tolerance("algebraic"))


def check_quantize_product_symbol(cfg):
    worst = 0.0
    for trial in range(cfg.trials):
        rng = substream(cfg.seed, "suite-qprod", trial)
        n = cfg.dims[trial % len(cfg.dims)]
        space = quantization.cycle_space(n)
        fvec, gvec = random_complex(rng, n), random_complex(rng, n)
        lhs = quantization.quantize(space, np.outer(fvec, gvec))
        rhs = np.diag(fvec) @ space.dft.conj().T @ np.diag(gvec) @ space.dft
        worst = max(worst, np.abs(lhs - rhs).max())
    return _bounded("quantization.product_symbol_factorizes", worst, 1e-12)


def check_cotlar_certificate(cfg):
    worst = -np.inf
    trials = max(2, cfg.trials // 2)
    for trial in range(trials):
        rng = substream(cfg.seed, "suite-cotlar", trial)
        n = int(rng.choice([4, 8]))
        k = int(rng.integers(1, 5))
        terms = [(random_complex(rng, n), random_complex(rng, n)) for _ in range(k)]
        report = quantization.cotlar_stein_bound(quantization.cycle_space(n), terms)
        worst = max(worst, report.actual - report.bound * (1 + 1e-9))
    return _bounded("quantization.cotlar_stein_certificate", worst, 0.0,
                    note="actual norm never exceeds the certified M")


def check_bimeasure_structure(cfg):
    worst = 0.0
    for trial in range(cfg.trials):
        rng = substream(cfg.seed, "suite-bim", trial)
        n = 6
        phi = random_complex(rng, n)
        b = quantization.SequenceBimeasure(phi / np.linalg.norm(phi))
        e1, e2, f = [1, 3], [4, 6], [2, 5]
        lhs = quantization.bimeasure_eval(b, e1 + e2, f)
        rhs = quantization.bimeasure_eval(b, e1, f) + quantization.bimeasure_eval(b, e2, f)
        worst = max(worst, abs(lhs - rhs))
        k = int(rng.integers(1, 4))
        d = doi.Decomposition(alphas=random_complex(rng, (k, n)),
                              betas=random_complex(rng, (k, n)),
                              weights=rng.uniform(0.1, 2.0, k))
        psi = np.einsum("t,ti,tj->ij", d.weights.astype(complex), d.alphas, d.betas)
        worst = max(worst, abs(quantization.bimeasure_integrate(b, d)
                               - quantization.bimeasure_integrate_grid(b, psi)))
        worst = max(worst, abs(quantization.semivariation(b) - b.l1_norm() ** 2))
    return _bounded("quantization.bimeasure_additivity_and_representation", worst,
                    cfg.tolerance("algebraic"))


def check_polymeasure(cfg):
    worst = 0.0
    for trial in range(max(2, cfg.trials // 4)):
        rng = substream(cfg.seed, "suite-poly", trial)
        dim = cfg.dims[trial % len(cfg.dims)]
        h = random_hermitian(rng, dim)
        f0, f2 = random_complex(rng, dim), random_complex(rng, dim)
        e = (rng.random(dim) < 0.5).astype(complex)
        e_prime = 1.0 - e
        times = [0.6, 1.4]
        combined = quantization.polymeasure_eval([f0, e + e_prime, f2], times, h)
        split = (quantization.polymeasure_eval([f0, e, f2], times, h)
                 + quantization.polymeasure_eval([f0, e_prime, f2], times, h))
        worst = max(worst, np.abs(combined - split).max())
        ones = np.ones(dim)
        direct = quantization.polymeasure_eval([f0, f2], [1.7], h)
        threaded = quantization.polymeasure_eval([f0, ones, f2], [0.5, 1.7], h)
        worst = max(worst, np.abs(threaded - direct).max())
    return _bounded("quantization.polymeasure_additivity_and_concatenation", worst,
                    cfg.tolerance("algebraic"))


SUITE_CHECKS = [
    check_eig_reconstruction,
    check_schatten_monotone,
    check_hoelder_duality,
    check_dft_order_four,
    check_apply_function_additive,
    check_doi_identity_transformer,
    check_doi_localization,
    check_doi_divided_difference,
    check_doi_hs_norm,
    check_doi_fourier_cross_route,
    check_doi_fourier_norm_mass,
    check_peller_bound,
    check_triangular_truncation,
    check_sylvester_cross_oracle,
    check_sylvester_bound_all_p,
    check_trace_formula,
    check_shift_properties,
    check_route_agreement,
    check_rank_one_route,
    check_resolvent_identity,
    check_arctan_representation,
    check_quantize_localization,
    check_quantize_product_symbol,
    check_cotlar_certificate,
    check_bimeasure_structure,
    check_polymeasure,
]


def run_suite(cfg: ScenarioConfig) -> Report:
    checks = [fn(cfg) for fn in SUITE_CHECKS]
    return Report(command="suite", config=cfg.to_json_dict(), checks=checks)
