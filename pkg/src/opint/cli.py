"""Command-line scenario runner.

    opint --command suite --dims 2,4,6,8 --seed 42 --out results/

Commands: shift, doi, sylvester, quantize, cotlar, peller, suite.  A JSON
config (--config) provides the same keys as the flags; flags win.  Exit
codes: 0 all checks passed, 1 a check failed, 2 usage error, 3 I/O error.
Reports are byte-identical for identical (config, seed); timing goes to
stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import doi, quantization, shift, suite as suite_mod, sylvester
from .errors import ConfigError, IllPosedError, InputDomainError
from .linalg import eig_hermitian, load_matrix, operator_norm
from .quadrature import symmetric_open_rule
from .rng import random_complex, random_hermitian, random_unit_vector, substream
from .suite import CheckRecord, Report, ScenarioConfig

F_PRESETS = {
    "identity": (lambda x: np.asarray(x, dtype=complex), 1.0),
    "arctan": (np.arctan, 1.0),
    "abs": (np.abs, 1.0),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="opint", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--command", choices=suite_mod.COMMANDS, default=None)
    p.add_argument("--config", type=Path, default=None, help="JSON config file")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", type=Path, default=None, help="output directory")
    p.add_argument("--dims", type=str, default=None, help="comma-separated dimensions")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--route", choices=("counting", "arctan", "fourier", "rank1"), default=None)
    p.add_argument("--eps", type=float, default=None, dest="epsilon")
    p.add_argument("--eta", type=float, default=None)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--extrapolated", action="store_true", default=None)
    p.add_argument("--grid", type=str, default=None, help="min:max:count")
    p.add_argument("--quad-half-width", type=float, default=None, dest="quad_half_width")
    p.add_argument("--quad-nodes", type=int, default=None, dest="quad_nodes")
    p.add_argument("--p", type=str, default=None, help="Schatten index (number or 'inf')")
    p.add_argument("--f", choices=sorted(F_PRESETS), default=None)
    p.add_argument("--n", type=int, default=None, help="cycle-space size")
    p.add_argument("--terms", type=int, default=None, help="decomposition size")
    p.add_argument("--a", type=Path, default=None, help="matrix JSON for A")
    p.add_argument("--b", type=Path, default=None, help="matrix JSON for B")
    p.add_argument("--y", type=Path, default=None, help="matrix JSON for Y")
    return p


def _resolve_config(args) -> ScenarioConfig:
    raw = {}
    if args.config is not None:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                raw = json.load(fh)
        except OSError as exc:
            raise OSError(f"cannot read config {args.config}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config: invalid JSON ({exc})") from exc
        if not isinstance(raw, dict):
            raise ConfigError("config: top level must be a JSON object")
    overrides = {
        "command": args.command,
        "seed": args.seed,
        "trials": args.trials,
        "route": args.route,
        "epsilon": args.epsilon,
        "eta": args.eta,
        "alpha": args.alpha,
        "extrapolated": args.extrapolated,
        "grid": args.grid,
        "quad_half_width": args.quad_half_width,
        "quad_nodes": args.quad_nodes,
        "f": args.f,
        "n": args.n,
        "terms": args.terms,
    }
    if args.dims is not None:
        overrides["dims"] = [int(d) for d in args.dims.split(",") if d]
    if args.p is not None:
        overrides["p"] = float("inf") if args.p == "inf" else float(args.p)
    inputs = dict(raw.get("inputs", {}))
    for key, value in (("a", args.a), ("b", args.b), ("y", args.y)):
        if value is not None:
            inputs[key] = str(value)
    if inputs:
        overrides["inputs"] = inputs
    cfg = ScenarioConfig.from_dict(raw, overrides)
    if cfg.command is None:
        raise ConfigError("command: required (flag --command or config key)")
    for key, path in cfg.inputs.items():
        if not Path(path).exists():
            raise OSError(f"input {key}: file not found: {path}")
    return cfg


def _load_pair(cfg: ScenarioConfig, tag: str):
    dim = max(cfg.dims)
    if "a" in cfg.inputs:
        a = load_matrix(cfg.inputs["a"], hermitian=True)
    else:
        a = random_hermitian(substream(cfg.seed, tag + "-A"), dim)
    if "b" in cfg.inputs:
        b = load_matrix(cfg.inputs["b"], hermitian=True)
    else:
        b = random_hermitian(substream(cfg.seed, tag + "-B"), dim)
    return a, b


def run_shift(cfg: ScenarioConfig) -> Report:
    a, b = _load_pair(cfg, "cli-shift")
    grid = cfg.grid_array()
    xi_exact = shift.xi_counting(a, b)
    truth = xi_exact(grid)
    if cfg.route == "counting":
        curve = shift.SampledCurve(abscissae=grid, ordinates=truth.astype(float))
    elif cfg.route == "arctan":
        maker = shift.xi_arctan_extrapolated if cfg.extrapolated else shift.xi_arctan
        curve = maker(a, b, cfg.epsilon, grid)
    elif cfg.route == "fourier":
        half_width = cfg.quad_half_width or shift.DEFAULT_FOURIER_QUAD[0]
        nodes = cfg.quad_nodes or shift.DEFAULT_FOURIER_QUAD[1]
        curve = shift.xi_fourier(a, b, cfg.epsilon, grid,
                                 symmetric_open_rule(half_width, nodes))
    else:  # rank1: treat A as B + alpha w w* with a seeded unit vector
        w = random_unit_vector(substream(cfg.seed, "cli-shift-w"), b.shape[0])
        a = b + cfg.alpha * np.outer(w, w.conj())
        xi_exact = shift.xi_counting(a, b)
        truth = xi_exact(grid)
        curve = shift.xi_rank_one(b, w, cfg.alpha, grid, eta=cfg.eta)

    checks = []
    wa = eig_hermitian(a).eigenvalues
    wb = eig_hermitian(b).eigenvalues
    from .linalg import trace_norm
    checks.append(CheckRecord(
        name="property_a_trace_equals_integral",
        expected=float(np.trace(a - b).real), observed=xi_exact.integral(),
        tolerance=cfg.tolerance("algebraic"),
        passed=bool(abs(xi_exact.integral() - np.trace(a - b).real)
                    <= cfg.tolerance("algebraic"))))
    l1_bound = trace_norm(a - b)
    checks.append(CheckRecord(
        name="property_b_l1_bounded_by_trace_norm",
        expected=l1_bound, observed=xi_exact.l1(), tolerance=cfg.tolerance("algebraic"),
        passed=bool(xi_exact.l1() <= l1_bound + cfg.tolerance("algebraic"))))
    diff_eigs = eig_hermitian(a - b).eigenvalues
    if diff_eigs.min() >= -1e-12:
        nonneg = xi_exact.is_zero or xi_exact.values.min() >= 0
        checks.append(CheckRecord(name="property_c_monotone_pair_nonnegative",
                                  expected=0.0, observed=0.0 if nonneg else -1.0,
                                  tolerance=0.0, passed=bool(nonneg)))
    sup = xi_exact.support()
    inside = True
    if sup is not None:
        lo = min(wa.min(), wb.min()) - 1e-12
        hi = max(wa.max(), wb.max()) + 1e-12
        inside = lo <= sup[0] and sup[1] <= hi
    checks.append(CheckRecord(name="property_d_support_inside_joint_interval",
                              expected=0.0, observed=0.0 if inside else -1.0,
                              tolerance=0.0, passed=bool(inside)))
    evs = np.concatenate([wa, wb])
    keep = np.abs(grid[:, None] - evs[None, :]).min(axis=1) >= 0.1
    if cfg.route != "counting" and keep.any():
        err = float(np.abs(curve.ordinates[keep] - truth[keep]).max())
        checks.append(CheckRecord(name="route_agreement_vs_counting",
                                  expected=0.0, observed=err,
                                  tolerance=cfg.tolerance("boundary"),
                                  passed=bool(err <= cfg.tolerance("boundary"))))
    report = Report(command="shift", config=cfg.to_json_dict(), checks=checks)
    report.extras["curve_csv"] = curve.to_csv()
    return report


def run_doi(cfg: ScenarioConfig) -> Report:
    f, lip = F_PRESETS[cfg.f]
    p = cfg.p if 1 < cfg.p < float("inf") else 4.0
    exp = doi.lipschitz_ratio_experiment(f, lip, p=p, trials=cfg.trials, seed=cfg.seed,
                                         dim=max(cfg.dims), f_name=cfg.f)
    ok = bool(np.isfinite(exp.max_ratio))
    if cfg.f == "identity":
        ok = ok and abs(exp.max_ratio - 1.0) <= 1e-9
    checks = [CheckRecord(name="lipschitz_ratio_finite", expected=float(lip),
                          observed=exp.max_ratio, tolerance=0.0, passed=ok,
                          note="observed max ratio; no exact constant is known for general p")]
    report = Report(command="doi", config=cfg.to_json_dict(), checks=checks)
    report.extras["experiment"] = json.loads(exp.to_json())
    return report


def run_sylvester(cfg: ScenarioConfig) -> Report:
    a, b = _load_pair(cfg, "cli-sylvester")
    if "a" not in cfg.inputs:
        dim = max(cfg.dims)
        a = a + 4.0 * np.eye(dim)
        b = b - 4.0 * np.eye(dim)
    if "y" in cfg.inputs:
        y = load_matrix(cfg.inputs["y"])
    else:
        y = random_complex(substream(cfg.seed, "cli-sylvester-Y"), a.shape)
    x, gap_report = sylvester.solve_gap(a, b, y, cfg.p)
    x_kron = sylvester.kron_oracle(a, b, y)
    cross = float(np.abs(x - x_kron).max())
    checks = [
        CheckRecord(name="residual_small", expected=0.0, observed=gap_report.residual,
                    tolerance=1e-9, passed=bool(gap_report.residual <= 1e-9)),
        CheckRecord(name="pi_over_two_delta_bound", expected=gap_report.bound,
                    observed=gap_report.x_norm, tolerance=gap_report.bound,
                    passed=bool(gap_report.x_norm <= gap_report.bound * (1 + 1e-12))),
        CheckRecord(name="kron_oracle_agreement", expected=0.0, observed=cross,
                    tolerance=1e-8, passed=bool(cross <= 1e-8)),
    ]
    report = Report(command="sylvester", config=cfg.to_json_dict(), checks=checks)
    report.extras["gap_report"] = gap_report.to_json_dict()
    return report


def _load_symbol(cfg: ScenarioConfig, n: int) -> np.ndarray:
    if "symbol" in cfg.inputs:
        rows = []
        with open(cfg.inputs["symbol"], "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    rows.append([complex(cell) for cell in line.split(",")])
        sigma = np.asarray(rows, dtype=complex)
        if sigma.shape != (n, n):
            raise InputDomainError(f"symbol CSV must be {n}x{n}, got {sigma.shape}")
        return sigma
    return random_complex(substream(cfg.seed, "cli-symbol"), (n, n))


def run_quantize(cfg: ScenarioConfig) -> Report:
    space = quantization.cycle_space(cfg.n)
    sigma = _load_symbol(cfg, cfg.n)
    m = quantization.quantize(space, sigma)
    norm_value = operator_norm(m)
    search = quantization.qp_norm_upper_bound(space, sigma, trials=min(cfg.trials, 8),
                                              seed=cfg.seed)
    checks = [CheckRecord(name="upper_bound_dominates_norm", expected=search["upper_bound"],
                          observed=norm_value, tolerance=search["upper_bound"],
                          passed=bool(norm_value <= search["upper_bound"] + 1e-9))]
    report = Report(command="quantize", config=cfg.to_json_dict(), checks=checks)
    report.extras["quantize_report"] = {"norm_value": norm_value,
                                        "decomposition_size": cfg.n,
                                        "upper_bound_search": search}
    return report


def run_cotlar(cfg: ScenarioConfig) -> Report:
    space = quantization.cycle_space(cfg.n)
    rng = substream(cfg.seed, "cli-cotlar")
    terms = [(random_complex(rng, cfg.n), random_complex(rng, cfg.n))
             for _ in range(cfg.terms)]
    rep = quantization.cotlar_stein_bound(space, terms)
    checks = [CheckRecord(name="certificate_holds", expected=rep.bound, observed=rep.actual,
                          tolerance=rep.bound, passed=rep.holds)]
    report = Report(command="cotlar", config=cfg.to_json_dict(), checks=checks)
    report.extras["cotlar_report"] = rep.to_json_dict()
    return report


def run_peller(cfg: ScenarioConfig) -> Report:
    rng = substream(cfg.seed, "cli-peller")
    dim = max(cfg.dims)
    a, b = random_hermitian(rng, dim), random_hermitian(rng, dim)
    pair = doi.make_spectral_pair(a, b)
    d = doi.Decomposition(alphas=random_complex(rng, (cfg.terms, dim)),
                          betas=random_complex(rng, (cfg.terms, dim)),
                          weights=rng.uniform(0.1, 2.0, cfg.terms))
    sym = doi.symbol_from_decomposition(pair, d)
    bound = doi.peller_bound(d)
    sampled = doi.sampled_transformer_norm(pair, sym, 1, trials=cfg.trials, seed=cfg.seed,
                                           tag="cli-peller-norm")
    checks = [CheckRecord(name="peller_bound_dominates_sampled_c1", expected=bound,
                          observed=sampled, tolerance=bound,
                          passed=bool(sampled <= bound * (1 + 1e-10)))]
    report = Report(command="peller", config=cfg.to_json_dict(), checks=checks)
    report.extras["peller_report"] = {
        "peller_bound": bound,
        "grothendieck_norm": quantization.grothendieck_norm(d),
        "sampled_lower_bound": sampled,
        "decomposition_size": cfg.terms,
        "label": "sampled lower bound (random search over the unit ball)"}
    return report


RUNNERS = {
    "suite": suite_mod.run_suite,
    "shift": run_shift,
    "doi": run_doi,
    "sylvester": run_sylvester,
    "quantize": run_quantize,
    "cotlar": run_cotlar,
    "peller": run_peller,
}


def run(cfg: ScenarioConfig) -> Report:
    return RUNNERS[cfg.command](cfg)


def emit_report(report: Report, out_dir) -> Path:
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        report_path = out / f"{report.command}_report.json"
        payload = report.to_json()
        curve = report.extras.pop("curve_csv", None)
        if curve is not None:
            (out / "curve.csv").write_text(curve, encoding="utf-8")
            report.extras["curve_csv_file"] = "curve.csv"
            payload = report.to_json()
        report_path.write_text(payload, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write report under {out}: {exc}") from exc
    return report_path


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    started = time.perf_counter()
    try:
        cfg = _resolve_config(args)
        report = run(cfg)
    except (ConfigError, InputDomainError, IllPosedError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 3
    elapsed = time.perf_counter() - started
    try:
        if args.out is not None:
            path = emit_report(report, args.out)
            print(f"report written to {path}", file=sys.stderr)
        else:
            sys.stdout.write(report.to_json())
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 3
    failed = [c.name for c in report.checks if not c.passed]
    print(f"{report.command}: {len(report.checks) - len(failed)}/{len(report.checks)} "
          f"checks passed in {elapsed:.2f}s", file=sys.stderr)
    if failed:
        print("failed checks: " + ", ".join(failed), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
