import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opint import errors, shift
from opint.linalg import eig_hermitian, schatten_norm, trace_norm
from opint.quadrature import symmetric_open_rule, trapezoid_rule
from opint.rng import random_complex, random_hermitian, random_unit_vector, substream


def seeded_pair(seed, dim, trial=0, tag="shift-pair"):
    rng = substream(seed, tag, trial)
    return random_hermitian(rng, dim), random_hermitian(rng, dim)


def seeded_measure(seed, trial=0, atoms=3):
    rng = substream(seed, "shift-measure", trial)
    pts = rng.uniform(0.3, 3.0, atoms) * rng.choice([-1.0, 1.0], atoms)
    return shift.AtomicMeasure(points=pts, weights=rng.uniform(0.2, 1.5, atoms))


# ---------------------------------------------------------------- counting


def test_xi_counting_equal_pair_is_zero():
    h = random_hermitian(substream(1, "shift-eq"), 4)
    xi = shift.xi_counting(h, h)
    assert xi.is_zero
    assert xi.integral() == 0.0


def test_xi_counting_scalar_interval():
    xi = shift.xi_counting(np.array([[1.0]]), np.array([[0.0]]))
    np.testing.assert_allclose(xi.breakpoints, [0.0, 1.0], atol=0)
    np.testing.assert_allclose(xi.values, [1], atol=0)
    assert xi(np.array([0.5]))[0] == 1
    assert xi(np.array([-0.1]))[0] == 0
    assert xi(np.array([1.0]))[0] == 0


def test_xi_counting_integral_is_trace_difference():
    for trial in range(200):
        dim = 2 + trial % 5
        a, b = seeded_pair(2, dim, trial)
        xi = shift.xi_counting(a, b)
        assert abs(xi.integral() - np.trace(a - b).real) <= 1e-10


def test_xi_counting_l1_is_sorted_pairing_distance():
    for trial in range(50):
        dim = 3 + trial % 4
        a, b = seeded_pair(3, dim, trial)
        wa = eig_hermitian(a).eigenvalues
        wb = eig_hermitian(b).eigenvalues
        xi = shift.xi_counting(a, b)
        assert xi.l1() == pytest.approx(np.abs(wa - wb).sum(), abs=1e-9)
        assert xi.l1() <= trace_norm(a - b) + 1e-9


def test_xi_counting_positive_perturbation_nonnegative():
    for trial in range(50):
        rng = substream(4, "shift-pos", trial)
        dim = 2 + trial % 5
        b = random_hermitian(rng, dim)
        g = random_complex(rng, (dim, dim))
        a = b + g @ g.conj().T  # PSD bump, so B <= A
        xi = shift.xi_counting(a, b)
        assert (xi.values >= 0).all()


def test_xi_counting_support_inside_joint_interval():
    for trial in range(50):
        dim = 2 + trial % 5
        a, b = seeded_pair(5, dim, trial)
        xi = shift.xi_counting(a, b)
        wa = eig_hermitian(a).eigenvalues
        wb = eig_hermitian(b).eigenvalues
        lo, hi = xi.support()
        assert lo >= min(wa.min(), wb.min()) - 1e-12
        assert hi <= max(wa.max(), wb.max()) + 1e-12


def test_shift_function_rejects_bad_data():
    with pytest.raises(errors.InputDomainError):
        shift.ShiftFunction(breakpoints=[0.0, 1.0], values=[1, 2])
    with pytest.raises(errors.InputDomainError):
        shift.ShiftFunction(breakpoints=[1.0, 0.0], values=[1])
    with pytest.raises(errors.InputDomainError):
        shift.ShiftFunction(breakpoints=[0.0, 1.0], values=[0.5])


def test_shift_function_l1_distance():
    f = shift.ShiftFunction(breakpoints=[0.0, 1.0], values=[1])
    g = shift.ShiftFunction(breakpoints=[0.5, 2.0], values=[2])
    # |f-g| is 1 on [0, .5), 1 on [.5, 1), 2 on [1, 2)
    assert f.l1_distance(g) == pytest.approx(3.0, abs=1e-12)
    assert f.l1_distance(f) == 0.0


# ---------------------------------------------------------------- arctan route


def test_xi_arctan_equal_pair_zero():
    h = random_hermitian(substream(6, "shift-arceq"), 3)
    curve = shift.xi_arctan(h, h, 1e-2, np.linspace(-2, 2, 11))
    np.testing.assert_allclose(curve.ordinates, 0.0, atol=1e-13)


def test_xi_arctan_scalar_sharp_limit():
    curve = shift.xi_arctan(np.array([[1.0]]), np.array([[0.0]]), 1e-3, np.array([0.5]))
    expected = (np.arctan(500.0) - np.arctan(-500.0)) / np.pi
    assert curve.ordinates[0] == pytest.approx(expected, abs=1e-15)
    assert abs(curve.ordinates[0] - 1.0) <= 2e-3


def test_xi_arctan_trace_bound():
    for trial in range(100):
        rng = substream(7, "shift-arcbound", trial)
        dim = 2 + trial % 4
        a, b = seeded_pair(7, dim, trial)
        eps = float(rng.uniform(0.01, 0.5))
        s = float(rng.uniform(-3, 3))
        val = shift.xi_arctan(a, b, eps, np.array([s])).ordinates[0]
        assert abs(val) <= trace_norm(a - b) / (np.pi * eps) + 1e-12


def test_harmonic_h_equals_arctan_route():
    a, b = seeded_pair(8, 4)
    val = shift.harmonic_h(a, b, 0.3, 0.05)
    curve = shift.xi_arctan(a, b, 0.05, np.array([0.3]))
    assert val == pytest.approx(curve.ordinates[0], abs=1e-14)


def test_harmonic_h_large_y_integral_limit():
    for trial in range(20):
        dim = 2 + trial % 4
        a, b = seeded_pair(9, dim, trial)
        scale = max(np.abs(eig_hermitian(a).eigenvalues).max(),
                    np.abs(eig_hermitian(b).eigenvalues).max(), 1e-9)
        xi_int = shift.xi_counting(a, b).integral()
        rng = substream(9, "shift-largey", trial)
        x = float(rng.uniform(-scale, scale))
        for y in (100.0 * scale, 300.0 * scale):
            h = shift.harmonic_h(a, b, x, y)
            assert abs(np.pi * y * h - xi_int) <= 10.0 * scale**2 / y


def test_harmonic_h_rank_one_in_unit_interval():
    for trial in range(50):
        rng = substream(10, "shift-h01", trial)
        dim = 2 + trial % 5
        b = random_hermitian(rng, dim)
        w = random_unit_vector(rng, dim)
        alpha = float(rng.uniform(0.2, 3.0))
        a = b + alpha * np.outer(w, w.conj())
        x = float(rng.uniform(-4, 4))
        y = float(rng.uniform(0.05, 5.0))
        h = shift.harmonic_h(a, b, x, y)
        assert 0.0 < h < 1.0


def test_harmonic_h_rejects_bad_y():
    with pytest.raises(errors.InputDomainError):
        shift.harmonic_h(np.eye(2), np.eye(2), 0.0, 0.0)


def test_harmonic_h_five_point_laplacian_quartic_decay():
    a, b = seeded_pair(11, 4)
    centers = [(x, y) for x in np.linspace(-1.5, 1.5, 5) for y in (1.0, 1.6)]

    def residual_sum(dg):
        tot = 0.0
        for x, y in centers:
            stencil = (shift.harmonic_h(a, b, x + dg, y) + shift.harmonic_h(a, b, x - dg, y)
                       + shift.harmonic_h(a, b, x, y + dg) + shift.harmonic_h(a, b, x, y - dg)
                       - 4.0 * shift.harmonic_h(a, b, x, y))
            tot += abs(stencil)
        return tot

    coarse = residual_sum(0.2)
    fine = residual_sum(0.1)
    assert coarse / fine == pytest.approx(16.0, rel=0.5)  # h^4 scaling of the raw stencil


def test_xi_arctan_extrapolated_beats_plain():
    a = np.array([[1.0]])
    b = np.array([[0.0]])
    grid = np.array([-0.4, 0.3, 0.62, 1.5])
    truth = shift.xi_counting(a, b)(grid)
    plain = shift.xi_arctan(a, b, 0.02, grid).ordinates
    extra = shift.xi_arctan_extrapolated(a, b, 0.02, grid).ordinates
    assert np.abs(extra - truth).max() < np.abs(plain - truth).max()


# ---------------------------------------------------------------- fourier route


def test_xi_fourier_equal_pair_zero():
    h = random_hermitian(substream(12, "shift-feq"), 3)
    curve = shift.xi_fourier(h, h, 0.01, np.linspace(-2, 2, 7))
    np.testing.assert_allclose(curve.ordinates, 0.0, atol=1e-12)


def test_xi_fourier_scalar_matches_counting():
    grid = np.array([-0.5, -0.15, 0.2, 0.5, 0.8, 1.15, 1.5])
    curve = shift.xi_fourier(np.array([[1.0]]), np.array([[0.0]]), 0.01, grid,
                             symmetric_open_rule(200.0, 8000))
    truth = np.array([0.0, 0.0, 1.0, 1.0, 1.0, 0.0, 0.0])
    assert np.abs(curve.ordinates - truth).max() <= 0.05


def test_xi_fourier_integrand_continuous_at_zero():
    a, b = seeded_pair(13, 3)
    limit = 1j * np.trace(a - b)
    val = shift.xi_fourier_integrand(a, b, s=0.7, epsilon=0.01, x=np.array([1e-6]))[0]
    assert abs(val - limit) <= 1e-4
    at_zero = shift.xi_fourier_integrand(a, b, s=0.7, epsilon=0.01, x=np.array([0.0]))[0]
    assert at_zero == pytest.approx(limit, abs=1e-14)


def test_xi_fourier_rejects_zero_node():
    with pytest.raises(errors.ConfigError, match="node at exactly 0"):
        shift.xi_fourier(np.eye(2), np.zeros((2, 2)), 0.01, np.array([0.0]),
                         trapezoid_rule(10.0, 21))  # odd count puts a node at 0


def test_xi_fourier_agrees_with_arctan_route():
    a, b = seeded_pair(14, 4)
    grid = np.linspace(-3, 3, 31)
    eps = 0.05
    arc = shift.xi_arctan(a, b, eps, grid).ordinates
    fou = shift.xi_fourier(a, b, eps, grid, symmetric_open_rule(400.0, 32000)).ordinates
    assert np.abs(arc - fou).max() <= 5e-4


# ---------------------------------------------------------------- rank one


def test_xi_rank_one_scalar_closed_form():
    curve = shift.xi_rank_one(np.array([[0.0]]), np.array([1.0 + 0j]), 1.0,
                              np.array([0.5]), eta=1e-9)
    assert curve.ordinates[0] == pytest.approx(1.0, abs=1e-6)


def test_xi_rank_one_matches_counting():
    for trial in range(30):
        rng = substream(15, "shift-r1", trial)
        dim = 4 + trial % 3
        b = random_hermitian(rng, dim)
        w = random_unit_vector(rng, dim)
        alpha = float(rng.uniform(0.3, 2.0))
        a = b + alpha * np.outer(w, w.conj())
        evs = np.concatenate([eig_hermitian(a).eigenvalues, eig_hermitian(b).eigenvalues])
        grid = np.linspace(evs.min() - 1, evs.max() + 1, 80)
        grid = grid[np.abs(grid[:, None] - evs[None, :]).min(axis=1) >= 0.05]
        curve = shift.xi_rank_one(b, w, alpha, grid, eta=1e-6)
        truth = shift.xi_counting(a, b)(grid)
        assert np.abs(curve.ordinates - truth).max() <= 0.05


def test_xi_rank_one_small_alpha_vanishes():
    rng = substream(16, "shift-r1a")
    b = random_hermitian(rng, 4)
    w = random_unit_vector(rng, 4)
    grid = np.linspace(-3, 3, 21)
    grid = grid[np.abs(grid[:, None] - eig_hermitian(b).eigenvalues[None, :]).min(axis=1) > 0.2]
    curve = shift.xi_rank_one(b, w, 1e-9, grid, eta=1e-4)
    assert np.abs(curve.ordinates).max() <= 1e-3


def test_xi_rank_one_validates_input():
    b = np.zeros((2, 2))
    with pytest.raises(errors.InputDomainError, match="unit"):
        shift.xi_rank_one(b, np.array([1.0, 1.0]), 1.0, np.array([0.0]))
    with pytest.raises(errors.InputDomainError, match="eta"):
        shift.xi_rank_one(b, np.array([1.0, 0.0]), 1.0, np.array([0.0]), eta=0.0)


def test_cauchy_transform_upper_half_plane():
    rng = substream(17, "shift-cauchy")
    b = random_hermitian(rng, 5)
    w = random_unit_vector(rng, 5)
    eb = eig_hermitian(b)
    for x in (-1.0, 0.3, 2.2):
        f = shift.rank_one_cauchy_transform(eb, w, x + 1e-3j)
        assert f.imag > 0  # Herglotz property


def test_unitary_scaffolding_rank_one_eigenvector():
    # U = I + 2iy (A - conj(z))^-1 (A-B) (B - z)^-1 has (A - conj(z))^-1 w
    # as an eigenvector with eigenvalue 1 + 2iy a <(A-zbar)^-1 w, (B-zbar)^-1 w>
    for trial in range(10):
        rng = substream(18, "shift-scaffold", trial)
        dim = 3 + trial % 3
        b = random_hermitian(rng, dim)
        w = random_unit_vector(rng, dim)
        alpha = float(rng.uniform(0.3, 2.0))
        a = b + alpha * np.outer(w, w.conj())
        x, y = float(rng.uniform(-1, 1)), float(rng.uniform(0.5, 2.0))
        z = x + 1j * y
        ra = np.linalg.inv(a - np.conj(z) * np.eye(dim))
        rb = np.linalg.inv(b - z * np.eye(dim))
        u = np.eye(dim) + 2j * y * ra @ (a - b) @ rb
        # unitarity of the Cayley-type product
        np.testing.assert_allclose(u @ u.conj().T, np.eye(dim), atol=1e-10)
        vec = ra @ w
        lam = 1 + 2j * y * alpha * np.vdot(np.linalg.inv(b - np.conj(z) * np.eye(dim)) @ w, vec)
        np.testing.assert_allclose(u @ vec, lam * vec, atol=1e-10)
        assert abs(abs(lam) - 1.0) <= 1e-10


def test_rank_k_truncation_l1_convergence():
    # dropping the tail of a rank-k perturbation moves xi by at most the
    # dropped trace-norm mass
    rng = substream(19, "shift-rank-k")
    dim, k = 6, 4
    b = random_hermitian(rng, dim)
    ws = [random_unit_vector(rng, dim) for _ in range(k)]
    alphas = rng.uniform(-1.5, 1.5, k)
    perturbations = [al * np.outer(w, w.conj()) for al, w in zip(alphas, ws)]
    xi_full = shift.xi_counting(b + sum(perturbations), b)
    for j in range(k):
        xi_j = shift.xi_counting(b + sum(perturbations[: j + 1]), b)
        tail = np.abs(alphas[j + 1:]).sum()
        assert xi_j.l1_distance(xi_full) <= tail + 1e-9


# ---------------------------------------------------------------- admissible f


def test_admissible_f_empty_is_rejected_but_single_atom_works():
    mu = shift.AtomicMeasure(points=[1.0], weights=[1.0])
    f, fp = shift.admissible_f(mu)
    x = np.linspace(-2, 2, 9)
    np.testing.assert_allclose(f(x), 1j * (np.exp(-1j * x) - 1.0), atol=1e-14)
    np.testing.assert_allclose(fp(x), np.exp(-1j * x), atol=1e-14)


def test_admissible_f_rejects_atom_at_zero():
    with pytest.raises(errors.InputDomainError):
        shift.AtomicMeasure(points=[0.0], weights=[1.0])


def test_admissible_f_derivative_bound():
    mu = seeded_measure(20)
    _, fp = shift.admissible_f(mu)
    x = np.linspace(-10, 10, 401)
    assert np.abs(fp(x)).max() <= mu.total() + 1e-12


def test_admissible_f_derivative_is_derivative():
    mu = seeded_measure(21)
    f, fp = shift.admissible_f(mu)
    x = np.linspace(-2, 2, 11)
    h = 1e-6
    numeric = (f(x + h) - f(x - h)) / (2 * h)
    np.testing.assert_allclose(numeric, fp(x), atol=1e-7)


def test_trace_class_bound_for_admissible_f():
    for trial in range(50):
        dim = 2 + trial % 4
        a, b = seeded_pair(22, dim, trial)
        mu = seeded_measure(22, trial)
        f, _ = shift.admissible_f(mu)
        ea, eb = eig_hermitian(a), eig_hermitian(b)
        from opint.linalg import apply_function
        diff = apply_function(ea, f) - apply_function(eb, f)
        assert trace_norm(diff) <= mu.total() * trace_norm(a - b) + 1e-10


# ---------------------------------------------------------------- trace formula


def test_trace_formula_identity_function():
    a, b = seeded_pair(23, 5)
    res = shift.trace_formula_check(a, b, lambda x: x.astype(complex))
    assert res.lhs == pytest.approx(np.trace(a - b), abs=1e-12)
    assert res.gap <= 1e-11


def test_trace_formula_constant_function():
    a, b = seeded_pair(24, 4)
    res = shift.trace_formula_check(a, b, lambda x: np.full_like(x, 3.7, dtype=complex))
    assert abs(res.lhs) <= 1e-12
    assert abs(res.rhs) <= 1e-12


def test_trace_formula_square_example():
    res = shift.trace_formula_check(np.diag([1.0, 2.0]), np.diag([0.0, 1.0]),
                                    lambda x: x.astype(complex) ** 2)
    assert res.lhs == pytest.approx(4.0, abs=1e-12)
    assert res.rhs == pytest.approx(4.0, abs=1e-12)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=2**31 - 1))
def test_trace_formula_admissible_f_property(seed):
    rng = substream(seed, "shift-hyp")
    dim = int(rng.integers(2, 6))
    a = random_hermitian(rng, dim)
    b = random_hermitian(rng, dim)
    mu = shift.AtomicMeasure(points=rng.uniform(0.3, 2.0, 2), weights=rng.uniform(0.2, 1.0, 2))
    f, _ = shift.admissible_f(mu)
    res = shift.trace_formula_check(a, b, f)
    assert res.gap <= 1e-9 * (1.0 + abs(res.lhs))


# ---------------------------------------------------------------- resolvent


def test_resolvent_identity_equal_pair():
    h = random_hermitian(substream(25, "shift-res"), 3)
    assert shift.resolvent_identity_check(h, h, 0.5 + 0.5j) == pytest.approx(0.0, abs=1e-14)


def test_resolvent_identity_scalar():
    assert shift.resolvent_identity_check(np.array([[1.0]]), np.array([[0.0]]), 1j) <= 1e-14


def test_resolvent_identity_seeded():
    for trial in range(50):
        a, b = seeded_pair(26, 5, trial)
        gap = shift.resolvent_identity_check(a, b, 0.3 + 0.7j)
        assert gap <= 1e-12


def test_resolvent_identity_rejects_real_z():
    with pytest.raises(errors.InputDomainError):
        shift.resolvent_identity_check(np.eye(2), np.eye(2), 1.0)


# ---------------------------------------------------------------- arctan rep


def test_arctan_rep_zero():
    assert shift.arctan_rep_value(0.0) == pytest.approx(0.0, abs=1e-15)


def test_arctan_rep_quarter_pi():
    # the spec-level 1e-6 target needs the dense default rule; the kink of
    # e^{-|s|} limits a 8000-node rule to ~1e-5
    assert shift.arctan_rep_check(1.0) <= 1e-6
    coarse = shift.arctan_rep_check(1.0, symmetric_open_rule(60.0, 8000))
    assert coarse <= 2e-5


def test_arctan_rep_odd():
    for t in (0.3, 1.0, 2.7):
        quad = symmetric_open_rule(40.0, 4000)
        assert shift.arctan_rep_value(-t, quad) == pytest.approx(
            -shift.arctan_rep_value(t, quad), abs=1e-12)
