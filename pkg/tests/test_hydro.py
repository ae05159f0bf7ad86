import numpy as np
import pytest

from riemann_susy.errors import CatastropheError, NonConvergenceError, ParseError, RiemannSusyError
from riemann_susy.hydro import (
    STATUS_OK,
    GridSolveConfig,
    ProfilePair,
    catastrophe_locus,
    evaluate_grid,
    forward_map,
    hodograph_det,
    invert_map,
    jacobian,
    parse_profile,
    round_trip,
)

quadratic = ProfilePair.preset("quadratic")


def test_forward_map():
    assert forward_map(1.0, 2.0, quadratic) == pytest.approx((2.5, 3.0))
    assert forward_map(2.0, 1.0, quadratic) == pytest.approx((2.5, 3.0))
    cubic = ProfilePair.preset("cubic")
    assert forward_map(0.0, 0.0, cubic) == pytest.approx((0.0, 0.0))


def test_profiles_have_exact_derivatives():
    quartic = parse_profile("quartic")
    assert quartic.F(2.0) == pytest.approx(16.0 / 12)
    assert quartic.dF(2.0) == pytest.approx(8.0 / 3)
    assert quartic.d2F(2.0) == pytest.approx(4.0)
    expr = parse_profile("expr:exp(s)")
    assert expr.d2F(np.array([0.0, 1.0])) == pytest.approx([1.0, np.e])
    poly = parse_profile("poly:1,0,3")
    assert poly.d2F(5.0) == pytest.approx(6.0)


def test_bad_profiles():
    for spec in ("septic", "poly:", "poly:1,a", "expr:s*q"):
        with pytest.raises(ParseError):
            parse_profile(spec)


def test_invert_both_branches():
    inv = invert_map(2.5, 3.0, quadratic, (0.9, 2.1))
    assert (inv.R, inv.S) == pytest.approx((1.0, 2.0), abs=1e-10)
    assert inv.branch == -1
    inv = invert_map(2.5, 3.0, quadratic, (2.1, 0.9))
    assert (inv.R, inv.S) == pytest.approx((2.0, 1.0), abs=1e-10)
    assert inv.branch == 1


def test_linear_profile_is_singular():
    pair = ProfilePair.parse("poly:0,1", "quadratic")
    with pytest.raises(CatastropheError) as exc:
        invert_map(1.0, 1.0, pair, (0.5, 1.5))
    assert exc.value.det == 0


def test_no_real_preimage_does_not_converge():
    # x < t**2/4 has no real preimage under the quadratic preset
    with pytest.raises((NonConvergenceError, CatastropheError)):
        invert_map(2.0, 3.0, quadratic, (0.9, 2.1))


def test_nonconvergence_carries_trace():
    with pytest.raises(NonConvergenceError) as exc:
        invert_map(2.5, 3.0, quadratic, (0.0, 3.0), max_iter=1)
    assert len(exc.value.trace) == 1


def test_assembled_determinant_matches_analytic():
    for name in ("quadratic", "cubic", "quartic"):
        pair = ProfilePair.preset(name)
        for R, S in ((0.7, 1.9), (1.3, 0.4), (-0.8, 1.1)):
            assert np.linalg.det(jacobian(R, S, pair)) == pytest.approx(hodograph_det(R, S, pair), rel=1e-12, abs=1e-15)


def test_round_trip():
    assert round_trip(quadratic, 200, seed=3) <= 1e-10
    assert round_trip(ProfilePair.preset("quartic"), 200, seed=4) <= 1e-10


@pytest.mark.slow
def test_round_trip_thousand_points():
    assert round_trip(quadratic, 1000) <= 1e-10
    assert round_trip(ProfilePair.preset("quartic"), 1000) <= 1e-10


def test_locus_of_quadratic_is_the_diagonal():
    report = catastrophe_locus(quadratic, ((-2.0, 2.0), (-2.0, 2.0)))
    assert report.diagonal
    assert report.R_lines == [] and report.S_lines == []
    # 201 nodes per side, exactly the diagonal nodes are singular
    assert report.band == 201


def test_locus_of_quartic_adds_zero_lines():
    pair = ProfilePair.parse("quartic", "quadratic")
    report = catastrophe_locus(pair, ((-1.0, 1.0), (-1.0, 1.0)))
    assert report.R_lines == [0.0]
    assert report.S_lines == []
    assert report.diagonal


def test_locus_from_expression_profile():
    pair = ProfilePair.parse("expr:s**3 - s", "quadratic")
    report = catastrophe_locus(pair, ((-1.0, 1.0), (2.0, 3.0)))
    # F'' = 6*s vanishes at 0, domains do not overlap
    assert report.R_lines == pytest.approx([0.0], abs=1e-10)
    assert not report.diagonal


def test_empty_locus():
    report = catastrophe_locus(quadratic, ((2.0, 3.0), (0.0, 1.0)))
    assert report.empty
    assert report.band == 0


def test_degenerate_locus():
    report = catastrophe_locus(ProfilePair.parse("poly:0,1", "quadratic"), ((0.0, 1.0), (0.0, 1.0)))
    assert report.degenerate


def test_grid_config_validation():
    with pytest.raises(RiemannSusyError):
        GridSolveConfig((2.5, 3.0), (2.8, 3.0), 1, 5, (0.9, 2.1))
    with pytest.raises(RiemannSusyError):
        GridSolveConfig((2.5, 3.0), (2.8, 3.0), 5, 5, (0.9, 2.1), tol=0.0)


def test_small_grid_converges():
    cfg = GridSolveConfig((2.5, 2.6), (2.9, 3.0), 2, 2, (0.9, 2.1))
    result = evaluate_grid(cfg, quadratic)
    assert result.converged.all()
    assert (result.branch == -1).all()
    assert result.as_json()["status"] == "pass"


def test_grid_matches_closed_form():
    cfg = GridSolveConfig((2.5, 3.0), (2.8, 3.0), 11, 6, (0.9, 2.1))
    result = evaluate_grid(cfg, quadratic)
    x, t = np.meshgrid(result.xs, result.ts)
    root = np.sqrt(4 * x - t ** 2)
    assert result.R == pytest.approx((t - root) / 2, abs=1e-10)
    assert result.S == pytest.approx((t + root) / 2, abs=1e-10)
    assert result.det == pytest.approx(result.R - result.S, abs=1e-10)


def test_grid_flags_nodes_without_preimage():
    cfg = GridSolveConfig((2.0, 2.5), (2.99, 3.0), 6, 2, (0.9, 2.1))
    result = evaluate_grid(cfg, quadratic)
    assert not result.converged[:, :3].any()
    assert result.converged[:, 4:].all()
    assert result.as_json()["status"] == "fail"


def test_grid_csv():
    cfg = GridSolveConfig((2.5, 2.6), (2.9, 3.0), 3, 2, (0.9, 2.1))
    lines = evaluate_grid(cfg, quadratic).to_csv().strip().splitlines()
    assert lines[0].split(",") == ["x", "t", "R", "S", "det", "residual_R", "residual_S", "branch", "status"]
    assert len(lines) == 7
    assert lines[1].endswith(",ok")


@pytest.mark.slow
def test_residuals_are_second_order():
    def residual(n):
        cfg = GridSolveConfig((2.5, 3.0), (2.8, 3.0), n, n, (0.9, 2.1))
        result = evaluate_grid(cfg, quadratic)
        assert (result.status == STATUS_OK).all()
        return np.maximum(np.abs(result.residual_R), np.abs(result.residual_S))

    coarse, fine = residual(21), residual(41)
    # compare on the interior nodes both grids share
    ratio = coarse[1:-1, 1:-1].max() / fine[2:-2:2, 2:-2:2].max()
    assert ratio >= 3.5
