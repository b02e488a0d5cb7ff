import json
import math

import pytest

import cigarlab


def test_version():
    assert cigarlab.__version__ == "1.0.0"


def test_strip_substitution_roundtrip():
    for r in (0.1, 0.5, 1.0, 1.7):
        assert cigarlab.r_of_xi(cigarlab.xi_of_r(r)) == pytest.approx(r, abs=1e-13)
    assert cigarlab.xi_of_r(2.0 / 3.0) == pytest.approx(math.log(2.0), abs=1e-14)


def test_kernel_and_coefficients():
    l2 = math.log(2.0)
    assert cigarlab.w0_kernel(l2) == pytest.approx(1.0 / math.sqrt(6.0), abs=1e-15)
    assert cigarlab.P_coeff(l2) == pytest.approx(19.0 / 12.0, abs=1e-14)
    assert cigarlab.Q_coeff(l2) == pytest.approx(-1327.0 / 900.0, abs=1e-14)
    assert cigarlab.multiplier_r(2.0 / 3.0) == pytest.approx(2.4633611485424033, abs=1e-13)
    assert cigarlab.lambda_r(1.0) == pytest.approx(0.025980762113533159, abs=1e-15)


def test_geometry_pins():
    G = cigarlab.christoffel("cigar3d", 1.0, 0.0)
    assert G[0][0][0] == pytest.approx(2.0 / 3.0, abs=1e-14)
    assert G[2][0][2] == pytest.approx(1.0, abs=1e-14)
    K = cigarlab.sectional("cigar3d", 1.0, 0.0)
    assert K[0][2] == pytest.approx(3.0 / 8.0, abs=1e-14)
    assert cigarlab.gauss("cigar2d", 1.0, 0.0) == pytest.approx(3.0 / 8.0, abs=1e-14)
    eq, bianchi = cigarlab.soliton_residual("cigar3d", 1.0, 0.0)
    assert abs(eq) <= 1e-12
    assert abs(bianchi) <= 1e-12
    with pytest.raises(cigarlab.DomainError):
        cigarlab.christoffel("cigar3d", 5.0, 0.0)
    with pytest.raises(cigarlab.DomainError):
        cigarlab.gauss("cigar3d", 1.0, 0.0)


def test_suite_report_parses():
    assert "appendix" in cigarlab.suite_names()
    report = json.loads(cigarlab.run_suite_json("appendix", 42, 1.0))
    assert report["suite"] == "appendix"
    assert report["pass"] is True
    assert report["checks"]


def test_solver_smoke():
    out = cigarlab.solve_w0(xi_max=2.0, x_max=1.0, h=0.1)
    assert out["nxi"] == 20
    assert out["nx"] == 20  # x spans [-x_max, x_max]
    assert out["iterations"] > 0
    assert out["residual"] <= 1e-10
    assert out["max_error_vs_kernel"] <= 5e-3 * cigarlab.w0_kernel(2.0)
    assert len(out["values"]) == 21 * 21


def test_transform_fixture():
    l2 = math.log(2.0)
    pts = [(l2, 0.0), (1.0, 0.5)]
    w = cigarlab.transform_fixture("vlog", "v2w", pts)
    assert w[0] == pytest.approx(cigarlab.w0_kernel(l2), abs=1e-12)
    assert w[1] == pytest.approx(cigarlab.w0_kernel(1.0), abs=1e-12)
    gauge_w = cigarlab.transform_fixture("gauge", "v2w", pts)
    assert all(abs(v) <= 1e-12 for v in gauge_w)
    with pytest.raises(cigarlab.DomainError):
        cigarlab.transform_fixture("mystery", "v2w", pts)
    with pytest.raises(cigarlab.DomainError):
        cigarlab.transform_fixture("vlog", "sideways", pts)
