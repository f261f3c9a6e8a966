import json
import math
from fractions import Fraction as F

import pytest

import eulertop


def test_bnf_table():
    bnf = eulertop.birkhoff_normal_form(7)
    assert bnf[2] == [0, F(-1, 4)]
    assert bnf[3] == [F(-1, 4), 0, F(-1, 16)]
    assert bnf == eulertop.bnf_via_reversion(7)


def test_frobenius_methods_agree():
    a = eulertop.frobenius_a(5)
    assert a[1] == [0, F(1, 2)]
    assert a == eulertop.frobenius_a(5, "closed_form")
    assert eulertop.frobenius_b(2)[2] == [F(5, 4), 0, F(21, 16)]


def test_pf_coefficients():
    c = eulertop.pf_coefficients()
    assert c["c0"] == []
    assert c["c1"] == [[0, F(1, 2)], [3]]


def test_sigma():
    s = eulertop.sigma(7)
    assert s["branch_consistent"]
    assert s["linear"]["terms"] == {"half_log_64_over_k2p4": 1}
    assert s["tail"][3] == [F(-1, 3), 0, F(-5, 32)]


def test_numerics():
    value, err = eulertop.action_quadrature(0.5, 0.02)
    assert value == pytest.approx(0.191027299245430532563, abs=1e-12)
    assert 0 <= err < 1e-12
    t, _ = eulertop.period_quadrature(0.5, -0.02)
    assert t == pytest.approx(5.25288568657287, abs=1e-12)
    rep = eulertop.verify(F(1, 2), ["0.02", "-0.02"])
    assert rep["max_deviation"] < 1e-20
    p = eulertop.params_from_inertia(1, 2, 3)
    assert p["kappa"] == pytest.approx(-2 / math.sqrt(3))


def test_radius_and_pendulum():
    (a,) = eulertop.radius("3/2", 60, ["a-seq"])
    assert a["theoretical"] == pytest.approx(0.25)
    assert a["extrapolated"] == pytest.approx(0.25, rel=1e-3)
    rows = eulertop.pendulum([0.0, 2.0])
    assert rows[0]["margin"] == pytest.approx(math.log(8))
    assert all(r["above_bound"] for r in rows)


def test_errors():
    with pytest.raises(eulertop.EulertopError):
        eulertop.action_quadrature(0.5, 0.0)
    with pytest.raises(eulertop.EulertopError):
        eulertop.params_from_inertia(1, 1, 2)
    with pytest.raises(ValueError):
        eulertop.frobenius_a(-1)


def test_cli_in_process():
    code, out, _ = eulertop.run_cli(["bnf", "--kappa", "1/2"])
    assert code == 0
    assert json.loads(out)["at_kappa"]["coefficients"][2] == "-1/8"
    assert eulertop.run_cli(["nope"])[0] == 64
