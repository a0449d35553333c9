from fractions import Fraction

import numpy as np
import pytest

import spinh


def test_weyl_dim():
    assert spinh.weyl_dim(5, "1/2,1/2") == 4
    assert spinh.weyl_dim(7, "1,1,0") == 21
    assert spinh.weyl_dim(7, "") == 1
    with pytest.raises(ValueError):
        spinh.weyl_dim(5, "1/2,1")


def test_conformal_weight_matches_decompose():
    d = spinh.decompose(5, "1/2,1/2", 2)
    lams = [row["lambda"] for row in d["tensor_components"]]
    assert lams == ["(3/2,1/2)", "(1/2,1/2)"]
    for row in d["tensor_components"]:
        lam = row["lambda"].strip("()")
        assert spinh.conformal_weight(5, "1/2,1/2", lam) == row["conformal_weight"]
    assert sum(r["multiplicity"] * r["weyl_dim"] for r in d["components"]) == 14 * 4


def test_spectrum_spinor():
    s = spinh.spectrum(5, "1/2,1/2", 2)
    assert [r["predicted"] for r in s["rows"]] == [Fraction(0), Fraction(7)]
    assert [r["dim"] for r in s["rows"]] == [40, 16]
    assert s["max_deviation"] < 1e-8
    assert s["nonneg"] and s["dims_match"]
    ev = np.asarray(s["eigenvalues"])
    assert ev.shape == (56,)
    assert np.all(np.diff(ev) >= -1e-12)


def test_weighted_spectrum_and_bad_operator():
    s = spinh.spectrum(5, "1/2,1/2", 2, op="weighted")
    assert [r["predicted"] for r in s["rows"]] == [Fraction(-1), Fraction(5, 2)]
    with pytest.raises(ValueError):
        spinh.spectrum(5, "1/2,1/2", 2, op="F")


def test_e_matrix_shape():
    e = spinh.e_matrix(5, "1,0", 1)
    assert e.shape == (25, 25)
    dense = e.toarray()
    assert np.isfinite(dense).all()


def test_kernel_and_quotients():
    k = spinh.kernel(7, "1,1,0", 2)
    assert k["dim"] == k["predicted"] == 330
    assert k["angle_to_E"] < 1e-6
    assert spinh.kernel(5, "", 2)["angle_to_E"] is None
    qd = spinh.quotient_dimensions(7, 2, 2)
    assert qd["intersection"] == 330
    assert qd["total"] == 567
    assert sorted(e["computed"] for e in qd["entries"]) == [21, 27, 189]


def test_verify_suites():
    checks = spinh.verify(5, "1/2,1/2", 2, "lemmas")
    assert len(checks) == 12
    assert all(c["passed"] for c in checks)
    scalar = spinh.verify(5, "", 4, "scalar")
    assert {c["suite"] for c in scalar} == {"scalar"}
    with pytest.raises(ValueError):
        spinh.verify(5, "", 2, "nope")
    with pytest.raises(ValueError):
        spinh.verify(5, "", -1)
