import cmath
import math

import pytest

import leeyang


def test_single_bond_zeros():
    z = leeyang.lee_yang_zeros([math.log(2.0)])
    assert len(z) == 2
    assert z.chain_length == 1
    assert z.phases == pytest.approx([0.25, 0.75])
    assert z.max_deviation <= 1e-10


def test_trace_matches_enumeration():
    ps = [0.3, 1.2, 0.7, 2.1]
    zeta = cmath.exp(0.4j)
    brute = leeyang.partition_bruteforce(ps, zeta)
    assert abs(leeyang.partition_via_trace(ps, zeta) - brute) <= 1e-10 * abs(brute)


def test_couplings_to_verblunsky():
    assert leeyang.couplings_to_verblunsky([2.0 / 3.0])[0].real == pytest.approx(0.26359713811572677)


def test_floquet_matrix_and_band_permutation():
    np = pytest.importorskip("numpy")
    f = leeyang.floquet_matrix([0.1, 0.2j, -0.3, 0.4, 0.0, 0.5j], math.pi / 2)
    assert f.shape == (6, 6)
    assert np.allclose(f.conj().T @ f, np.eye(6), atol=1e-13)
    assert leeyang.band_permutation(8) == [1, 4, 5, 8, 7, 6, 3, 2]
    g = leeyang.banded_floquet_matrix([0.3] * 24, math.pi / 2)
    assert leeyang.max_offset(g) == 4


def test_fibonacci_model_labels():
    model = leeyang.build_model(kind="fibonacci", iterations=12)
    assert model.pipeline == "ising"
    assert len(model.couplings) == 377
    zeros = model.zeros()
    report = leeyang.label_gaps(leeyang.detect_gaps(zeros), model.label_group, 30)
    widest = leeyang.widest_gaps(report, 10)
    assert len(widest) == 10
    assert max(g.match.residual for g in widest) <= 10 / 377


def test_match_label():
    golden = (math.sqrt(5) - 1) / 2
    m = leeyang.match_label(0.3820, leeyang.LabelGroup.rank2(golden), 5)
    assert (m.n, m.m) == (1, -1)
    assert m.residual == pytest.approx(3.398874989484820e-5, rel=1e-9)


def test_ids_and_histogram():
    z = leeyang.EigenphaseList([0.25, 0.75], 2)
    curve = leeyang.ids(z, "operator")
    assert curve.jumps() == [(0.25, 0.5), (0.75, 1.0)]
    edges, counts = leeyang.gap_histogram(z, 1)
    assert counts == [2]


def test_errors_carry_their_kind():
    with pytest.raises(leeyang.LeeyangError, match="^domain"):
        leeyang.zeros_of_discriminant([1.5])
    with pytest.raises(leeyang.LeeyangError, match="^config"):
        leeyang.build_model(kind="cat-map")
    with pytest.raises(ValueError):
        leeyang.build_model(kind="nope")


def test_verify_suite():
    report = leeyang.verify({"seed": 42})
    assert report["all_pass"]
    assert {c["name"] for c in report["checks"]} >= {"trace_formula", "bandwidth", "unit_circle"}
