import math

import pytest

import minimorph


def test_catalog_names():
    names = minimorph.catalog_names()
    assert "s4-quadric" in names
    assert "h4-quadric" in names
    assert "hopf" in names
    assert len(names) == len(set(names))


def test_morphism_evaluation():
    m = minimorph.Morphism("hopf-dual")
    assert m.certified
    assert m.dimension == 4
    v = m.evaluate([1.0, 0.0, 2.0, 1.0])
    assert abs(v - 1.0) < 1e-12
    # The defining identities vanish pointwise.
    x = [0.3, -0.2, 1.1, -1.4]
    assert abs(m.tension(x)) < 1e-10
    assert abs(m.conformality(x)) < 1e-10
    assert len(m.gradient(x)) == 4


def test_unknown_entry_raises():
    with pytest.raises(minimorph.MinimorphError):
        minimorph.Morphism("no-such-map")


def test_variety_report():
    rep = minimorph.variety("3", "4")
    assert rep["passed"]
    assert rep["extra"]["criticality_det"] == "240*i"
    assert rep["extra"]["quintuple"]["a1"]["im"] == "5"


def test_verify_exact_route():
    rep = minimorph.verify("s4-quadric")
    assert rep["passed"]
    assert rep["extra"]["mode"] == "exact"
    names = [c["name"] for c in rep["checks"]]
    assert "harmonic-morphism.exact" in names


def test_trace_writes_artifacts(tmp_path):
    rep = minimorph.trace("s4-quadric", 5j, grid=(5, 5), out_dir=tmp_path)
    assert rep["passed"]
    assert len(rep["artifacts"]) == 3
    for name in ("s4-quadric-patch.ply", "s4-quadric-patch.csv", "s4-quadric-patch.json"):
        assert (tmp_path / name).exists()


def test_gradient_matches_difference_quotient():
    m = minimorph.Morphism("r3-quadric")
    x = [0.4, -0.7, 0.9]
    g = m.gradient(x)
    h = 1e-6
    for k in range(3):
        xp = list(x)
        xm = list(x)
        xp[k] += h
        xm[k] -= h
        fd = (m.evaluate(xp) - m.evaluate(xm)) / (2 * h)
        assert abs(g[k] - fd) < 1e-6 * (1 + abs(fd))
