import math

import pytest

import qglab


def test_path_spectrum():
    g = qglab.MetricGraph.parse("vertex a\nvertex b\nedge e a b 1.0")
    assert g.edge_count == 1
    values = qglab.eigenvalues(g, 3)
    assert values[0] == 0.0
    assert values[1] == pytest.approx(math.pi**2, rel=1e-12)
    assert values[2] == pytest.approx(4 * math.pi**2, rel=1e-12)
    scan = qglab.eigenvalues(g, 3, locator="scan")
    assert scan == pytest.approx(values, rel=1e-10)


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        qglab.MetricGraph.parse("vertex a\nvertex b\nedge e a b -1")


def test_families_and_geometry():
    star = qglab.make_star(1.0, 0.5, 3)
    assert qglab.total_length(star) == pytest.approx(1.0)
    assert qglab.diameter(star) == pytest.approx(0.5)
    assert star.dirichlet == [star.vertex_index("v0")]
    dn = qglab.make_dn(2.0, 1.0, 3)
    assert qglab.betti(dn) == 0
    assert qglab.star_first_dirichlet(1.0, 0.5, 3) == pytest.approx(4 * math.pi**2 / 9, rel=1e-12)


def test_omega_and_bound_check():
    assert qglab.omega_thm1(2.0, 1.0) == pytest.approx(1.720667178038759525, rel=1e-12)
    report = qglab.check_thm1(qglab.make_dn(2.0, 1.0, 8))
    assert report["verdict"] == "holds"
    assert report["margin"] > 0


def test_fem_agrees_with_exact():
    g = qglab.make_star(1.0, 0.5, 3)
    fem = qglab.fem_eigenvalues(g, 2)
    exact = qglab.eigenvalues(g, 2)
    assert fem == pytest.approx(exact, rel=1e-5)


def test_mgf_round_trip_and_surgery():
    g = qglab.make_family("tadpole", {"loop": 1.0, "tail": 0.5})
    h = qglab.MetricGraph.parse(g.to_mgf())
    assert h.to_mgf() == g.to_mgf()
    cut = qglab.cut_loop_midpoints(g)
    assert qglab.betti(cut) == 0


def test_random_graph_is_deterministic():
    a = qglab.random_graph(42, beta=1)
    b = qglab.random_graph(42, beta=1)
    assert a.to_mgf() == b.to_mgf()
    assert qglab.betti(a) == 1


def test_suite_roots():
    checks = qglab.run_suite("roots", 7)
    assert checks and all(c["passed"] for c in checks)
