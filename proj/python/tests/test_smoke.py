import json
import math

import pytest

import fagnano as f


def equilateral():
    return f.Triangle((0.0, 0.0), (1.0, 0.0), (0.5, math.sqrt(3.0) / 2.0))


def test_orthic_of_equilateral_is_the_medial_triangle():
    o = f.orthic_triangle(equilateral())
    assert o.perimeter == pytest.approx(1.5, abs=1e-15)
    assert tuple(o.foot_from_c) == pytest.approx((0.5, 0.0), abs=1e-15)
    assert list(o.angles) == pytest.approx([math.pi / 3] * 3, abs=1e-12)


def test_classification_and_errors():
    assert f.classify(equilateral()).kind == f.TriangleKind.ACUTE
    right = f.Triangle((0, 0), (1, 0), (0, 1))
    assert f.classify(right).kind == f.TriangleKind.RIGHT
    assert f.classify_points((0, 0), (1, 0), (2, 0)).kind == f.TriangleKind.DEGENERATE
    with pytest.raises(f.PreconditionError, match="largest angle"):
        f.orthic_triangle(right)
    with pytest.raises(f.ConstructionError):
        f.Triangle((0, 0), (1, 0), (2, 0))
    with pytest.raises(ValueError):
        f.Triangle((0, 0), (1, 0), (float("nan"), 1))


def test_orientation_is_normalized():
    t = f.Triangle((0, 0), (0, 1), (1, 0))
    assert t.reoriented
    assert t.b == f.Point(1, 0)


def test_incenter_of_orthic_is_orthocenter():
    t = f.Triangle((0.1, 0.2), (1.3, -0.1), (0.7, 1.1))
    assert f.incenter_orthocenter_check(t) <= 1e-12


def test_minimizers_agree_with_the_orthic_perimeter():
    t = f.golden_triangle()
    closed = f.min_perimeter_closed_form(t)
    r = f.minimize_grid_then_simplex(t)
    assert r.converged
    assert r.perimeter == pytest.approx(closed, rel=1e-9)
    d = f.minimize_reflection_descent(t, f.InscribedConfig(0.2, 0.7, 0.4))
    assert d.converged
    perims = [p for _, p in d.history]
    assert all(b <= a for a, b in zip(perims, perims[1:]))
    assert d.config.as_tuple() == pytest.approx(f.orthic_config(t).as_tuple(), abs=1e-8)
    doc = json.loads(f.minimize_json(t, "reflection", d))
    assert doc["converged"] is True


def test_invalid_config():
    with pytest.raises(f.PreconditionError):
        f.InscribedConfig(0.0, 0.5, 0.5)


def test_quarter_pi_characterization():
    t = f.triangle_from_angles(math.pi / 3, math.pi / 4, 5 * math.pi / 12)
    v = f.verdict(t)
    assert v.orthic_is_right and v.has_quarter_pi
    assert v.quarter_pi_vertex == f.Vertex.B == v.right_vertex
    assert f.proof_steps(t).quarter_relation_residual <= 1e-12
    scan = f.scan_angle_space(60)
    assert scan.passed() and scan.samples_tested > 0
    assert json.loads(f.scan_json(scan))["passed"] is True


def test_golden_example():
    doc = json.loads(f.golden_report())
    assert doc["all_within_tolerance"] is True
    ratio = next(v for v in doc["values"] if v["name"] == "GE/HE")
    assert ratio["computed"] == pytest.approx(math.sqrt(5) / 2, abs=1e-12)
    sides = sorted(f.orthic_triangle(f.golden_triangle()).side_lengths())
    assert [s / sides[0] for s in sides] == pytest.approx([1, 2, math.sqrt(5)], abs=1e-12)


def test_svg_and_cli_are_deterministic():
    svg = f.render_svg(equilateral())
    assert svg.startswith("<?xml") and svg.count("<line ") == 9
    assert svg == f.render_svg(equilateral())
    assert f.render_golden_svg().count("<polygon") == 2
    code, out, err = f.run_cli(["orthic", "golden-bfc"])
    assert code == 0 and err == ""
    assert out == f.orthic_json(f.golden_triangle())
    assert f.run_cli(["orthic", "0,0,1,0,0,1"])[0] == 2
