#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fagnano/cli.hpp"
#include "fagnano/golden.hpp"
#include "fagnano/optimizer.hpp"
#include "fagnano/render.hpp"
#include "fagnano/report.hpp"
#include "fagnano/theorem.hpp"

namespace py = pybind11;
using namespace fagnano;
using namespace pybind11::literals;

namespace {

std::string repr(const report::Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Orthic triangles, Fagnano's problem and the pi/4 characterization.";

  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.attr("CLASSIFICATION_TOL") = kClassificationTol;

  py::class_<Point>(m, "Point")
      .def(py::init<double, double>(), "x"_a, "y"_a)
      .def(py::init([](const py::tuple& t) {
        if (t.size() != 2) throw py::value_error("a point needs two coordinates");
        return Point{t[0].cast<double>(), t[1].cast<double>()};
      }))
      .def_readwrite("x", &Point::x)
      .def_readwrite("y", &Point::y)
      .def("__iter__", [](const Point& p) { return py::iter(py::make_tuple(p.x, p.y)); })
      .def("__eq__", [](const Point& p, const Point& q) { return p == q; })
      .def("__repr__", [](const Point& p) { return "Point(" + report::format_double(p.x) + ", " + report::format_double(p.y) + ")"; });
  py::implicitly_convertible<py::tuple, Point>();

  py::enum_<Vertex>(m, "Vertex").value("A", Vertex::A).value("B", Vertex::B).value("C", Vertex::C);

  py::enum_<TriangleKind>(m, "TriangleKind")
      .value("ACUTE", TriangleKind::Acute)
      .value("RIGHT", TriangleKind::Right)
      .value("OBTUSE", TriangleKind::Obtuse)
      .value("DEGENERATE", TriangleKind::Degenerate);

  py::class_<AngleTriple>(m, "AngleTriple")
      .def_readonly("alpha", &AngleTriple::alpha)
      .def_readonly("beta", &AngleTriple::beta)
      .def_readonly("gamma", &AngleTriple::gamma)
      .def("__getitem__", [](const AngleTriple& a, Vertex v) { return a[v]; })
      .def("__iter__", [](const AngleTriple& a) { return py::iter(py::make_tuple(a.alpha, a.beta, a.gamma)); })
      .def("__repr__", [](const AngleTriple& a) { return repr(report::to_json(a)); });

  py::class_<Triangle>(m, "Triangle")
      .def(py::init<Point, Point, Point>(), "a"_a, "b"_a, "c"_a)
      .def_property_readonly("a", &Triangle::a)
      .def_property_readonly("b", &Triangle::b)
      .def_property_readonly("c", &Triangle::c)
      .def_property_readonly("vertices", &Triangle::vertices)
      .def_property_readonly("reoriented", &Triangle::reoriented)
      .def_property_readonly("area", &Triangle::area)
      .def_property_readonly("diameter", &Triangle::diameter)
      .def("side", &Triangle::side)
      .def("__getitem__", [](const Triangle& t, Vertex v) { return t[v]; })
      .def("__repr__", [](const Triangle& t) { return "Triangle(" + repr(report::to_json(t)) + ")"; });

  py::class_<TriangleClass>(m, "TriangleClass")
      .def_readonly("kind", &TriangleClass::kind)
      .def_readonly("margin", &TriangleClass::margin);

  py::class_<OrthicResult>(m, "OrthicResult")
      .def_readonly("foot_from_a", &OrthicResult::foot_from_a)
      .def_readonly("foot_from_b", &OrthicResult::foot_from_b)
      .def_readonly("foot_from_c", &OrthicResult::foot_from_c)
      .def_readonly("angles", &OrthicResult::angles)
      .def_readonly("perimeter", &OrthicResult::perimeter)
      .def("foot", &OrthicResult::foot)
      .def("side_lengths", &OrthicResult::side_lengths);

  m.def("angles", &angles, "t"_a);
  m.def("classify", py::overload_cast<const Triangle&, double>(&classify), "t"_a, "tol"_a = kClassificationTol);
  m.def("classify_points", py::overload_cast<Point, Point, Point, double>(&classify), "a"_a, "b"_a, "c"_a,
        "tol"_a = kClassificationTol);
  m.def("foot_of_altitude", &foot_of_altitude, "t"_a, "from_vertex"_a);
  m.def("orthic_triangle", &orthic_triangle, "t"_a, "tol"_a = kClassificationTol);
  m.def("orthocenter", &orthocenter, "t"_a);
  m.def("incenter", &incenter, "t"_a);
  m.def("triangle_from_angles", &triangle_from_angles, "alpha"_a, "beta"_a, "gamma"_a);

  py::class_<InscribedConfig>(m, "InscribedConfig")
      .def(py::init<>())
      .def(py::init<double, double, double>(), "t_on_bc"_a, "t_on_ca"_a, "t_on_ab"_a)
      .def_readonly("t_on_bc", &InscribedConfig::t_on_bc)
      .def_readonly("t_on_ca", &InscribedConfig::t_on_ca)
      .def_readonly("t_on_ab", &InscribedConfig::t_on_ab)
      .def("as_tuple", &InscribedConfig::as_array)
      .def("__repr__", [](const InscribedConfig& c) { return repr(report::to_json(c)); });

  py::class_<MinimizeResult>(m, "MinimizeResult")
      .def_readonly("config", &MinimizeResult::config)
      .def_readonly("perimeter", &MinimizeResult::perimeter)
      .def_readonly("iterations", &MinimizeResult::iterations)
      .def_readonly("converged", &MinimizeResult::converged)
      .def_readonly("near_right", &MinimizeResult::near_right)
      .def_readonly("clamped_steps", &MinimizeResult::clamped_steps)
      .def_property_readonly("history", [](const MinimizeResult& r) {
        py::list out;
        for (const auto& h : r.history) out.append(py::make_tuple(h.iteration, h.perimeter));
        return out;
      });

  m.def("objective", &objective, "t"_a, "config"_a);
  m.def("inscribed_points", &inscribed_points, "t"_a, "config"_a);
  m.def("orthic_config", &orthic_config, "t"_a);
  m.def("minimize_grid_then_simplex", &minimize_grid_then_simplex, "t"_a, "grid_n"_a = kDefaultGridN,
        "max_iter"_a = kDefaultMaxIter, "tol"_a = kDefaultSimplexTol);
  m.def("minimize_reflection_descent", &minimize_reflection_descent, "t"_a, "start"_a = InscribedConfig{},
        "max_iter"_a = kDefaultMaxIter, "tol"_a = kDefaultDescentTol);
  m.def("min_perimeter_closed_form", &min_perimeter_closed_form, "t"_a);

  py::class_<TheoremVerdict>(m, "TheoremVerdict")
      .def_readonly("orthic_is_right", &TheoremVerdict::orthic_is_right)
      .def_readonly("right_vertex", &TheoremVerdict::right_vertex)
      .def_readonly("has_quarter_pi", &TheoremVerdict::has_quarter_pi)
      .def_readonly("quarter_pi_vertex", &TheoremVerdict::quarter_pi_vertex)
      .def_readonly("quarter_pi_unique", &TheoremVerdict::quarter_pi_unique)
      .def_readonly("pairing_holds", &TheoremVerdict::pairing_holds)
      .def_readonly("biconditional_holds", &TheoremVerdict::biconditional_holds);

  py::class_<ProofStepReport>(m, "ProofStepReport")
      .def_readonly("b_role", &ProofStepReport::b_role)
      .def_readonly("quarter_relation_active", &ProofStepReport::quarter_relation_active)
      .def_readonly("quarter_relation_residual", &ProofStepReport::quarter_relation_residual)
      .def("max_universal_residual", &ProofStepReport::max_universal_residual);

  py::class_<ScanReport>(m, "ScanReport")
      .def_readonly("grid_resolution", &ScanReport::grid_resolution)
      .def_readonly("admissible_nodes", &ScanReport::admissible_nodes)
      .def_readonly("samples_skipped", &ScanReport::samples_skipped)
      .def_readonly("samples_tested", &ScanReport::samples_tested)
      .def_property_readonly("counterexamples", [](const ScanReport& r) {
        py::list out;
        for (const auto& c : r.counterexamples) out.append(py::make_tuple(c.i, c.j));
        return out;
      })
      .def("passed", &ScanReport::passed);

  m.def("verdict", &verdict, "t"_a, "tol_angle"_a = kClassificationTol);
  m.def("proof_steps", &proof_steps, "t"_a, "tol_angle"_a = kClassificationTol);
  m.def("incenter_orthocenter_check", &incenter_orthocenter_check, "t"_a);
  m.def("scan_angle_space", &scan_angle_space, "grid_resolution"_a = 200, "tol_angle"_a = kClassificationTol,
        "boundary_band"_a = kDefaultBoundaryBand);

  m.def("golden_report", [] {
    const auto fig = golden::build();
    return report::dump(report::golden_document(fig, golden::reproduce_reference_values(fig)));
  }, "The golden-rectangle example as a JSON document.");
  m.def("golden_triangle", [] { return golden::build().triangle_bfc; });

  m.def("orthic_json", [](const Triangle& t, double tol) { return report::dump(report::orthic_document(t, tol)); },
        "t"_a, "tol"_a = kClassificationTol);
  m.def("minimize_json", [](const Triangle& t, const std::string& method, const MinimizeResult& r) {
    return report::dump(report::minimize_document(t, method, r));
  }, "t"_a, "method"_a, "result"_a);
  m.def("scan_json", [](const ScanReport& r) { return report::dump(report::to_json(r)); }, "report"_a);

  m.def("render_svg", [](const Triangle& t, int width, int height, int margin, bool altitudes, bool orthic,
                         bool labels) {
    render::RenderSpec spec;
    spec.width_px = width;
    spec.height_px = height;
    spec.margin_px = margin;
    spec.show_altitudes = altitudes;
    spec.show_orthic = orthic;
    spec.show_labels = labels;
    return render::triangle_svg(t, spec);
  }, "t"_a, "width"_a = 640, "height"_a = 480, "margin"_a = 40, "altitudes"_a = true, "orthic"_a = true,
        "labels"_a = true);
  m.def("render_golden_svg", [] { return render::golden_svg(golden::build(), {}); });

  // Same command line as the executable; returns (exit_code, stdout, stderr).
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "args"_a);
}
