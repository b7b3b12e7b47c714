#include "fagnano/report.hpp"

#include <cstdio>

namespace fagnano::report {

namespace {

void dump_into(const Json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += Json(key).dump();
        out += ": ";
        dump_into(value, out, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        dump_into(value, out, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

Json optional_vertex(const std::optional<Vertex>& v) {
  if (!v) return nullptr;
  return std::string(1, vertex_name(*v));
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

std::string dump(const Json& j) {
  std::string out;
  dump_into(j, out, 0);
  out += '\n';
  return out;
}

Json to_json(Point p) { return Json{{"x", p.x}, {"y", p.y}}; }

Json to_json(const AngleTriple& a) { return Json{{"alpha", a.alpha}, {"beta", a.beta}, {"gamma", a.gamma}}; }

Json to_json(const Triangle& t) {
  return Json{{"a", to_json(t.a())}, {"b", to_json(t.b())}, {"c", to_json(t.c())}, {"reoriented", t.reoriented()}};
}

Json to_json(const TriangleClass& c) { return Json{{"kind", to_string(c.kind)}, {"margin", c.margin}}; }

Json to_json(const OrthicResult& r) {
  const auto sides = r.side_lengths();
  return Json{{"foot_from_a", to_json(r.foot_from_a)},
              {"foot_from_b", to_json(r.foot_from_b)},
              {"foot_from_c", to_json(r.foot_from_c)},
              {"angles", to_json(r.angles)},
              {"side_lengths", Json::array({sides[0], sides[1], sides[2]})},
              {"perimeter", r.perimeter}};
}

Json to_json(const InscribedConfig& c) {
  return Json{{"t_on_bc", c.t_on_bc}, {"t_on_ca", c.t_on_ca}, {"t_on_ab", c.t_on_ab}};
}

Json to_json(const TheoremVerdict& v) {
  return Json{{"orthic_is_right", v.orthic_is_right},
              {"right_vertex", optional_vertex(v.right_vertex)},
              {"has_quarter_pi", v.has_quarter_pi},
              {"quarter_pi_vertex", optional_vertex(v.quarter_pi_vertex)},
              {"quarter_pi_unique", v.quarter_pi_unique},
              {"pairing_holds", v.pairing_holds},
              {"biconditional_holds", v.biconditional_holds}};
}

Json to_json(const ProofStepReport& r) {
  return Json{{"b_role", std::string(1, vertex_name(r.b_role))},
              {"quarter_relation_active", r.quarter_relation_active},
              {"angle_sum_residual", r.angle_sum_residual},
              {"bisection_residuals", Json::array({r.bisection_residuals[0], r.bisection_residuals[1],
                                                   r.bisection_residuals[2]})},
              {"quarter_relation_residual", r.quarter_relation_residual},
              {"quad_sum_residual", r.quad_sum_residual},
              {"decomposition_residuals",
               Json::array({r.decomposition_residuals[0], r.decomposition_residuals[1]})}};
}

Json to_json(const ScanReport& r) {
  Json counterexamples = Json::array();
  for (const auto& c : r.counterexamples) {
    counterexamples.push_back(
        Json{{"i", c.i}, {"j", c.j}, {"angles", to_json(c.angles)}, {"verdict", to_json(c.verdict)}});
  }
  return Json{{"grid_resolution", r.grid_resolution},
              {"tol_angle", r.tol_angle},
              {"boundary_band", r.boundary_band},
              {"admissible_nodes", r.admissible_nodes},
              {"samples_skipped", r.samples_skipped},
              {"samples_tested", r.samples_tested},
              {"counterexamples", counterexamples},
              {"passed", r.passed()}};
}

Json to_json(const golden::ValueCheck& c) {
  return Json{{"name", c.name}, {"computed", c.computed}, {"expected", c.expected}, {"residual", c.residual}};
}

Json orthic_document(const Triangle& t, double tol) {
  return Json{{"triangle", to_json(t)},
              {"angles", to_json(angles(t))},
              {"classification", to_json(classify(t, tol))},
              {"orthic", to_json(orthic_triangle(t, tol))}};
}

Json minimize_document(const Triangle& t, const std::string& method, const MinimizeResult& r) {
  Json points = Json::array();
  for (Point p : inscribed_points(t, r.config)) points.push_back(to_json(p));
  Json history = Json::array();
  for (const auto& h : r.history) history.push_back(Json::array({h.iteration, h.perimeter}));
  return Json{{"method", method},
              {"triangle", to_json(t)},
              {"config", to_json(r.config)},
              {"points", points},
              {"perimeter", r.perimeter},
              {"closed_form_perimeter", min_perimeter_closed_form(t)},
              {"iterations", r.iterations},
              {"converged", r.converged},
              {"near_right", r.near_right},
              {"clamped_steps", r.clamped_steps},
              {"history", history}};
}

Json golden_document(const golden::GoldenFigure& fig, const std::vector<golden::ValueCheck>& checks) {
  Json values = Json::array();
  for (const auto& c : checks) values.push_back(to_json(c));
  return Json{{"phi", fig.phi},
              {"points",
               Json{{"A", to_json(fig.a)},
                    {"B", to_json(fig.b)},
                    {"C", to_json(fig.c)},
                    {"D", to_json(fig.d)},
                    {"E", to_json(fig.e)},
                    {"F", to_json(fig.f)},
                    {"G", to_json(fig.g)},
                    {"H", to_json(fig.h)}}},
              {"lengths", Json{{"BG", fig.bg}, {"GE", fig.ge}, {"HE", fig.he}, {"GH", fig.gh}}},
              {"orthic", to_json(fig.orthic)},
              {"values", values},
              {"tolerance", golden::kReproductionTol},
              {"all_within_tolerance", golden::all_within(checks)}};
}

}  // namespace fagnano::report
