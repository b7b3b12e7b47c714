#include "fagnano/theorem.hpp"

#include <algorithm>

namespace fagnano {

namespace {

std::optional<Vertex> unique_match(const AngleTriple& ang, double target, double tol, int& matches) {
  std::optional<Vertex> hit;
  matches = 0;
  for (Vertex v : kVertices) {
    if (std::abs(ang[v] - target) <= tol) {
      ++matches;
      if (!hit) hit = v;
    }
  }
  return hit;
}

bool near_any(const AngleTriple& ang, double target, double band) {
  return std::abs(ang.alpha - target) <= band || std::abs(ang.beta - target) <= band ||
         std::abs(ang.gamma - target) <= band;
}

}  // namespace

TheoremVerdict verdict(const Triangle& t, double tol_angle) {
  const OrthicResult orthic = orthic_triangle(t);
  const AngleTriple parent = angles(t);

  TheoremVerdict v;
  int right_count = 0;
  v.right_vertex = unique_match(orthic.angles, kHalfPi, tol_angle, right_count);
  v.orthic_is_right = right_count > 0;

  int quarter_count = 0;
  v.quarter_pi_vertex = unique_match(parent, kQuarterPi, 0.5 * tol_angle, quarter_count);
  v.has_quarter_pi = quarter_count > 0;
  v.quarter_pi_unique = quarter_count == 1;

  v.biconditional_holds = v.orthic_is_right == (v.has_quarter_pi && v.quarter_pi_unique);
  if (v.orthic_is_right && v.has_quarter_pi) {
    v.pairing_holds = v.right_vertex == v.quarter_pi_vertex;
  }
  return v;
}

double ProofStepReport::max_universal_residual() const {
  return std::max({angle_sum_residual, bisection_residuals[0], bisection_residuals[1], bisection_residuals[2],
                   quad_sum_residual, decomposition_residuals[0], decomposition_residuals[1]});
}

ProofStepReport proof_steps(const Triangle& t, double tol_angle) {
  const OrthicResult orthic = orthic_triangle(t);

  ProofStepReport r;
  for (Vertex v : kVertices) {
    if (std::abs(orthic.angles[v] - kHalfPi) <= tol_angle) {
      r.b_role = v;
      r.quarter_relation_active = true;
      break;
    }
  }

  const Vertex ka = prev(r.b_role);
  const Vertex kb = r.b_role;
  const Vertex kc = next(r.b_role);
  const Point A = t[ka], B = t[kb], C = t[kc];
  const Point D = orthic.foot(ka), E = orthic.foot(kb), F = orthic.foot(kc);

  const double angle_d = angle_at(D, E, F);
  const double angle_e = angle_at(E, F, D);
  const double angle_f = angle_at(F, D, E);
  r.angle_sum_residual = std::abs(angle_d + angle_e + angle_f - kPi);

  const double dfc = angle_at(F, D, C);
  const double cfe = angle_at(F, C, E);
  const double fda = angle_at(D, F, A);
  const double ade = angle_at(D, A, E);
  const double feb = angle_at(E, F, B);
  const double bed = angle_at(E, B, D);
  r.bisection_residuals = {std::abs(dfc - cfe), std::abs(fda - ade), std::abs(feb - bed)};

  r.quarter_relation_residual = std::abs(cfe + ade - kQuarterPi);

  const double angle_b = angle_at(B, F, D);
  const double bfe = angle_at(F, B, E);
  const double bde = angle_at(D, B, E);
  r.quad_sum_residual = std::abs(angle_b + angle_e + bfe + bde - 2.0 * kPi);
  r.decomposition_residuals = {std::abs(bfe - kHalfPi - cfe), std::abs(bde - kHalfPi - ade)};
  return r;
}

double incenter_orthocenter_check(const Triangle& t) {
  const OrthicResult orthic = orthic_triangle(t);
  const Triangle feet(orthic.foot_from_a, orthic.foot_from_b, orthic.foot_from_c);
  return distance(incenter(feet), orthocenter(t)) / t.diameter();
}

int admissible_node_count(int grid_resolution) {
  const int n = grid_resolution;
  int count = 0;
  for (int i = 1; 2 * i < n; ++i) {
    for (int j = 1; 2 * j < n; ++j) {
      const int k = n - i - j;
      if (k >= 1 && 2 * k < n) ++count;
    }
  }
  return count;
}

ScanReport scan_angle_space(int grid_resolution, double tol_angle, double boundary_band) {
  if (grid_resolution < 8) throw PreconditionError("grid_resolution must be at least 8");
  if (!(tol_angle > 0.0)) throw PreconditionError("tol_angle must be positive");
  if (!(boundary_band > tol_angle)) throw PreconditionError("boundary_band must exceed tol_angle");

  ScanReport report;
  report.grid_resolution = grid_resolution;
  report.tol_angle = tol_angle;
  report.boundary_band = boundary_band;

  const int n = grid_resolution;
  const double step = kPi / n;
  for (int i = 1; 2 * i < n; ++i) {
    for (int j = 1; 2 * j < n; ++j) {
      const int k = n - i - j;
      if (k < 1 || 2 * k >= n) continue;
      ++report.admissible_nodes;

      const Triangle t = triangle_from_angles(i * step, j * step, k * step);
      const AngleTriple parent = angles(t);
      const AngleTriple orthic = orthic_triangle(t).angles;
      if (near_any(parent, kQuarterPi, boundary_band) || near_any(orthic, kHalfPi, boundary_band)) {
        ++report.samples_skipped;
        continue;
      }
      ++report.samples_tested;
      const TheoremVerdict v = verdict(t, tol_angle);
      if (!v.biconditional_holds || !v.pairing_holds) {
        report.counterexamples.push_back({i, j, parent, v});
      }
    }
  }
  return report;
}

}  // namespace fagnano
