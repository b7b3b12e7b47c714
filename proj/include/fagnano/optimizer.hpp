#pragma once

#include <array>
#include <vector>

#include "fagnano/geometry.hpp"

namespace fagnano {

// One point per side of a triangle, each picked by an affine parameter in
// the open interval (0, 1):
//   on bc: b + t_on_bc (c - b),  on ca: c + t_on_ca (a - c),  on ab: a + t_on_ab (b - a).
struct InscribedConfig {
  double t_on_bc = 0.5;
  double t_on_ca = 0.5;
  double t_on_ab = 0.5;

  InscribedConfig() = default;
  // Throws PreconditionError unless every parameter lies strictly in (0, 1).
  InscribedConfig(double on_bc, double on_ca, double on_ab);

  std::array<double, 3> as_array() const { return {t_on_bc, t_on_ca, t_on_ab}; }
  // Parameter for the side hosting the foot from `v` (bc for A, ca for B, ab for C).
  double operator[](Vertex v) const { return as_array()[index_of(v)]; }
};

bool is_valid(const InscribedConfig& c);

// The point selected on the side opposite `v`.
Point side_point(const Triangle& t, Vertex v, double param);
std::array<Point, 3> inscribed_points(const Triangle& t, const InscribedConfig& c);

// Parameters of the orthic feet; every parameter is interior for acute t.
InscribedConfig orthic_config(const Triangle& t);

struct HistoryEntry {
  int iteration = 0;
  double perimeter = 0.0;
};

struct MinimizeResult {
  InscribedConfig config;
  double perimeter = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<HistoryEntry> history;
  // Parent within kNearRightMargin of a right angle; the minimum is ill-conditioned.
  bool near_right = false;
  // Reflection descent only: number of coordinate steps clamped into the interior.
  int clamped_steps = 0;
};

inline constexpr double kNearRightMargin = 1e-3;
inline constexpr double kClampMargin = 1e-9;
inline constexpr int kDefaultGridN = 16;
inline constexpr int kDefaultMaxIter = 10000;
inline constexpr double kDefaultSimplexTol = 1e-10;
inline constexpr double kDefaultDescentTol = 1e-15;
// Reflection descent also waits for the coordinate steps to settle below this.
inline constexpr double kDescentStepTol = 1e-12;

// Perimeter of the inscribed triangle selected by `c`.
double objective(const Triangle& t, const InscribedConfig& c);

// Coarse grid over the open cube followed by Nelder-Mead refinement seeded at
// the best grid node. Converged means the simplex diameter fell below `tol`.
MinimizeResult minimize_grid_then_simplex(const Triangle& t, int grid_n = kDefaultGridN,
                                          int max_iter = kDefaultMaxIter,
                                          double tol = kDefaultSimplexTol);

// Exact cyclic coordinate descent. Each step fixes two inscribed vertices and
// moves the third to the optimal point of its side: reflect one fixed vertex
// across the side line and intersect the straight segment with the side.
// Converged when a sweep lowers the perimeter by less than tol * perimeter
// and no parameter moved more than kDescentStepTol. History records only
// sweeps with measurable progress, so it is strictly decreasing.
MinimizeResult minimize_reflection_descent(const Triangle& t, const InscribedConfig& start,
                                           int max_iter = kDefaultMaxIter,
                                           double tol = kDefaultDescentTol);

// Closed-form answer: the orthic perimeter.
double min_perimeter_closed_form(const Triangle& t);

}  // namespace fagnano
