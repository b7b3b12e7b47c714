#pragma once

#include <string>
#include <vector>

#include "fagnano/geometry.hpp"

namespace fagnano::golden {

// Golden rectangle ABCD (AB = 1, BC = phi) split into the unit square ABEF
// and the small golden rectangle FECD, with the orthic triangle GHE of BFC:
//   G = foot from C on BF, H = foot from B on FC, E = foot from F on BC.
//
// Embedding: A=(0,0) B=(1,0) C=(1,phi) D=(0,phi) E=(1,1) F=(0,1).
struct GoldenFigure {
  double phi = 0.0;
  Point a, b, c, d, e, f;
  Triangle triangle_bfc;
  OrthicResult orthic;
  Point g, h;  // orthic vertices besides E
  // Orthic vertex on BC, constructed independently of the square corner e.
  Point e_orthic;
  double bg = 0.0;
  double ge = 0.0;
  double he = 0.0;
  double gh = 0.0;
};

double golden_ratio();

// Builds the figure and asserts its structural invariants, throwing
// std::logic_error if any fails.
GoldenFigure build();

struct ValueCheck {
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
  double residual = 0.0;
};

inline constexpr double kReproductionTol = 1e-12;

// Coordinate measurements of the figure against the closed forms
// BG = phi/sqrt2, GE = sqrt((1+phi^2)/(2 phi^2)), HE = sqrt(2/(1+phi^2)),
// GE/HE = sqrt5/2, and the (1, 2, sqrt5) side proportions.
std::vector<ValueCheck> reproduce_reference_values(const GoldenFigure& fig);

bool all_within(const std::vector<ValueCheck>& checks, double tol = kReproductionTol);

// sqrt(p^2 + q^2 - 2 p q cos(included_angle)); p, q > 0, angle in (0, pi).
double law_of_cosines(double p, double q, double included_angle);

}  // namespace fagnano::golden
