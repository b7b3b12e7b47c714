#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fagnano/geometry.hpp"

namespace fagnano {

// Evaluation of the right-orthic characterization on one acute triangle:
// the orthic triangle is right iff the parent has exactly one pi/4 angle, and
// the right angle then sits at the foot of the altitude from that vertex.
struct TheoremVerdict {
  bool orthic_is_right = false;
  std::optional<Vertex> right_vertex;  // foot_from_X hosting the right angle
  bool has_quarter_pi = false;
  std::optional<Vertex> quarter_pi_vertex;
  bool quarter_pi_unique = false;
  // Vacuously true unless both sides of the biconditional hold.
  bool pairing_holds = true;
  bool biconditional_holds = true;
};

// Orthic angle compared with pi/2 at tol_angle; parent angles compared with
// pi/4 at tol_angle / 2, since the orthic angle at foot_from_X is pi - 2 X.
TheoremVerdict verdict(const Triangle& t, double tol_angle = kClassificationTol);

// Residuals of every identity in the classical argument, measured from the
// coordinates of A, B, C and the feet D (from A), E (from B), F (from C).
//
// Labels are rotated cyclically so that B is the vertex whose foot hosts a
// right orthic angle when there is one; otherwise B is the triangle's b.
struct ProofStepReport {
  Vertex b_role = Vertex::B;
  bool quarter_relation_active = false;  // angle DEF within tolerance of pi/2
  double angle_sum_residual = 0.0;                  // |D + E + F - pi|
  std::array<double, 3> bisection_residuals{};      // |DFC - CFE|, |FDA - ADE|, |FEB - BED|
  double quarter_relation_residual = 0.0;           // |CFE + ADE - pi/4|
  double quad_sum_residual = 0.0;                   // |B + E + BFE + BDE - 2 pi|
  std::array<double, 2> decomposition_residuals{};  // |BFE - pi/2 - CFE|, |BDE - pi/2 - ADE|

  // Largest of the residuals that hold for every acute triangle.
  double max_universal_residual() const;
};

ProofStepReport proof_steps(const Triangle& t, double tol_angle = kClassificationTol);

// |incenter(orthic(t)) - orthocenter(t)| / diameter(t).
double incenter_orthocenter_check(const Triangle& t);

struct Counterexample {
  int i = 0;  // grid indices: alpha = i pi / N, beta = j pi / N
  int j = 0;
  AngleTriple angles;
  TheoremVerdict verdict;
};

struct ScanReport {
  int grid_resolution = 0;
  double tol_angle = 0.0;
  double boundary_band = 0.0;
  int admissible_nodes = 0;
  int samples_skipped = 0;  // inside the knife-edge band
  int samples_tested = 0;
  std::vector<Counterexample> counterexamples;

  bool passed() const { return counterexamples.empty(); }
};

inline constexpr double kDefaultBoundaryBand = 1e-6;

// Number of grid nodes (i, j), 1 <= i, j, with i, j and N - i - j all below
// N / 2: the acute angle pairs on a step of pi / N.
int admissible_node_count(int grid_resolution);

// Walks the acute angle grid, instantiates each node on the unit circumcircle
// and collects every node where the biconditional or the pairing fails.
// Nodes with a parent angle within boundary_band of pi/4, or an orthic angle
// within boundary_band of pi/2, are skipped.
ScanReport scan_angle_space(int grid_resolution, double tol_angle = kClassificationTol,
                            double boundary_band = kDefaultBoundaryBand);

}  // namespace fagnano
