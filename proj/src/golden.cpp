#include "fagnano/golden.hpp"

#include <algorithm>
#include <stdexcept>

namespace fagnano::golden {

namespace {

void expect(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("golden figure invariant violated: ") + what);
}

Vertex vertex_at(const Triangle& t, Point p) {
  for (Vertex v : kVertices) {
    if (t[v] == p) return v;
  }
  throw std::logic_error("point is not a vertex of the triangle");
}

bool on_segment_line(Point p, Point u, Point v) {
  return std::abs(cross(v - u, p - u)) <= 1e-12 * dot(v - u, v - u);
}

}  // namespace

double golden_ratio() { return (1.0 + std::sqrt(5.0)) / 2.0; }

GoldenFigure build() {
  const double phi = golden_ratio();
  GoldenFigure fig{.phi = phi,
                   .a = {0.0, 0.0},
                   .b = {1.0, 0.0},
                   .c = {1.0, phi},
                   .d = {0.0, phi},
                   .e = {1.0, 1.0},
                   .f = {0.0, 1.0},
                   .triangle_bfc = Triangle({1.0, 0.0}, {0.0, 1.0}, {1.0, phi}),
                   .orthic = {},
                   .g = {},
                   .h = {},
                   .e_orthic = {}};

  expect(std::abs(phi * phi - (phi + 1.0)) <= 1e-15, "phi^2 = phi + 1");
  expect(std::abs(distance(fig.a, fig.b) - 1.0) <= 1e-15, "|AB| = 1");
  expect(std::abs(distance(fig.b, fig.c) - phi) <= 1e-15, "|BC| = phi");

  const std::array<Point, 4> square{fig.a, fig.b, fig.e, fig.f};
  for (std::size_t i = 0; i < 4; ++i) {
    const Point p = square[i];
    const Point q = square[(i + 1) % 4];
    const Point r = square[(i + 2) % 4];
    expect(std::abs(distance(p, q) - 1.0) <= 1e-12, "ABEF has unit sides");
    expect(std::abs(angle_at(q, p, r) - kHalfPi) <= 1e-12, "ABEF has right angles");
  }
  const double small_long = distance(fig.f, fig.e);
  const double small_short = distance(fig.e, fig.c);
  expect(std::abs(small_long / small_short - phi) <= 1e-12, "FECD is a golden rectangle");

  const Triangle& t = fig.triangle_bfc;
  const Vertex at_b = vertex_at(t, fig.b);
  const Vertex at_c = vertex_at(t, fig.c);
  const Vertex at_f = vertex_at(t, fig.f);

  fig.orthic = orthic_triangle(t);
  fig.g = fig.orthic.foot(at_c);
  fig.h = fig.orthic.foot(at_b);
  fig.e_orthic = fig.orthic.foot(at_f);

  expect(on_segment_line(fig.g, fig.b, fig.f), "G lies on BF");
  expect(on_segment_line(fig.h, fig.f, fig.c), "H lies on FC");
  expect(on_segment_line(fig.e_orthic, fig.b, fig.c), "E lies on BC");
  expect(distance(fig.e_orthic, fig.e) <= 1e-15, "foot from F coincides with the square corner E");

  fig.bg = distance(fig.b, fig.g);
  fig.ge = distance(fig.g, fig.e_orthic);
  fig.he = distance(fig.h, fig.e_orthic);
  fig.gh = distance(fig.g, fig.h);
  return fig;
}

double law_of_cosines(double p, double q, double included_angle) {
  if (!(p > 0.0) || !(q > 0.0)) throw PreconditionError("law_of_cosines needs positive sides");
  if (!(included_angle > 0.0 && included_angle < kPi)) {
    throw PreconditionError("law_of_cosines needs an included angle in (0, pi)");
  }
  return std::sqrt(p * p + q * q - 2.0 * p * q * std::cos(included_angle));
}

std::vector<ValueCheck> reproduce_reference_values(const GoldenFigure& fig) {
  const double phi = fig.phi;
  const double phi2 = phi * phi;
  const double sqrt2 = std::sqrt(2.0);
  const double sqrt5 = std::sqrt(5.0);

  const double bg_closed = phi / sqrt2;
  const double ge_closed = std::sqrt((1.0 + phi2) / (2.0 * phi2));
  const double he_closed = std::sqrt(2.0 / (1.0 + phi2));

  std::array<double, 3> sides{fig.gh, fig.he, fig.ge};
  std::sort(sides.begin(), sides.end());

  std::vector<ValueCheck> out;
  auto add = [&out](std::string name, double computed, double expected) {
    out.push_back({std::move(name), computed, expected, std::abs(computed - expected)});
  };
  add("BG", fig.bg, bg_closed);
  add("GE", fig.ge, ge_closed);
  add("GE_law_of_cosines",
      law_of_cosines(fig.bg, distance(fig.b, fig.e_orthic), angle_at(fig.b, fig.g, fig.e_orthic)), ge_closed);
  add("HE", fig.he, he_closed);
  add("GE/HE", fig.ge / fig.he, sqrt5 / 2.0);
  add("GH", fig.gh, ge_closed / sqrt5);
  add("angle_B", angle_at(fig.b, fig.f, fig.c), kQuarterPi);
  add("angle_H", angle_at(fig.h, fig.g, fig.e_orthic), kHalfPi);
  add("GH^2+HE^2-GE^2", fig.gh * fig.gh + fig.he * fig.he - fig.ge * fig.ge, 0.0);
  add("ratio_1", sides[0] / sides[0], 1.0);
  add("ratio_2", sides[1] / sides[0], 2.0);
  add("ratio_sqrt5", sides[2] / sides[0], sqrt5);
  add("orthic_perimeter", fig.orthic.perimeter, (3.0 + sqrt5) * ge_closed / sqrt5);
  return out;
}

bool all_within(const std::vector<ValueCheck>& checks, double tol) {
  return std::all_of(checks.begin(), checks.end(), [tol](const ValueCheck& c) { return c.residual <= tol; });
}

}  // namespace fagnano::golden
