#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fagnano/optimizer.hpp"
#include "support/oracles.hpp"

using namespace fagnano;
using fagnano::testing::equilateral;
using fagnano::testing::golden_bfc;
using fagnano::testing::golden_phi;
using fagnano::testing::RandomAcute;

namespace {

double max_param_error(const InscribedConfig& a, const InscribedConfig& b) {
  const auto x = a.as_array(), y = b.as_array();
  return std::max({std::abs(x[0] - y[0]), std::abs(x[1] - y[1]), std::abs(x[2] - y[2])});
}

// Golden orthic perimeter from the closed forms: sides GH : HE : GE = 1 : 2 : sqrt5.
double golden_closed_perimeter() {
  const double phi = golden_phi();
  const double ge = std::sqrt((1 + phi * phi) / (2 * phi * phi));
  return (1 + 2 + std::sqrt(5.0)) * std::sqrt(ge * ge / 5);
}

}  // namespace

TEST_CASE("inscribed config validation") {
  CHECK_NOTHROW(InscribedConfig(0.1, 0.5, 0.9));
  CHECK_THROWS_AS(InscribedConfig(0.0, 0.5, 0.5), PreconditionError);
  CHECK_THROWS_AS(InscribedConfig(0.5, 1.0, 0.5), PreconditionError);
  CHECK_THROWS_AS(InscribedConfig(0.5, 0.5, -0.1), PreconditionError);
  CHECK_THROWS_AS(InscribedConfig(0.5, 0.5, std::nan("")), PreconditionError);
}

TEST_CASE("side points follow the affine convention") {
  const Triangle t = equilateral();
  CHECK(side_point(t, Vertex::A, 0.0) == t.b());
  CHECK(side_point(t, Vertex::A, 1.0) == t.c());
  CHECK(side_point(t, Vertex::B, 0.0) == t.c());
  CHECK(side_point(t, Vertex::C, 1.0) == t.b());
}

TEST_CASE("objective") {
  const Triangle eq = equilateral();
  CHECK(std::abs(objective(eq, {0.5, 0.5, 0.5}) - 1.5) <= 1e-15);

  // Adjacent quarter points are 0.75 and 0.25 from a shared 60 degree corner.
  const double quarter = 3 * std::sqrt(0.25 * 0.25 + 0.75 * 0.75 - 2 * 0.25 * 0.75 * std::cos(kPi / 3));
  CHECK(std::abs(quarter - 1.984313483298443) <= 1e-12);
  CHECK(std::abs(objective(eq, {0.25, 0.25, 0.25}) - quarter) <= 1e-12);

  const Triangle g = golden_bfc();
  CHECK(std::abs(objective(g, orthic_config(g)) - orthic_triangle(g).perimeter) <= 1e-12);

  CHECK_THROWS_AS(objective(Triangle({0, 0}, {1, 0}, {0, 1}), {0.5, 0.5, 0.5}), PreconditionError);
  InscribedConfig bad;
  bad.t_on_ca = 1.5;
  CHECK_THROWS_AS(objective(eq, bad), PreconditionError);
}

TEST_CASE("orthic config maps back onto the feet") {
  RandomAcute gen(21);
  for (int k = 0; k < 500; ++k) {
    const Triangle t = gen.next();
    const auto pts = inscribed_points(t, orthic_config(t));
    const OrthicResult o = orthic_triangle(t);
    CHECK(distance(pts[0], o.foot_from_a) <= 1e-12 * t.diameter());
    CHECK(distance(pts[1], o.foot_from_b) <= 1e-12 * t.diameter());
    CHECK(distance(pts[2], o.foot_from_c) <= 1e-12 * t.diameter());
  }
}

TEST_CASE("grid then simplex") {
  SUBCASE("equilateral") {
    const MinimizeResult r = minimize_grid_then_simplex(equilateral());
    CHECK(r.converged);
    CHECK(std::abs(r.perimeter - 1.5) <= 1e-12);
    CHECK(max_param_error(r.config, {0.5, 0.5, 0.5}) <= 1e-6);
    CHECK_FALSE(r.near_right);
  }
  SUBCASE("golden triangle matches the closed-form values") {
    const MinimizeResult r = minimize_grid_then_simplex(golden_bfc());
    CHECK(r.converged);
    CHECK(std::abs(r.perimeter / golden_closed_perimeter() - 1) <= 1e-12);
  }
  SUBCASE("(pi/4, pi/3, 5pi/12) on unit circumradius") {
    const Triangle t = triangle_from_angles(kPi / 4, kPi / 3, 5 * kPi / 12);
    const MinimizeResult r = minimize_grid_then_simplex(t);
    CHECK(std::abs(r.perimeter / min_perimeter_closed_form(t) - 1) <= 1e-6);
  }
  SUBCASE("never worse than any grid node, history non-increasing") {
    const Triangle t = triangle_from_angles(0.5, 1.2, kPi - 1.7);
    const int n = 6;
    const MinimizeResult r = minimize_grid_then_simplex(t, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          CHECK(r.perimeter <= objective(t, {(i + 0.5) / n, (j + 0.5) / n, (k + 0.5) / n}));
        }
      }
    }
    for (std::size_t i = 1; i < r.history.size(); ++i) CHECK(r.history[i].perimeter <= r.history[i - 1].perimeter);
    CHECK(std::abs(r.perimeter - objective(t, r.config)) <= 1e-12);
  }
  SUBCASE("forced non-convergence is a result, not an error") {
    const MinimizeResult r = minimize_grid_then_simplex(golden_bfc(), kDefaultGridN, 1);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 1);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(minimize_grid_then_simplex(Triangle({0, 0}, {1, 0}, {2, 0.1})), PreconditionError);
    CHECK_THROWS_AS(minimize_grid_then_simplex(equilateral(), 3), PreconditionError);
    CHECK_THROWS_AS(minimize_grid_then_simplex(equilateral(), 16, 100, 0.0), PreconditionError);
  }
  SUBCASE("near-right parents carry a warning") {
    const Triangle t = triangle_from_angles(kHalfPi - 5e-4, 0.7, kHalfPi - 0.7 + 5e-4);
    CHECK(minimize_grid_then_simplex(t).near_right);
  }
}

TEST_CASE("reflection descent") {
  SUBCASE("equilateral from an asymmetric start") {
    const MinimizeResult r = minimize_reflection_descent(equilateral(), {0.3, 0.6, 0.45});
    CHECK(r.converged);
    CHECK(max_param_error(r.config, {0.5, 0.5, 0.5}) <= 1e-10);
    CHECK(std::abs(r.perimeter - 1.5) <= 1e-14);
  }
  SUBCASE("golden triangle reaches the orthic feet") {
    const Triangle g = golden_bfc();
    const MinimizeResult r = minimize_reflection_descent(g, {0.5, 0.5, 0.5});
    CHECK(r.converged);
    CHECK(r.clamped_steps == 0);
    CHECK(max_param_error(r.config, orthic_config(g)) <= 1e-8);
  }
  SUBCASE("the orthic configuration is a fixed point") {
    RandomAcute gen(22);
    for (int k = 0; k < 200; ++k) {
      const Triangle t = gen.next();
      const InscribedConfig start = orthic_config(t);
      const MinimizeResult r = minimize_reflection_descent(t, start);
      CHECK(r.converged);
      CHECK(r.history.size() == 1);
      CHECK(max_param_error(r.config, start) <= 1e-12);
    }
  }
  SUBCASE("each coordinate step is optimal for its sub-problem") {
    const Triangle t = triangle_from_angles(0.6, 1.1, kPi - 1.7);
    const MinimizeResult one = minimize_reflection_descent(t, {0.2, 0.7, 0.4}, 1);
    CHECK_FALSE(one.converged);
    // After a full sweep the last coordinate (on ab) is exactly optimal with
    // the other two fixed.
    const auto p = one.config.as_array();
    const double here = objective(t, one.config);
    for (double h : {1e-4, -1e-4, 1e-3, -1e-3}) {
      CHECK(objective(t, {p[0], p[1], p[2] + h}) > here);
    }
  }
  SUBCASE("monotone history from random starts") {
    RandomAcute gen(23);
    for (int k = 0; k < 200; ++k) {
      const Triangle t = gen.next();
      const InscribedConfig start(gen.uniform(0.01, 0.99), gen.uniform(0.01, 0.99), gen.uniform(0.01, 0.99));
      const MinimizeResult r = minimize_reflection_descent(t, start);
      CHECK(r.converged);
      for (std::size_t i = 1; i < r.history.size(); ++i) CHECK(r.history[i].perimeter < r.history[i - 1].perimeter);
      CHECK(std::abs(r.perimeter - objective(t, r.config)) <= 1e-12 * t.diameter());
      CHECK(std::abs(r.perimeter / min_perimeter_closed_form(t) - 1) <= 1e-12);
    }
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(minimize_reflection_descent(Triangle({0, 0}, {1, 0}, {0, 1}), {}), PreconditionError);
  }
}

TEST_CASE("closed form") {
  CHECK(std::abs(min_perimeter_closed_form(equilateral()) - 1.5) <= 1e-15);
  CHECK(std::abs(min_perimeter_closed_form(golden_bfc()) / golden_closed_perimeter() - 1) <= 1e-13);
  const double phi = golden_phi();
  CHECK(std::abs(std::sqrt((1 + phi * phi) / (2 * phi * phi)) - 0.8312538755549068) <= 1e-15);
  CHECK_THROWS_AS(min_perimeter_closed_form(Triangle({0, 0}, {1, 0}, {2, 0.1})), PreconditionError);
}

TEST_CASE("stationarity of the orthic configuration") {
  RandomAcute gen(24, 1e-3);
  for (int k = 0; k < 500; ++k) {
    const Triangle t = gen.next();
    const auto p = orthic_config(t).as_array();
    const double best = objective(t, orthic_config(t));
    for (std::size_t d = 0; d < 3; ++d) {
      for (double h : {1e-4, -1e-4}) {
        auto q = p;
        q[d] += h;
        CHECK(objective(t, {q[0], q[1], q[2]}) > best);
      }
    }
  }
}

TEST_CASE("scale equivariance") {
  RandomAcute gen(25, 1e-3);
  for (int k = 0; k < 50; ++k) {
    const auto pts = RandomAcute::on_unit_circle(gen.next_angles());
    const double s = gen.uniform(0.01, 100.0);
    const Triangle t(pts[0], pts[1], pts[2]);
    const Triangle ts(s * pts[0], s * pts[1], s * pts[2]);
    const MinimizeResult r = minimize_grid_then_simplex(t);
    const MinimizeResult rs = minimize_grid_then_simplex(ts);
    CHECK(max_param_error(r.config, rs.config) <= 1e-6);
    CHECK(std::abs(rs.perimeter / (s * r.perimeter) - 1) <= 1e-9);
  }
}
