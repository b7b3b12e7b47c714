#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fagnano/golden.hpp"
#include "fagnano/optimizer.hpp"
#include "fagnano/theorem.hpp"

using namespace fagnano;

namespace {

const golden::ValueCheck& find(const std::vector<golden::ValueCheck>& checks, const std::string& name) {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  FAIL("missing check " << name);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("build") {
  const auto fig = golden::build();
  CHECK(fig.phi == 1.6180339887498949);
  CHECK(std::abs(fig.phi * fig.phi - fig.phi - 1) <= 1e-15);
  CHECK(std::abs(angles(fig.triangle_bfc)[Vertex::A] - kQuarterPi) <= 1e-15);
  CHECK(fig.triangle_bfc.a() == fig.b);
  CHECK(classify(fig.triangle_bfc).kind == TriangleKind::Acute);

  // The square corner E is the foot of the altitude from F.
  CHECK(distance(fig.e, fig.e_orthic) <= 1e-15);
  // Rectangle FECD is similar to ABCD with ratio 1/phi.
  const double big = distance(fig.b, fig.c) / distance(fig.a, fig.b);
  const double small = distance(fig.f, fig.e) / distance(fig.e, fig.c);
  CHECK(std::abs(big - small) <= 1e-12);
  CHECK(std::abs(distance(fig.e, fig.c) / distance(fig.a, fig.b) - 1 / fig.phi) <= 1e-12);
}

TEST_CASE("reproduced values") {
  const auto fig = golden::build();
  const auto checks = golden::reproduce_reference_values(fig);
  CHECK(golden::all_within(checks));
  for (const auto& c : checks) {
    INFO(c.name);
    CHECK(c.residual <= 1e-12);
  }

  // Frozen double-precision evaluations of the closed forms.
  CHECK(std::abs(find(checks, "BG").expected - 1.1441228056353685) <= 1e-16);
  CHECK(std::abs(find(checks, "GE").expected - 0.8312538755549068) <= 1e-16);
  CHECK(std::abs(find(checks, "HE").expected - 0.7434960689203689) <= 1e-16);
  CHECK(find(checks, "GE/HE").expected == 1.1180339887498949);
  CHECK(std::abs(find(checks, "GE/HE").computed - 1.1180339887498949) <= 1e-12);
  CHECK(find(checks, "ratio_2").expected == 2.0);
  CHECK(find(checks, "ratio_sqrt5").expected == std::sqrt(5.0));
}

TEST_CASE("GE three ways") {
  const auto fig = golden::build();
  const double phi = fig.phi;
  const double closed = std::sqrt((1 + phi * phi) / (2 * phi * phi));
  const double by_cosines = golden::law_of_cosines(phi / std::sqrt(2.0), 1.0, kQuarterPi);
  CHECK(std::abs(fig.ge - closed) <= 1e-12);
  CHECK(std::abs(fig.ge - by_cosines) <= 1e-12);
  CHECK(std::abs(closed - by_cosines) <= 1e-12);
}

TEST_CASE("right angle at H") {
  const auto fig = golden::build();
  CHECK(std::abs(fig.gh * fig.gh + fig.he * fig.he - fig.ge * fig.ge) <= 1e-12);
  CHECK(std::abs(angle_at(fig.h, fig.g, fig.e) - kHalfPi) <= 1e-12);
}

TEST_CASE("the example is an instance of the characterization") {
  const auto fig = golden::build();
  const TheoremVerdict v = verdict(fig.triangle_bfc);
  CHECK(v.biconditional_holds);
  CHECK(v.pairing_holds);
  REQUIRE(v.quarter_pi_vertex.has_value());
  CHECK(fig.triangle_bfc[*v.quarter_pi_vertex] == fig.b);
}

TEST_CASE("orthic perimeter agrees with the numerical minimizer") {
  const auto fig = golden::build();
  const MinimizeResult r = minimize_grid_then_simplex(fig.triangle_bfc);
  CHECK(std::abs(r.perimeter / fig.orthic.perimeter - 1) <= 1e-6);
}

TEST_CASE("law of cosines") {
  CHECK(std::abs(golden::law_of_cosines(1, 1, kPi / 3) - 1) <= 1e-15);
  CHECK(std::abs(golden::law_of_cosines(3, 4, kHalfPi) - 5) <= 1e-15);
  CHECK_THROWS_AS(golden::law_of_cosines(0, 1, 1), PreconditionError);
  CHECK_THROWS_AS(golden::law_of_cosines(1, -2, 1), PreconditionError);
  CHECK_THROWS_AS(golden::law_of_cosines(1, 1, kPi), PreconditionError);
}
