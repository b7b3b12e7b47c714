#include "fagnano/optimizer.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <string>

namespace fagnano {

namespace {

using Params = std::array<double, 3>;

constexpr int kStagnationLimit = 24;

bool in_open_cube(const Params& p) {
  return std::all_of(p.begin(), p.end(), [](double v) { return v > 0.0 && v < 1.0; });
}

InscribedConfig to_config(const Params& p) { return InscribedConfig(p[0], p[1], p[2]); }

double perimeter_at(const Triangle& t, const Params& p) {
  const Point d = side_point(t, Vertex::A, p[0]);
  const Point e = side_point(t, Vertex::B, p[1]);
  const Point f = side_point(t, Vertex::C, p[2]);
  return perimeter(d, e, f);
}

double simplex_diameter(const std::array<Params, 4>& s) {
  double diam = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const double dx = s[i][0] - s[j][0];
      const double dy = s[i][1] - s[j][1];
      const double dz = s[i][2] - s[j][2];
      diam = std::max(diam, std::sqrt(dx * dx + dy * dy + dz * dz));
    }
  }
  return diam;
}

Params affine(const Params& from, const Params& to, double coeff) {
  // from + coeff * (to - from)
  return {from[0] + coeff * (to[0] - from[0]), from[1] + coeff * (to[1] - from[1]),
          from[2] + coeff * (to[2] - from[2])};
}

// Optimal parameter on the side opposite `v` with the other two inscribed
// points fixed. Returns the unclamped value.
double best_on_side(const Triangle& t, Vertex v, Point q, Point r, double current) {
  const Point start = t[next(v)];
  const Point dir = t[prev(v)] - start;
  const double len2 = dot(dir, dir);
  const Point r_foot = start + (dot(r - start, dir) / len2) * dir;
  const Point r_mirror = 2.0 * r_foot - r;
  const double dq = cross(dir, q - start);
  const double dr = cross(dir, r_mirror - start);
  if (dq == dr) return current;
  const Point hit = q + (dq / (dq - dr)) * (r_mirror - q);
  return dot(hit - start, dir) / len2;
}

void check_inputs(const Triangle& t) { require_acute(t); }

}  // namespace

InscribedConfig::InscribedConfig(double on_bc, double on_ca, double on_ab)
    : t_on_bc(on_bc), t_on_ca(on_ca), t_on_ab(on_ab) {
  if (!is_valid(*this)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "inscribed parameters must lie in (0, 1), got (%.17g, %.17g, %.17g)",
                  on_bc, on_ca, on_ab);
    throw PreconditionError(buf);
  }
}

bool is_valid(const InscribedConfig& c) { return in_open_cube(c.as_array()); }

Point side_point(const Triangle& t, Vertex v, double param) {
  const Point start = t[next(v)];
  return start + param * (t[prev(v)] - start);
}

std::array<Point, 3> inscribed_points(const Triangle& t, const InscribedConfig& c) {
  return {side_point(t, Vertex::A, c.t_on_bc), side_point(t, Vertex::B, c.t_on_ca),
          side_point(t, Vertex::C, c.t_on_ab)};
}

InscribedConfig orthic_config(const Triangle& t) {
  require_acute(t);
  Params p{};
  for (Vertex v : kVertices) {
    const Point start = t[next(v)];
    const Point dir = t[prev(v)] - start;
    p[index_of(v)] = dot(foot_of_altitude(t, v) - start, dir) / dot(dir, dir);
  }
  return to_config(p);
}

double objective(const Triangle& t, const InscribedConfig& c) {
  check_inputs(t);
  if (!is_valid(c)) throw PreconditionError("inscribed parameters must lie in (0, 1)");
  return perimeter_at(t, c.as_array());
}

MinimizeResult minimize_grid_then_simplex(const Triangle& t, int grid_n, int max_iter, double tol) {
  check_inputs(t);
  if (grid_n < 4) throw PreconditionError("grid_n must be at least 4");
  if (!(tol > 0.0)) throw PreconditionError("tol must be positive");

  auto f = [&t](const Params& p) {
    return in_open_cube(p) ? perimeter_at(t, p) : std::numeric_limits<double>::infinity();
  };

  // Stage 1: cell-centred grid, every node strictly interior.
  const double h = 1.0 / grid_n;
  Params best{};
  double best_f = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      for (int k = 0; k < grid_n; ++k) {
        const Params p{(i + 0.5) * h, (j + 0.5) * h, (k + 0.5) * h};
        const double v = f(p);
        if (v < best_f) {
          best_f = v;
          best = p;
        }
      }
    }
  }

  // Stage 2: Nelder-Mead, initial edges of half a cell pointing inwards.
  std::array<Params, 4> simplex{best, best, best, best};
  for (std::size_t d = 0; d < 3; ++d) {
    simplex[d + 1][d] += best[d] < 0.5 ? 0.5 * h : -0.5 * h;
  }
  std::array<double, 4> values{};
  for (std::size_t i = 0; i < 4; ++i) values[i] = f(simplex[i]);

  MinimizeResult result;
  result.near_right = classify(t).margin < kNearRightMargin;
  result.history.push_back({0, best_f});

  int stagnant = 0;
  int iter = 0;
  for (; iter < max_iter; ++iter) {
    // Insertion sort by value, best first.
    for (std::size_t i = 1; i < 4; ++i) {
      for (std::size_t j = i; j > 0 && values[j] < values[j - 1]; --j) {
        std::swap(values[j], values[j - 1]);
        std::swap(simplex[j], simplex[j - 1]);
      }
    }
    if (values[0] < result.history.back().perimeter) {
      result.history.push_back({iter, values[0]});
      stagnant = 0;
    } else {
      ++stagnant;
    }
    if (simplex_diameter(simplex) < tol) {
      result.converged = true;
      break;
    }
    // Near the optimum perimeter differences drown in rounding and the
    // simplex can wander without shrinking; force a shrink towards the best.
    if (stagnant >= kStagnationLimit) {
      for (std::size_t i = 1; i < 4; ++i) {
        simplex[i] = affine(simplex[0], simplex[i], 0.5);
        values[i] = f(simplex[i]);
      }
      stagnant = 0;
      continue;
    }

    Params centroid{};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t d = 0; d < 3; ++d) centroid[d] += simplex[i][d] / 3.0;
    }
    const Params& worst = simplex[3];
    const Params reflected = affine(centroid, worst, -1.0);
    const double f_r = f(reflected);

    if (f_r < values[0]) {
      const Params expanded = affine(centroid, worst, -2.0);
      const double f_e = f(expanded);
      if (f_e < f_r) {
        simplex[3] = expanded;
        values[3] = f_e;
      } else {
        simplex[3] = reflected;
        values[3] = f_r;
      }
      continue;
    }
    if (f_r < values[2]) {
      simplex[3] = reflected;
      values[3] = f_r;
      continue;
    }
    const bool outside = f_r < values[3];
    const Params contracted = outside ? affine(centroid, reflected, 0.5) : affine(centroid, worst, 0.5);
    const double f_c = f(contracted);
    if (f_c <= (outside ? f_r : values[3])) {
      simplex[3] = contracted;
      values[3] = f_c;
      continue;
    }
    for (std::size_t i = 1; i < 4; ++i) {
      simplex[i] = affine(simplex[0], simplex[i], 0.5);
      values[i] = f(simplex[i]);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const Params& p = simplex[static_cast<std::size_t>(best_it - values.begin())];
  result.config = to_config(p);
  result.perimeter = *best_it;
  result.iterations = iter;
  return result;
}

namespace {

// Rounding in side points is relative to the coordinates, not to the
// triangle's size, so a small triangle far from the origin is noisier.
double perimeter_noise(const Triangle& t) {
  double extent = 0.0;
  for (const Point& v : t.vertices()) extent = std::max({extent, std::abs(v.x), std::abs(v.y)});
  return 64.0 * std::numeric_limits<double>::epsilon() * extent;
}

}  // namespace

MinimizeResult minimize_reflection_descent(const Triangle& t, const InscribedConfig& start, int max_iter,
                                           double tol) {
  check_inputs(t);
  if (!is_valid(start)) throw PreconditionError("start parameters must lie in (0, 1)");
  if (!(tol >= 0.0)) throw PreconditionError("tol must be nonnegative");

  const double noise = perimeter_noise(t);
  Params p = start.as_array();
  double recorded = perimeter_at(t, p);

  MinimizeResult result;
  result.near_right = classify(t).margin < kNearRightMargin;
  result.history.push_back({0, recorded});

  int sweep = 1;
  for (; sweep <= max_iter; ++sweep) {
    int clamped = 0;
    double largest_step = 0.0;
    for (Vertex v : kVertices) {
      const std::size_t i = index_of(v);
      const Point q = side_point(t, next(v), p[index_of(next(v))]);
      const Point r = side_point(t, prev(v), p[index_of(prev(v))]);
      double candidate = best_on_side(t, v, q, r, p[i]);
      if (!(candidate >= kClampMargin && candidate <= 1.0 - kClampMargin)) {
        candidate = std::clamp(std::isfinite(candidate) ? candidate : p[i], kClampMargin, 1.0 - kClampMargin);
        ++clamped;
      }
      largest_step = std::max(largest_step, std::abs(candidate - p[i]));
      p[i] = candidate;
    }
    result.clamped_steps += clamped;

    // Decreases at the rounding level of the coordinates are not progress.
    const double current = perimeter_at(t, p);
    if (recorded - current >= std::max(tol * current, noise)) {
      result.history.push_back({sweep, current});
      recorded = current;
      continue;
    }
    // No measurable perimeter progress.
    if (clamped > 0) break;
    if (largest_step <= kDescentStepTol) {
      result.converged = true;
      break;
    }
  }

  result.config = to_config(p);
  result.perimeter = perimeter_at(t, p);
  result.iterations = std::min(sweep, max_iter);
  return result;
}

double min_perimeter_closed_form(const Triangle& t) { return orthic_triangle(t).perimeter; }

}  // namespace fagnano
