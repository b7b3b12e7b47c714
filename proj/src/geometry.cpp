#include "fagnano/geometry.hpp"

#include <algorithm>
#include <cstdio>

namespace fagnano {

namespace {

std::string format_angle(double radians) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g rad (%.6f deg)", radians, radians * 180.0 / kPi);
  return buf;
}

double longest_side(Point a, Point b, Point c) {
  return std::max({distance(a, b), distance(b, c), distance(c, a)});
}

// Foot of the perpendicular from p onto the line through u and v.
Point project(Point p, Point u, Point v) {
  const Point dir = v - u;
  return u + (dot(p - u, dir) / dot(dir, dir)) * dir;
}

}  // namespace

double angle_at(Point apex, Point p, Point q) {
  const Point u = p - apex;
  const Point w = q - apex;
  return std::atan2(std::abs(cross(u, w)), dot(u, w));
}

char vertex_name(Vertex v) { return static_cast<char>('a' + index_of(v)); }

double AngleTriple::operator[](Vertex v) const {
  switch (v) {
    case Vertex::A:
      return alpha;
    case Vertex::B:
      return beta;
    case Vertex::C:
      return gamma;
  }
  return alpha;
}

double AngleTriple::largest() const { return std::max({alpha, beta, gamma}); }

Vertex AngleTriple::largest_at() const {
  if (alpha >= beta && alpha >= gamma) return Vertex::A;
  return beta >= gamma ? Vertex::B : Vertex::C;
}

AngleTriple angles_of(Point p0, Point p1, Point p2) {
  return {angle_at(p0, p1, p2), angle_at(p1, p2, p0), angle_at(p2, p0, p1)};
}

bool is_degenerate(Point a, Point b, Point c) {
  const double l = longest_side(a, b, c);
  const double area = 0.5 * std::abs(cross(b - a, c - a));
  return !(area >= kDegeneracyTol * l * l) || l == 0.0;
}

Triangle::Triangle(Point a, Point b, Point c) : v_{a, b, c} {
  if (!is_finite(a) || !is_finite(b) || !is_finite(c)) {
    throw ConstructionError("triangle vertex has a non-finite coordinate");
  }
  if (is_degenerate(a, b, c)) {
    const double l = longest_side(a, b, c);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "degenerate triangle: area %.17g is below %.0e * longest_side^2 (%.17g)",
                  0.5 * std::abs(cross(b - a, c - a)), kDegeneracyTol, l * l);
    throw ConstructionError(buf);
  }
  if (cross(b - a, c - a) < 0.0) {
    std::swap(v_[1], v_[2]);
    reoriented_ = true;
  }
}

double Triangle::signed_area() const { return 0.5 * cross(v_[1] - v_[0], v_[2] - v_[0]); }

double Triangle::side(Vertex v) const { return distance((*this)[next(v)], (*this)[prev(v)]); }

double Triangle::diameter() const { return longest_side(v_[0], v_[1], v_[2]); }

std::string to_string(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::Acute:
      return "acute";
    case TriangleKind::Right:
      return "right";
    case TriangleKind::Obtuse:
      return "obtuse";
    case TriangleKind::Degenerate:
      return "degenerate";
  }
  return "unknown";
}

AngleTriple angles(const Triangle& t) { return angles_of(t.a(), t.b(), t.c()); }

TriangleClass classify(Point a, Point b, Point c, double tol) {
  const double margin = kHalfPi - angles_of(a, b, c).largest();
  if (!is_finite(a) || !is_finite(b) || !is_finite(c) || is_degenerate(a, b, c)) {
    return {TriangleKind::Degenerate, margin};
  }
  if (margin > tol) return {TriangleKind::Acute, margin};
  if (margin < -tol) return {TriangleKind::Obtuse, margin};
  return {TriangleKind::Right, margin};
}

TriangleClass classify(const Triangle& t, double tol) { return classify(t.a(), t.b(), t.c(), tol); }

void require_acute(const Triangle& t, double tol) {
  const TriangleClass cls = classify(t, tol);
  if (cls.kind == TriangleKind::Acute) return;
  const AngleTriple ang = angles(t);
  throw PreconditionError("triangle is " + to_string(cls.kind) + ", not acute: largest angle at " +
                          vertex_name(ang.largest_at()) + " is " + format_angle(ang.largest()));
}

Point foot_of_altitude(const Triangle& t, Vertex from) {
  return project(t[from], t[next(from)], t[prev(from)]);
}

Point OrthicResult::foot(Vertex from) const {
  switch (from) {
    case Vertex::A:
      return foot_from_a;
    case Vertex::B:
      return foot_from_b;
    case Vertex::C:
      return foot_from_c;
  }
  return foot_from_a;
}

std::array<double, 3> OrthicResult::side_lengths() const {
  return {distance(foot_from_b, foot_from_c), distance(foot_from_c, foot_from_a),
          distance(foot_from_a, foot_from_b)};
}

OrthicResult orthic_triangle(const Triangle& t, double tol) {
  require_acute(t, tol);
  OrthicResult r;
  r.foot_from_a = foot_of_altitude(t, Vertex::A);
  r.foot_from_b = foot_of_altitude(t, Vertex::B);
  r.foot_from_c = foot_of_altitude(t, Vertex::C);
  r.angles = angles_of(r.foot_from_a, r.foot_from_b, r.foot_from_c);
  r.perimeter = perimeter(r.foot_from_a, r.foot_from_b, r.foot_from_c);
  return r;
}

Point orthocenter(const Triangle& t) {
  // (H - A).(C - B) = 0 and (H - B).(A - C) = 0, solved by Cramer's rule
  // in coordinates relative to A.
  const Point bc = t.c() - t.b();
  const Point ca = t.a() - t.c();
  const Point ab = t.b() - t.a();
  const double det = cross(bc, ca);
  const double rhs = dot(ab, ca);
  // Rows: [bc.x bc.y] h = 0, [ca.x ca.y] h = rhs.
  const Point h{-bc.y * rhs / det, bc.x * rhs / det};
  return t.a() + h;
}

Point incenter(const Triangle& t) {
  const double la = t.side(Vertex::A);
  const double lb = t.side(Vertex::B);
  const double lc = t.side(Vertex::C);
  return (1.0 / (la + lb + lc)) * (la * t.a() + lb * t.b() + lc * t.c());
}

Point circumcenter(const Triangle& t) {
  const Point b = t.b() - t.a();
  const Point c = t.c() - t.a();
  const double d = 2.0 * cross(b, c);
  const double b2 = dot(b, b);
  const double c2 = dot(c, c);
  return t.a() + Point{(c.y * b2 - b.y * c2) / d, (b.x * c2 - c.x * b2) / d};
}

double circumradius(const Triangle& t) { return distance(circumcenter(t), t.a()); }

double perimeter(Point p, Point q, Point r) { return distance(p, q) + distance(q, r) + distance(r, p); }

Triangle triangle_from_angles(double alpha, double beta, double gamma) {
  if (!(alpha > 0.0 && beta > 0.0 && gamma > 0.0) || std::abs(alpha + beta + gamma - kPi) > 1e-9) {
    throw PreconditionError("angles must be positive and sum to pi");
  }
  // Inscribed-angle theorem: side bc subtends a central angle of 2*alpha, etc.
  const double theta_b = -kHalfPi - alpha;
  const double theta_c = -kHalfPi + alpha;
  const double theta_a = theta_c + 2.0 * beta;
  auto on_circle = [](double th) { return Point{std::cos(th), std::sin(th)}; };
  return Triangle(on_circle(theta_a), on_circle(theta_b), on_circle(theta_c));
}

}  // namespace fagnano
