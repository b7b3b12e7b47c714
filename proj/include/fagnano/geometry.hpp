#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fagnano {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;
inline constexpr double kQuarterPi = std::numbers::pi / 4.0;

// A triangle is degenerate when area < kDegeneracyTol * (longest side)^2.
inline constexpr double kDegeneracyTol = 1e-12;
// Default half-width of the Right band around pi/2 (radians).
inline constexpr double kClassificationTol = 1e-9;

// Raised when a construction needs a non-degenerate triangle or finite input.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an operation is called outside its domain (non-acute parent,
// out-of-range parameters, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
  friend constexpr Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
  friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend constexpr Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point, Point) = default;
};

constexpr double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
constexpr double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point p, Point q) { return norm(p - q); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Unsigned angle at `apex` between rays towards `p` and `q`, in [0, pi].
// atan2(|cross|, dot) keeps full precision near 0 and pi.
double angle_at(Point apex, Point p, Point q);

enum class Vertex { A = 0, B = 1, C = 2 };

inline constexpr std::array<Vertex, 3> kVertices = {Vertex::A, Vertex::B, Vertex::C};

constexpr std::size_t index_of(Vertex v) { return static_cast<std::size_t>(v); }
constexpr Vertex next(Vertex v) { return static_cast<Vertex>((index_of(v) + 1) % 3); }
constexpr Vertex prev(Vertex v) { return static_cast<Vertex>((index_of(v) + 2) % 3); }
char vertex_name(Vertex v);

struct AngleTriple {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  double operator[](Vertex v) const;
  double sum() const { return alpha + beta + gamma; }
  double largest() const;
  Vertex largest_at() const;
};

// Angles of the triangle p0 p1 p2, listed at p0, p1, p2. No degeneracy check.
AngleTriple angles_of(Point p0, Point p1, Point p2);

// Non-degenerate triangle with counterclockwise vertex order.
//
// A clockwise input is normalized by swapping b and c; `reoriented()` reports
// whether that happened so callers can map their own labels.
class Triangle {
 public:
  Triangle(Point a, Point b, Point c);

  Point a() const { return v_[0]; }
  Point b() const { return v_[1]; }
  Point c() const { return v_[2]; }
  Point operator[](Vertex v) const { return v_[index_of(v)]; }
  const std::array<Point, 3>& vertices() const { return v_; }

  bool reoriented() const { return reoriented_; }
  double signed_area() const;
  double area() const { return std::abs(signed_area()); }
  // Length of the side opposite `v`.
  double side(Vertex v) const;
  double diameter() const;

 private:
  std::array<Point, 3> v_;
  bool reoriented_ = false;
};

// Area-based test used by both the Triangle constructor and classify().
bool is_degenerate(Point a, Point b, Point c);

enum class TriangleKind { Acute, Right, Obtuse, Degenerate };

std::string to_string(TriangleKind kind);

struct TriangleClass {
  TriangleKind kind = TriangleKind::Degenerate;
  // pi/2 minus the largest angle: positive for acute, negative for obtuse.
  double margin = 0.0;
};

AngleTriple angles(const Triangle& t);

TriangleClass classify(const Triangle& t, double tol = kClassificationTol);
// Total version for raw vertices; degenerate input yields Degenerate.
TriangleClass classify(Point a, Point b, Point c, double tol = kClassificationTol);

// Throws PreconditionError naming the largest angle unless `t` is Acute.
void require_acute(const Triangle& t, double tol = kClassificationTol);

// Orthogonal projection of vertex `from` onto the line through the other two.
Point foot_of_altitude(const Triangle& t, Vertex from);

struct OrthicResult {
  Point foot_from_a;  // on side bc
  Point foot_from_b;  // on side ca
  Point foot_from_c;  // on side ab
  AngleTriple angles;  // orthic angle hosted at each foot
  double perimeter = 0.0;

  Point foot(Vertex from) const;
  // Orthic side lengths, each opposite the foot of the same index.
  std::array<double, 3> side_lengths() const;
};

OrthicResult orthic_triangle(const Triangle& t, double tol = kClassificationTol);

Point orthocenter(const Triangle& t);
Point incenter(const Triangle& t);
Point circumcenter(const Triangle& t);
double circumradius(const Triangle& t);

double perimeter(Point p, Point q, Point r);

// Unit-circumradius triangle with the requested angles (CCW, centred at the
// origin). Angles must be positive and sum to pi.
Triangle triangle_from_angles(double alpha, double beta, double gamma);

}  // namespace fagnano
