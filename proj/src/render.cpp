#include "fagnano/render.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace fagnano::render {

namespace {

struct Line {
  Point p, q;
  const char* cls;
};

struct Outline {
  std::vector<Point> pts;
  const char* cls;
};

struct Label {
  Point at;
  std::string text;
};

struct Scene {
  std::vector<Outline> outlines;
  std::vector<Line> lines;
  std::vector<Point> dots;
  std::vector<Label> labels;

  std::vector<Point> extent() const {
    std::vector<Point> pts;
    for (const auto& o : outlines) pts.insert(pts.end(), o.pts.begin(), o.pts.end());
    for (const auto& l : lines) {
      pts.push_back(l.p);
      pts.push_back(l.q);
    }
    pts.insert(pts.end(), dots.begin(), dots.end());
    for (const auto& l : labels) pts.push_back(l.at);
    return pts;
  }
};

// Uniform scale and translate into the margin-inset viewport, y flipped.
class Viewport {
 public:
  Viewport(const std::vector<Point>& pts, const RenderSpec& spec) : height_(spec.height_px) {
    double min_x = pts.front().x, max_x = min_x, min_y = pts.front().y, max_y = min_y;
    for (Point p : pts) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
    const double inner_w = spec.width_px - 2.0 * spec.margin_px;
    const double inner_h = spec.height_px - 2.0 * spec.margin_px;
    const double bw = std::max(max_x - min_x, 1e-300);
    const double bh = std::max(max_y - min_y, 1e-300);
    scale_ = std::min(inner_w / bw, inner_h / bh);
    origin_ = {min_x, min_y};
    offset_ = {spec.margin_px + 0.5 * (inner_w - scale_ * bw), spec.margin_px + 0.5 * (inner_h - scale_ * bh)};
    centre_ = {0.5 * (min_x + max_x), 0.5 * (min_y + max_y)};
  }

  Point map(Point p) const {
    return {offset_.x + scale_ * (p.x - origin_.x), height_ - (offset_.y + scale_ * (p.y - origin_.y))};
  }

  Point centre() const { return map(centre_); }

 private:
  double height_;
  double scale_ = 1.0;
  Point origin_, offset_, centre_;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  // Avoid "-0.000".
  if (std::string(buf) == "-0.000") return "0.000";
  return buf;
}

std::string emit(const Scene& scene, const RenderSpec& spec) {
  const Viewport vp(scene.extent(), spec);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width_px) + "\" height=\"" +
         std::to_string(spec.height_px) + "\" viewBox=\"0 0 " + std::to_string(spec.width_px) + " " +
         std::to_string(spec.height_px) + "\">\n";
  out +=
      "<style>\n"
      ".frame{fill:none;stroke:#808080;stroke-width:1}\n"
      ".edge{stroke:#000000;stroke-width:2}\n"
      ".altitude{stroke:#1f77b4;stroke-width:1;stroke-dasharray:4 3}\n"
      ".orthic{stroke:#d62728;stroke-width:2}\n"
      ".foot{fill:#d62728}\n"
      "text{font-family:serif;font-size:14px;text-anchor:middle;dominant-baseline:middle}\n"
      "</style>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (const auto& o : scene.outlines) {
    out += "<polygon class=\"" + std::string(o.cls) + "\" points=\"";
    for (std::size_t i = 0; i < o.pts.size(); ++i) {
      const Point s = vp.map(o.pts[i]);
      if (i > 0) out += ' ';
      out += num(s.x) + "," + num(s.y);
    }
    out += "\"/>\n";
  }
  for (const auto& l : scene.lines) {
    const Point p = vp.map(l.p);
    const Point q = vp.map(l.q);
    out += "<line class=\"" + std::string(l.cls) + "\" x1=\"" + num(p.x) + "\" y1=\"" + num(p.y) + "\" x2=\"" +
           num(q.x) + "\" y2=\"" + num(q.y) + "\"/>\n";
  }
  for (Point d : scene.dots) {
    const Point s = vp.map(d);
    out += "<circle class=\"foot\" cx=\"" + num(s.x) + "\" cy=\"" + num(s.y) + "\" r=\"3\"/>\n";
  }
  if (spec.show_labels) {
    const Point centre = vp.centre();
    for (const auto& l : scene.labels) {
      const Point s = vp.map(l.at);
      const Point away = s - centre;
      const double len = norm(away);
      const Point dir = len > 0.0 ? (1.0 / len) * away : Point{0.0, -1.0};
      const Point at = s + 14.0 * dir;
      out += "<text x=\"" + num(at.x) + "\" y=\"" + num(at.y) + "\">" + l.text + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

// Edges, altitudes and orthic triangle of t; names are indexed by vertex and
// by the vertex each foot is dropped from.
void add_triangle(Scene& scene, const Triangle& t, const RenderSpec& spec,
                  const std::array<std::string, 3>& vertex_names, const std::array<std::string, 3>& foot_names) {
  for (Vertex v : kVertices) scene.lines.push_back({t[v], t[next(v)], "edge"});
  if (spec.show_altitudes || spec.show_orthic) {
    const OrthicResult orthic = orthic_triangle(t);
    if (spec.show_altitudes) {
      for (Vertex v : kVertices) scene.lines.push_back({t[v], orthic.foot(v), "altitude"});
    }
    if (spec.show_orthic) {
      for (Vertex v : kVertices) scene.lines.push_back({orthic.foot(v), orthic.foot(next(v)), "orthic"});
    }
    for (Vertex v : kVertices) {
      scene.dots.push_back(orthic.foot(v));
      if (!foot_names[index_of(v)].empty()) scene.labels.push_back({orthic.foot(v), foot_names[index_of(v)]});
    }
  }
  for (Vertex v : kVertices) {
    if (!vertex_names[index_of(v)].empty()) scene.labels.push_back({t[v], vertex_names[index_of(v)]});
  }
}

}  // namespace

void validate(const RenderSpec& spec) {
  if (spec.width_px < 64 || spec.height_px < 64) throw PreconditionError("render size must be at least 64x64 px");
  if (spec.margin_px < 0 || 4 * spec.margin_px >= std::min(spec.width_px, spec.height_px)) {
    throw PreconditionError("render margin must be nonnegative and below a quarter of the smaller dimension");
  }
}

std::string triangle_svg(const Triangle& t, const RenderSpec& spec) {
  validate(spec);
  Scene scene;
  add_triangle(scene, t, spec, {"A", "B", "C"}, {"D", "E", "F"});
  return emit(scene, spec);
}

std::string golden_svg(const golden::GoldenFigure& fig, const RenderSpec& spec) {
  validate(spec);
  Scene scene;
  scene.outlines.push_back({{fig.a, fig.b, fig.c, fig.d}, "frame"});
  scene.outlines.push_back({{fig.a, fig.b, fig.e, fig.f}, "frame"});

  const Triangle& t = fig.triangle_bfc;
  std::array<std::string, 3> vertex_names;
  std::array<std::string, 3> foot_names;
  for (Vertex v : kVertices) {
    if (t[v] == fig.b) {
      vertex_names[index_of(v)] = "B";
      foot_names[index_of(v)] = "H";
    } else if (t[v] == fig.c) {
      vertex_names[index_of(v)] = "C";
      foot_names[index_of(v)] = "G";
    } else {
      vertex_names[index_of(v)] = "F";
      foot_names[index_of(v)] = "E";
    }
  }
  add_triangle(scene, t, spec, vertex_names, foot_names);
  scene.labels.push_back({fig.a, "A"});
  scene.labels.push_back({fig.d, "D"});
  if (!spec.show_altitudes && !spec.show_orthic) scene.labels.push_back({fig.e, "E"});
  return emit(scene, spec);
}

}  // namespace fagnano::render
