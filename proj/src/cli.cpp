#include "fagnano/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fagnano/golden.hpp"
#include "fagnano/optimizer.hpp"
#include "fagnano/render.hpp"
#include "fagnano/report.hpp"
#include "fagnano/theorem.hpp"

namespace fagnano::cli {

namespace {

std::vector<double> parse_reals(const std::string& text, std::size_t count, const char* what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("cannot parse ") + what + " component '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size() || !std::isfinite(v)) {
      throw std::invalid_argument(std::string("cannot parse ") + what + " component '" + item + "'");
    }
    values.push_back(v);
  }
  if (values.size() != count) {
    throw std::invalid_argument(std::string(what) + " needs " + std::to_string(count) +
                                " comma-separated reals, got " + std::to_string(values.size()));
  }
  return values;
}

struct Emit {
  std::string output_path;
  bool echo = false;
};

void add_emit_flags(CLI::App* cmd, Emit& e) {
  cmd->add_option("-o,--output", e.output_path, "Write the result to this file instead of stdout");
  cmd->add_flag("--json", e.echo, "Also print the JSON document to stdout when --output is given");
}

int deliver(const std::string& text, const Emit& e, std::ostream& out, std::ostream& err) {
  if (e.output_path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(e.output_path, std::ios::binary | std::ios::trunc);
  if (file) file << text;
  if (!file || !file.flush()) {
    err << "error: cannot write " << e.output_path << "\n";
    return kIoError;
  }
  if (e.echo) out << text;
  return kOk;
}

// Keeps the first error code; later successes never mask it.
int combine(int status, int delivered) { return delivered != kOk ? delivered : status; }

Triangle make_triangle(const std::string& text) {
  const auto p = parse_triangle(text);
  return Triangle(p[0], p[1], p[2]);
}

}  // namespace

std::array<Point, 3> parse_triangle(const std::string& text) {
  if (text == "equilateral") return {Point{0.0, 0.0}, Point{1.0, 0.0}, Point{0.5, std::sqrt(3.0) / 2.0}};
  if (text == "golden-bfc") {
    const auto fig = golden::build();
    return {fig.b, fig.f, fig.c};
  }
  const auto v = parse_reals(text, 6, "triangle");
  return {Point{v[0], v[1]}, Point{v[2], v[3]}, Point{v[4], v[5]}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthic triangles, Fagnano's minimal inscribed triangle and the right-orthic characterization"};
  app.name("fagnano");
  app.require_subcommand(1);
  app.allow_windows_style_options(false);

  const std::string triangle_help =
      "Triangle as ax,ay,bx,by,cx,cy or a preset: equilateral, golden-bfc";

  // orthic
  std::string orthic_tri;
  double orthic_tol = kClassificationTol;
  Emit orthic_emit;
  auto* orthic = app.add_subcommand("orthic", "Construct the orthic triangle of an acute triangle");
  orthic->add_option("triangle", orthic_tri, triangle_help)->required();
  orthic->add_option("--tol", orthic_tol, "Right-angle classification tolerance (radians)")
      ->check(CLI::PositiveNumber);
  add_emit_flags(orthic, orthic_emit);

  // minimize
  std::string min_tri;
  std::string method = "grid-simplex";
  int grid_n = kDefaultGridN;
  int max_iter = kDefaultMaxIter;
  std::optional<double> min_tol;
  std::string start_text = "0.5,0.5,0.5";
  Emit min_emit;
  auto* minimize = app.add_subcommand("minimize", "Numerically minimize the inscribed-triangle perimeter");
  minimize->add_option("triangle", min_tri, triangle_help)->required();
  minimize->add_option("-m,--method", method, "grid-simplex or reflection")
      ->check(CLI::IsMember({"grid-simplex", "reflection"}));
  minimize->add_option("--grid-n", grid_n, "Coarse grid nodes per axis (>= 4)")->check(CLI::Range(4, 1024));
  minimize->add_option("--max-iter", max_iter, "Iteration cap")->check(CLI::Range(0, 100000000));
  minimize->add_option("--tol", min_tol,
                       "Convergence tolerance (simplex diameter, or relative perimeter change for reflection)");
  minimize->add_option("--start", start_text, "Reflection start parameters t_bc,t_ca,t_ab in (0,1)");
  add_emit_flags(minimize, min_emit);

  // scan
  int resolution = 200;
  double scan_tol = kClassificationTol;
  double band = kDefaultBoundaryBand;
  Emit scan_emit;
  auto* scan = app.add_subcommand("scan", "Check the right-orthic characterization over the acute angle grid");
  scan->add_option("-n,--resolution", resolution, "Grid resolution N, angle step pi/N (>= 8)");
  scan->add_option("--tol", scan_tol, "Angle tolerance (radians)");
  scan->add_option("--band", band, "Knife-edge exclusion half-width (radians, > tol)");
  add_emit_flags(scan, scan_emit);

  // golden
  Emit golden_emit;
  auto* golden_cmd = app.add_subcommand("golden", "Reproduce the golden-rectangle example");
  add_emit_flags(golden_cmd, golden_emit);

  // render
  std::string render_tri;
  render::RenderSpec spec;
  bool no_altitudes = false, no_orthic = false, no_labels = false;
  Emit render_emit;
  auto* render_cmd = app.add_subcommand("render", "Write an SVG figure of a triangle and its orthic triangle");
  render_cmd->add_option("triangle", render_tri, triangle_help + " (golden-bfc draws the full rectangle figure)")
      ->required();
  render_cmd->add_option("--width", spec.width_px, "Image width in px");
  render_cmd->add_option("--height", spec.height_px, "Image height in px");
  render_cmd->add_option("--margin", spec.margin_px, "Margin in px");
  render_cmd->add_flag("--no-altitudes", no_altitudes, "Omit the altitudes");
  render_cmd->add_flag("--no-orthic", no_orthic, "Omit the orthic triangle");
  render_cmd->add_flag("--no-labels", no_labels, "Omit point labels");
  render_cmd->add_option("-o,--output", render_emit.output_path, "SVG output file (stdout when omitted)");

  std::vector<std::string> argv_store{"fagnano"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (*orthic) {
      const Triangle t = make_triangle(orthic_tri);
      require_acute(t, orthic_tol);
      return deliver(report::dump(report::orthic_document(t, orthic_tol)), orthic_emit, out, err);
    }

    if (*minimize) {
      const Triangle t = make_triangle(min_tri);
      require_acute(t);
      MinimizeResult result;
      if (method == "reflection") {
        const double tol = min_tol.value_or(kDefaultDescentTol);
        if (!(tol >= 0.0)) throw std::invalid_argument("--tol must be nonnegative");
        const auto s = parse_reals(start_text, 3, "start");
        if (std::any_of(s.begin(), s.end(), [](double v) { return !(v > 0.0 && v < 1.0); })) {
          throw std::invalid_argument("--start parameters must lie in (0, 1)");
        }
        result = minimize_reflection_descent(t, InscribedConfig(s[0], s[1], s[2]), max_iter, tol);
      } else {
        const double tol = min_tol.value_or(kDefaultSimplexTol);
        if (!(tol > 0.0)) throw std::invalid_argument("--tol must be positive");
        result = minimize_grid_then_simplex(t, grid_n, max_iter, tol);
      }
      if (result.near_right) err << "warning: triangle is within 1e-3 rad of right-angled; minimum is ill-conditioned\n";
      const int status = result.converged ? kOk : kNotConverged;
      if (!result.converged) err << "warning: did not converge within " << max_iter << " iterations\n";
      return combine(status, deliver(report::dump(report::minimize_document(t, method, result)), min_emit, out, err));
    }

    if (*scan) {
      if (resolution < 8) throw std::invalid_argument("--resolution must be at least 8");
      if (!(scan_tol > 0.0)) throw std::invalid_argument("--tol must be positive");
      if (!(band > scan_tol)) throw std::invalid_argument("--band must exceed --tol");
      const ScanReport rep = scan_angle_space(resolution, scan_tol, band);
      const int status = rep.passed() ? kOk : kCounterexample;
      if (!rep.passed()) err << "found " << rep.counterexamples.size() << " counterexample(s)\n";
      return combine(status, deliver(report::dump(report::to_json(rep)), scan_emit, out, err));
    }

    if (*golden_cmd) {
      const auto fig = golden::build();
      const auto checks = golden::reproduce_reference_values(fig);
      const int status = golden::all_within(checks) ? kOk : kCounterexample;
      return combine(status, deliver(report::dump(report::golden_document(fig, checks)), golden_emit, out, err));
    }

    if (*render_cmd) {
      spec.show_altitudes = !no_altitudes;
      spec.show_orthic = !no_orthic;
      spec.show_labels = !no_labels;
      try {
        render::validate(spec);
      } catch (const PreconditionError& e) {
        throw std::invalid_argument(e.what());
      }
      std::string svg;
      if (render_tri == "golden-bfc") {
        svg = render::golden_svg(golden::build(), spec);
      } else {
        svg = render::triangle_svg(make_triangle(render_tri), spec);
      }
      return deliver(svg, render_emit, out, err);
    }
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << "\n";
    return kPreconditionFailed;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPreconditionFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kParseError;
}

}  // namespace fagnano::cli
