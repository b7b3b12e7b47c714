#pragma once

#include <string>

#include "fagnano/geometry.hpp"
#include "fagnano/golden.hpp"

namespace fagnano::render {

struct RenderSpec {
  int width_px = 640;
  int height_px = 480;
  int margin_px = 40;
  bool show_altitudes = true;
  bool show_orthic = true;
  bool show_labels = true;
};

// Throws PreconditionError unless width, height >= 64 and
// 0 <= margin < min(width, height) / 4.
void validate(const RenderSpec& spec);

// Triangle with its altitudes and orthic triangle. Vertices are labelled
// A, B, C and the feet D, E, F (feet of the altitudes from A, B, C).
// Overlays require an acute triangle (PreconditionError otherwise).
std::string triangle_svg(const Triangle& t, const RenderSpec& spec);

// Golden rectangle ABCD and square ABEF around triangle BFC, its altitudes
// and its orthic triangle GHE.
std::string golden_svg(const golden::GoldenFigure& fig, const RenderSpec& spec);

}  // namespace fagnano::render
