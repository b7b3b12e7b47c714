#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "fagnano/geometry.hpp"

namespace fagnano::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kPreconditionFailed = 2,
  kNotConverged = 3,
  kCounterexample = 4,
  kIoError = 5,
};

// "ax,ay,bx,by,cx,cy" or one of the presets "equilateral", "golden-bfc".
// Throws std::invalid_argument on malformed or non-finite input.
std::array<Point, 3> parse_triangle(const std::string& text);

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fagnano::cli
