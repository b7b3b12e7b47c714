#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fagnano/geometry.hpp"
#include "fagnano/golden.hpp"
#include "fagnano/optimizer.hpp"
#include "fagnano/theorem.hpp"

namespace fagnano::report {

using Json = nlohmann::ordered_json;

// Deterministic text form: insertion-ordered keys, two-space indent, floats
// printed with 17 significant digits, non-finite floats as null.
std::string dump(const Json& j);

std::string format_double(double v);

Json to_json(Point p);
Json to_json(const AngleTriple& a);
Json to_json(const Triangle& t);
Json to_json(const TriangleClass& c);
Json to_json(const OrthicResult& r);
Json to_json(const InscribedConfig& c);
Json to_json(const TheoremVerdict& v);
Json to_json(const ProofStepReport& r);
Json to_json(const ScanReport& r);
Json to_json(const golden::ValueCheck& c);

Json orthic_document(const Triangle& t, double tol = kClassificationTol);
Json minimize_document(const Triangle& t, const std::string& method, const MinimizeResult& r);
Json golden_document(const golden::GoldenFigure& fig, const std::vector<golden::ValueCheck>& checks);

}  // namespace fagnano::report
