#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "centersvar/datagen.hpp"
#include "centersvar/invariants.hpp"
#include "centersvar/loci.hpp"

namespace centersvar::io {

using nlohmann::json;

json to_json(const Rational& v);
json to_json(const ProjectivePoint& p);
json to_json(const Configuration& c);
json to_json(const RMatrix& m);
json to_json(const Form& f);
json to_json(const BinaryForm& f);
json to_json(const InvariantVector& v);
json to_json(const NumericPoint& p);
json to_json(const CenterPair& p);
json to_json(const LocusComponent& c);
json to_json(const Reconstruction& r);
json to_json(const CentersVariety& v);

Rational rational_from_json(const json& j);
ProjectivePoint point_from_json(const json& j);
RMatrix matrix_from_json(const json& j);

/// Reads a point set. Instance documents holding "x" and "y" sets are
/// accepted; `role` picks one of them.
Configuration configuration_from_json(const json& doc, std::string_view role = "x");

/// Inline "1,-2,3/4,5" or the path of a JSON file with a "center" (or
/// "point") entry.
ProjectivePoint parse_center(const std::string& text);

json read_json(const std::filesystem::path& path);
/// Writes through a temporary file in the same directory and renames it.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Indented plain-text rendering of a report.
std::string to_text(const json& j);

std::string format_double(double v);

}  // namespace centersvar::io
