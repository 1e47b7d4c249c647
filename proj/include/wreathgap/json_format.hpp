#pragma once
// Deterministic JSON text: stable key order (insertion order), two-space
// indentation, and floats printed with 17 significant digits.

#include <string>

#include <json.hpp>

namespace wreathgap {

using ojson = nlohmann::ordered_json;

/// "%.17g", with ".0" appended when the result would read back as an integer.
std::string format_double(double v);

std::string dump_json(const ojson& j, int indent = 2);

}  // namespace wreathgap
