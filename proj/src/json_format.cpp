#include "wreathgap/json_format.hpp"

#include <cmath>
#include <cstdio>

namespace wreathgap {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";  // JSON has no infinities
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s = buf;
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

namespace {

void emit(const ojson& j, int indent, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent) * depth, ' ');
  const char* nl = indent > 0 ? "\n" : "";
  const char* colon = indent > 0 ? ": " : ":";
  switch (j.type()) {
    case ojson::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      out += nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out += ',';
          out += nl;
        }
        first = false;
        out += pad;
        out += ojson(it.key()).dump();
        out += colon;
        emit(it.value(), indent, depth + 1, out);
      }
      out += nl;
      out += close_pad;
      out += '}';
      return;
    }
    case ojson::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& e : j) flat = flat && !e.is_structured();
      out += '[';
      if (!flat) out += nl;
      bool first = true;
      for (const auto& e : j) {
        if (!first) {
          out += ',';
          if (flat) out += indent > 0 ? " " : "";
          else out += nl;
        }
        first = false;
        if (!flat) out += pad;
        emit(e, indent, depth + 1, out);
      }
      if (!flat) {
        out += nl;
        out += close_pad;
      }
      out += ']';
      return;
    }
    case ojson::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const ojson& j, int indent) {
  std::string out;
  emit(j, indent, 0, out);
  return out;
}

}  // namespace wreathgap
