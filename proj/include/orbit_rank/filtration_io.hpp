#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "orbit_rank/inference.hpp"

namespace orbit_rank {

/// Parse failure carrying the 1-based line (0 for JSON structure errors).
class FiltrationSyntaxError : public FiltrationError {
 public:
  FiltrationSyntaxError(std::size_t line, const std::string& what)
      : FiltrationError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Line format:
///   filtration 1
///   flags liminary=<true|false|unknown> group_derived=<bool> real_line=<bool>
///   node <name>
///   attr <key> = <true|false|unknown|nat|infinite|kind-name>
/// `#` starts a comment. Attributes not given stay unknown.
FiltrationDoc parse_filtration(std::string_view text);

/// JSON form with the same keys:
///   {"filtration": 1, "flags": {...}, "nodes": [{"name": ..., "attrs": {...}}]}
FiltrationDoc parse_filtration_json(std::string_view text);

/// Picks the JSON parser when `path` ends in `.json`.
FiltrationDoc load_filtration_file(const std::string& path);

std::string render_filtration(const FiltrationDoc& doc);
nlohmann::ordered_json filtration_to_json(const FiltrationDoc& doc);

nlohmann::ordered_json interval_to_json(const Interval& iv);
nlohmann::ordered_json fact_table_to_json(const FactTable& table);
/// Human-readable table followed by the numbered trace.
std::string render_fact_table(const FactTable& table);

}  // namespace orbit_rank
