// Text and JSON serialization of semigroup tables.
//
// Text format:
//   # comments anywhere
//   # name: <label>          (optional, first non-blank comment)
//   n <count>
//   <n rows of the mul table, space-separated indices>
//   star: <n indices>
//   zero: <index>
//   add:                     (optional ring block)
//   <n rows>
//   neg: <n indices>
//
// Canonical form relabels the zero element to index 0, so golden files
// stay stable across regenerations.

#ifndef STARLAB_IO_HPP_
#define STARLAB_IO_HPP_

#include <stdexcept>
#include <string>

#include "starlab/semigroup.hpp"

#include "json.hpp"

namespace starlab {

struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ParseError(int line_, int column_, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

RawTables parse(const std::string& text);
RawTables parse_file(const std::string& path);

// Canonical text form of a validated semigroup.
std::string serialize(const StarSemigroup& s);

// Swaps the zero element to index 0 (identity when already there).
StarSemigroup canonicalize(const StarSemigroup& s);

nlohmann::ordered_json to_json(const StarSemigroup& s);
RawTables from_json(const nlohmann::json& j);

}  // namespace starlab

#endif  // STARLAB_IO_HPP_
