#pragma once

#include <iosfwd>
#include <string>

#include "ngr/quiver.hpp"

namespace ngr {

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  int line;
  int col;
};

/// Presentation text format:
///
///   # comment
///   period 6
///   arrows 0: e12, e13, e23        # declaration order = position order,
///   arrows 1: x3, x2, x1           # descending (first label is largest)
///   ...
///   relation 0: e12.x2 + e13.x3
///   relation 0: -e12.x1 + e23.x3   # terms: [coef*]label.label..., coef
///   relation 1: x1.x2 - x2.x1      # an integer or p/q rational
///
/// Relation lines carry their start residue; labels are unique per residue
/// but may repeat across residues.
QuiverPresentation parse_presentation(const std::string& text);
QuiverPresentation read_presentation_file(const std::string& path);

std::string format_presentation(const QuiverPresentation& pres);
void write_presentation_file(const QuiverPresentation& pres,
                             const std::string& path);

}  // namespace ngr
