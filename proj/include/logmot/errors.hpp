#pragma once

#include <stdexcept>
#include <string>

namespace logmot {

// Semantic violation of a documented precondition or invariant.
struct domain_violation : std::runtime_error {
  explicit domain_violation(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual or JSON input; carries a position when one is known.
struct parse_failure : std::runtime_error {
  parse_failure(const std::string& what, int line, int column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line(line),
        column(column) {}
  explicit parse_failure(const std::string& what) : std::runtime_error(what) {}

  int line = 0;
  int column = 0;
};

}  // namespace logmot
