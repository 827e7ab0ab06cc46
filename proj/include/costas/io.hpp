#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "costas/core.hpp"

namespace costas::io {

/// Malformed input; line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

struct ArrayRecord {
  int line = 0;
  Permutation perm;
};

/// One permutation per line, whitespace (or comma) separated 1-based values.
/// Blank lines and lines starting with '#' are skipped. Every line must be a
/// bijection; mixed orders are rejected unless allow_mixed is set.
std::vector<ArrayRecord> read_array_file(std::istream& in, bool allow_mixed = false);
std::vector<ArrayRecord> read_array_file(const std::string& path, bool allow_mixed = false);

std::vector<Permutation> permutations_of(std::span<const ArrayRecord> records);

void write_array_file(std::ostream& out, std::span<const Permutation> arrays,
                      std::span<const std::string> comments = {});

/// Structured form: {"order": n, "triples": [[i, j, k], ...]}. Plain form:
/// one "i j k" line per row. The reader detects the form from the first
/// non-blank character.
CostasCube read_cube_file(std::istream& in);
CostasCube read_cube_file(const std::string& path);

struct CubeDocument {
  CostasCube cube;
  std::optional<std::string> construction;
  bool with_projections = true;
};

void write_cube_json(std::ostream& out, const CubeDocument& doc);
void write_cube_text(std::ostream& out, const CostasCube& cube);

/// Space-separated values, no parentheses.
std::string format_values(const Permutation& perm);

} // namespace costas::io
