#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lsemi/semigroup.hpp"

namespace lsemi {

// Unvalidated file contents: labels, a label-valued table, named subsets.
// Two interchangeable encodings exist — a line-oriented text format and a
// JSON mirror with fields "elements", "table", "subsets".
struct SemigroupFile {
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> table;
  std::vector<std::pair<std::string, std::vector<std::string>>> subsets;

  friend bool operator==(const SemigroupFile&, const SemigroupFile&) = default;
};

// Text format:
//   # comment
//   elements: e a b
//   table:
//   e a b
//   a b e
//   b e a
//   subset H: e a
// Table entries may be labels or decimal indices (labels win ties).
// Parse errors carry line and column.
SemigroupFile parse_semigroup_text(const std::string& text);
SemigroupFile parse_semigroup_json(const std::string& text);

// Reads a file, dispatching on a leading '{' (or a .json extension) to the
// JSON parser, otherwise the text parser.
SemigroupFile load_semigroup_file(const std::string& path);

std::string serialize_semigroup_text(const SemigroupFile& f);
std::string serialize_semigroup_json(const SemigroupFile& f);

// A validated semigroup plus its named subsets.
struct LoadedSemigroup {
  Semigroup semigroup;
  std::vector<std::pair<std::string, ElemSet>> subsets;

  // Throws unknown_subset listing the known names.
  ElemSet subset(const std::string& name) const;
};

// Validates and resolves a SemigroupFile (table entries and subset members
// resolved through labels first, then as indices).
LoadedSemigroup realize(const SemigroupFile& f);

SemigroupFile to_file(const Semigroup& s,
                      const std::vector<std::pair<std::string, ElemSet>>& subsets = {});

}  // namespace lsemi
