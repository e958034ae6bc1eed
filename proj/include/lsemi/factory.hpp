#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsemi/semigroup.hpp"

namespace lsemi {

// Left zero semigroup of size m (ab = a), labels "a1".."am".
Semigroup left_zero(int m);

struct NamedSemigroup {
  std::string name;
  Semigroup semigroup;
};

// Fixed catalog of small groups: Z1..Z8, Klein, S3, D4, Q8. Built
// programmatically and validated on first use.
const std::vector<NamedSemigroup>& group_catalog();

// Left zero of size m times the group G — the general left group. Throws
// not_a_group unless G is a group.
Semigroup left_group(int m, const Semigroup& g);

// Doubling construction on a left simple semigroup: two disjoint copies of S
// glued so that products landing across copies are shifted into the second
// copy. The result is certified left simple with the original copy sitting
// inside as a reflexive unitary subsemigroup (indices 0..n-1); the second
// copy's labels are primed.
Semigroup double_of(const Semigroup& s);

// Corpus of left groups (and optionally their doubles) used by the
// verification sweeps. Deterministic order and naming: "L{m}x{group}" and
// "double(<name>)".
struct CorpusSpec {
  int max_order = 18;
  std::vector<int> left_zero_sizes = {1, 2, 3};
  std::vector<std::string> groups;  // empty = whole catalog
  bool include_doubles = true;
  int double_max_base_order = 9;
};

std::vector<NamedSemigroup> build_corpus(const CorpusSpec& spec);

// Catalog name of a group up to isomorphism ("Z4", "Klein", ...), or
// "?<order>" when no catalog member matches.
std::string group_name(const Semigroup& g);

// Resolve "Z4", "Klein", "L2xZ3", "double(L2xZ3)" and similar to an instance.
std::optional<Semigroup> find_named_instance(const std::string& name);

}  // namespace lsemi
