#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsemi/elem_set.hpp"

namespace lsemi {

// Finite semigroup on dense indices 0..n-1 given by its Cayley table.
// Construction validates everything eagerly — square table, entries in range,
// associativity over all n^3 triples, distinct labels — so downstream code
// never re-checks. Instances are immutable.
class Semigroup {
 public:
  // `table[a][b]` is the product a*b. If `labels` is empty, defaults
  // "x0".."x{n-1}" are generated; otherwise exactly n distinct labels.
  explicit Semigroup(const std::vector<std::vector<int>>& table,
                     std::vector<std::string> labels = {});

  int order() const { return order_; }
  int at(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int x) const;
  std::optional<int> index_of_label(const std::string& label) const;
  ElemSet universe() const { return ElemSet::full(order_); }
  std::vector<std::vector<int>> table() const;

  // Display helper: "{e,a,b}" with member labels in ascending index order.
  std::string label_set(const ElemSet& s) const;

  friend bool operator==(const Semigroup&, const Semigroup&) = default;

 private:
  int order_;
  std::vector<std::uint8_t> table_;  // row-major, entries < order_ <= 32
  std::vector<std::string> labels_;
};

// Sa = S for every a. For finite semigroups this is exactly left simplicity
// (no proper left ideal).
bool is_left_simple(const Semigroup& s);

// Smallest subsemigroup containing x. Throws empty_generator on empty input.
ElemSet closure(const Semigroup& s, const ElemSet& x);

// {a*b : a in A, b in B}; empty if either side is empty.
ElemSet set_product(const Semigroup& s, const ElemSet& a, const ElemSet& b);

// Componentwise product on pairs; pair (a, x) has index a*|T| + x and label
// "(<label a>,<label x>)".
Semigroup direct_product(const Semigroup& s, const Semigroup& t);

ElemSet idempotents(const Semigroup& s);

std::optional<int> identity_of(const Semigroup& s);
bool is_group(const Semigroup& s);
bool is_left_zero(const Semigroup& s);

// Nonempty and closed under the product.
bool is_subsemigroup(const Semigroup& s, const ElemSet& x);

// A subsemigroup of `s` re-indexed densely, together with both index maps.
// Sub-index i corresponds to the i-th member of the subset in ascending
// parent order, and labels are inherited so reports stay readable.
struct InducedSubsemigroup {
  Semigroup sub;
  std::vector<int> to_parent;  // sub index -> parent index
  std::vector<int> to_sub;     // parent index -> sub index, -1 if absent

  // Re-index a parent-side subset (must be contained in the members).
  ElemSet reindex(const ElemSet& parent_subset) const;
  ElemSet to_parent_set(const ElemSet& sub_subset) const;
};

InducedSubsemigroup induced(const Semigroup& s, const ElemSet& members);

// Witness for S ~ T: mapping[a] is the image of a in T.
struct IsoWitness {
  std::vector<int> mapping;
  friend bool operator==(const IsoWitness&, const IsoWitness&) = default;
};

// Exhaustive backtracking search over element images, pruned by structural
// profiles (idempotency, cyclic-subsemigroup shape, image sizes). Because
// images are tried in ascending order the returned witness is the
// lexicographically least isomorphism; nullopt means none exists. Every
// witness is re-verified against both tables before being returned.
std::optional<IsoWitness> is_isomorphic(const Semigroup& s, const Semigroup& t);

bool verify_isomorphism(const Semigroup& s, const Semigroup& t, const IsoWitness& w);

}  // namespace lsemi
