#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace lsemi {

using mask_t = std::uint64_t;

// Subset of the elements {0, ..., parent_order-1} of one fixed semigroup,
// stored as a bitmask. Operations between sets of different parents throw
// parent_mismatch; the parent order travels with the set so mismatches are
// caught at the boundary instead of corrupting a sweep.
struct ElemSet {
  int parent_order = 0;
  mask_t bits = 0;

  ElemSet() = default;
  ElemSet(int parent_order, mask_t bits);

  static ElemSet empty(int parent_order);
  static ElemSet full(int parent_order);
  static ElemSet of(int parent_order, std::initializer_list<int> members);
  static ElemSet from_elements(int parent_order, const std::vector<int>& members);

  bool contains(int x) const { return x >= 0 && x < parent_order && ((bits >> x) & 1u); }
  int size() const { return std::popcount(bits); }
  bool is_empty() const { return bits == 0; }

  // Members in ascending order. This ordering is the index map used whenever
  // a subset is re-indexed densely (induced subsemigroups, restrictions).
  std::vector<int> elements() const;

  ElemSet& insert(int x);
  bool subset_of(const ElemSet& other) const;
  bool proper_subset_of(const ElemSet& other) const;

  friend bool operator==(const ElemSet&, const ElemSet&) = default;
};

ElemSet operator&(const ElemSet& a, const ElemSet& b);
ElemSet operator|(const ElemSet& a, const ElemSet& b);

// Throws parent_mismatch unless both sets live over the same parent order.
void require_same_parent(const ElemSet& a, const ElemSet& b);

}  // namespace lsemi
