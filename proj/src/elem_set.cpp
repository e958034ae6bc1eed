#include "lsemi/elem_set.hpp"

#include <string>

#include "lsemi/config.hpp"
#include "lsemi/error.hpp"

namespace lsemi {

namespace {

mask_t full_mask(int n) { return n >= 64 ? ~mask_t{0} : (mask_t{1} << n) - 1; }

void check_parent_order(int n) {
  if (n < 0 || n > config::hard_max_order) {
    fail(errc::element_out_of_range, "parent order " + std::to_string(n) + " out of range");
  }
}

}  // namespace

ElemSet::ElemSet(int parent_order, mask_t bits) : parent_order(parent_order), bits(bits) {
  check_parent_order(parent_order);
  if (bits & ~full_mask(parent_order)) {
    fail(errc::element_out_of_range,
         "subset mask has bits above parent order " + std::to_string(parent_order));
  }
}

ElemSet ElemSet::empty(int parent_order) { return ElemSet(parent_order, 0); }

ElemSet ElemSet::full(int parent_order) { return ElemSet(parent_order, full_mask(parent_order)); }

ElemSet ElemSet::of(int parent_order, std::initializer_list<int> members) {
  ElemSet s = empty(parent_order);
  for (int x : members) s.insert(x);
  return s;
}

ElemSet ElemSet::from_elements(int parent_order, const std::vector<int>& members) {
  ElemSet s = empty(parent_order);
  for (int x : members) s.insert(x);
  return s;
}

std::vector<int> ElemSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int x = 0; x < parent_order; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

ElemSet& ElemSet::insert(int x) {
  if (x < 0 || x >= parent_order) {
    fail(errc::element_out_of_range, "element " + std::to_string(x) +
                                         " outside semigroup of order " +
                                         std::to_string(parent_order));
  }
  bits |= mask_t{1} << x;
  return *this;
}

bool ElemSet::subset_of(const ElemSet& other) const {
  require_same_parent(*this, other);
  return (bits & ~other.bits) == 0;
}

bool ElemSet::proper_subset_of(const ElemSet& other) const {
  return subset_of(other) && bits != other.bits;
}

ElemSet operator&(const ElemSet& a, const ElemSet& b) {
  require_same_parent(a, b);
  return ElemSet(a.parent_order, a.bits & b.bits);
}

ElemSet operator|(const ElemSet& a, const ElemSet& b) {
  require_same_parent(a, b);
  return ElemSet(a.parent_order, a.bits | b.bits);
}

void require_same_parent(const ElemSet& a, const ElemSet& b) {
  if (a.parent_order != b.parent_order) {
    fail(errc::parent_mismatch, "subsets live over different semigroups (orders " +
                                    std::to_string(a.parent_order) + " and " +
                                    std::to_string(b.parent_order) + ")");
  }
}

}  // namespace lsemi
