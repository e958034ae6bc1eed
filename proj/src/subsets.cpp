#include "lsemi/subsets.hpp"

#include <string>

#include "lsemi/config.hpp"
#include "lsemi/error.hpp"

namespace lsemi {

namespace {

void require_subject(const Semigroup& s, const ElemSet& h, const char* what) {
  if (h.parent_order != s.order()) {
    fail(errc::parent_mismatch, std::string(what) + " belongs to a semigroup of order " +
                                    std::to_string(h.parent_order) + ", expected " +
                                    std::to_string(s.order()));
  }
  if (h.is_empty()) fail(errc::empty_subset, std::string(what) + " must be non-empty");
}

// Mask-level predicates used by the exhaustive sweeps; early-exit and
// allocation-free so scanning all 2^n subsets stays cheap.
bool mask_closed(const Semigroup& s, mask_t m) {
  for (int a = 0; a < s.order(); ++a) {
    if (!((m >> a) & 1u)) continue;
    for (int b = 0; b < s.order(); ++b) {
      if (((m >> b) & 1u) && !((m >> s.at(a, b)) & 1u)) return false;
    }
  }
  return true;
}

bool mask_reflexive(const Semigroup& s, mask_t m) {
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < s.order(); ++b) {
      if (((m >> s.at(a, b)) & 1u) && !((m >> s.at(b, a)) & 1u)) return false;
    }
  }
  return true;
}

bool mask_left_unitary(const Semigroup& s, mask_t m) {
  for (int a = 0; a < s.order(); ++a) {
    if (!((m >> a) & 1u)) continue;
    for (int b = 0; b < s.order(); ++b) {
      if (((m >> s.at(a, b)) & 1u) && !((m >> b) & 1u)) return false;
    }
  }
  return true;
}

bool mask_right_unitary(const Semigroup& s, mask_t m) {
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < s.order(); ++b) {
      if (((m >> b) & 1u) && ((m >> s.at(a, b)) & 1u) && !((m >> a) & 1u)) return false;
    }
  }
  return true;
}

std::vector<ElemSet> sweep(const Semigroup& s, bool (*pred)(const Semigroup&, mask_t)) {
  const int n = s.order();
  if (n > config::max_order()) {
    fail(errc::order_bound_exceeded, "subset sweep on order " + std::to_string(n) +
                                         " exceeds the configured bound " +
                                         std::to_string(config::max_order()));
  }
  std::vector<ElemSet> out;
  const mask_t full = ElemSet::full(n).bits;
  for (mask_t m = 1; m <= full; ++m) {
    if (mask_closed(s, m) && pred(s, m)) out.emplace_back(n, m);
  }
  return out;
}

}  // namespace

std::optional<witness_pair> reflexive_violation(const Semigroup& s, const ElemSet& h) {
  require_subject(s, h, "subset");
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < s.order(); ++b) {
      if (h.contains(s.at(a, b)) && !h.contains(s.at(b, a))) return witness_pair{a, b};
    }
  }
  return std::nullopt;
}

std::optional<witness_pair> left_unitary_violation(const Semigroup& s, const ElemSet& u) {
  require_subject(s, u, "subset");
  for (int a = 0; a < s.order(); ++a) {
    if (!u.contains(a)) continue;
    for (int b = 0; b < s.order(); ++b) {
      if (u.contains(s.at(a, b)) && !u.contains(b)) return witness_pair{a, b};
    }
  }
  return std::nullopt;
}

std::optional<witness_pair> right_unitary_violation(const Semigroup& s, const ElemSet& u) {
  require_subject(s, u, "subset");
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < s.order(); ++b) {
      if (u.contains(b) && u.contains(s.at(a, b)) && !u.contains(a)) return witness_pair{a, b};
    }
  }
  return std::nullopt;
}

std::optional<witness_pair> closure_violation(const Semigroup& s, const ElemSet& h) {
  require_subject(s, h, "subset");
  for (int a = 0; a < s.order(); ++a) {
    if (!h.contains(a)) continue;
    for (int b = 0; b < s.order(); ++b) {
      if (h.contains(b) && !h.contains(s.at(a, b))) return witness_pair{a, b};
    }
  }
  return std::nullopt;
}

bool is_reflexive(const Semigroup& s, const ElemSet& h) { return !reflexive_violation(s, h); }

bool is_left_unitary(const Semigroup& s, const ElemSet& u) {
  return !left_unitary_violation(s, u);
}

bool is_right_unitary(const Semigroup& s, const ElemSet& u) {
  return !right_unitary_violation(s, u);
}

bool is_unitary(const Semigroup& s, const ElemSet& u) {
  return is_left_unitary(s, u) && is_right_unitary(s, u);
}

bool is_ru_subsemigroup(const Semigroup& s, const ElemSet& h) {
  if (h.parent_order != s.order() || h.is_empty()) return false;
  return mask_closed(s, h.bits) && mask_reflexive(s, h.bits) && mask_left_unitary(s, h.bits) &&
         mask_right_unitary(s, h.bits);
}

SubsetReport subset_report(const Semigroup& s, const ElemSet& h) {
  SubsetReport r;
  r.subject = h;
  r.closure_witness = closure_violation(s, h);
  r.reflexive_witness = reflexive_violation(s, h);
  r.left_unitary_witness = left_unitary_violation(s, h);
  r.right_unitary_witness = right_unitary_violation(s, h);
  r.subsemigroup = !r.closure_witness;
  r.reflexive = !r.reflexive_witness;
  r.left_unitary = !r.left_unitary_witness;
  r.right_unitary = !r.right_unitary_witness;
  r.unitary = r.left_unitary && r.right_unitary;
  return r;
}

ElemSet join_hn(const Semigroup& s, const ElemSet& h, const ElemSet& n) {
  require_subject(s, h, "first subsemigroup");
  require_subject(s, n, "second subsemigroup");
  if (!is_left_simple(s)) {
    fail(errc::precondition_violated, "NotLeftSimple: the ambient semigroup must be left simple");
  }
  if (!is_ru_subsemigroup(s, h)) {
    fail(errc::precondition_violated,
         "HNotReflexiveUnitary: " + s.label_set(h) + " is not a reflexive unitary subsemigroup");
  }
  if (!is_subsemigroup(s, n) || !is_unitary(s, n)) {
    fail(errc::precondition_violated,
         "NNotUnitary: " + s.label_set(n) + " is not a unitary subsemigroup");
  }
  const ElemSet hn = set_product(s, h, n);
  const ElemSet generated = closure(s, h | n);
  // Certified conclusions: the product set is already the join, it is
  // unitary, and H meets N. With N reflexive the product commutes and the
  // join is reflexive as well.
  if (!(hn == generated)) {
    fail(errc::theorem_check_failed, "HN = " + s.label_set(hn) +
                                         " differs from the generated subsemigroup " +
                                         s.label_set(generated));
  }
  if ((h & n).is_empty()) {
    fail(errc::theorem_check_failed,
         "unitary subsemigroups " + s.label_set(h) + " and " + s.label_set(n) + " do not meet");
  }
  if (!is_unitary(s, hn)) {
    fail(errc::theorem_check_failed, "join " + s.label_set(hn) + " is not unitary");
  }
  if (is_reflexive(s, n)) {
    if (!(hn == set_product(s, n, h))) {
      fail(errc::theorem_check_failed,
           "HN != NH although both subsemigroups are reflexive");
    }
    if (!is_reflexive(s, hn)) {
      fail(errc::theorem_check_failed, "join " + s.label_set(hn) + " is not reflexive");
    }
  }
  return hn;
}

std::vector<ElemSet> enumerate_subsemigroups(const Semigroup& s) {
  return sweep(s, [](const Semigroup&, mask_t) { return true; });
}

std::vector<ElemSet> enumerate_ru_subsemigroups(const Semigroup& s) {
  return sweep(s, [](const Semigroup& sg, mask_t m) {
    return mask_reflexive(sg, m) && mask_left_unitary(sg, m) && mask_right_unitary(sg, m);
  });
}

std::vector<ElemSet> enumerate_unitary_subsemigroups(const Semigroup& s) {
  return sweep(s, [](const Semigroup& sg, mask_t m) {
    return mask_left_unitary(sg, m) && mask_right_unitary(sg, m);
  });
}

std::vector<ElemSet> enumerate_right_unitary_subsemigroups(const Semigroup& s) {
  return sweep(s, [](const Semigroup& sg, mask_t m) { return mask_right_unitary(sg, m); });
}

std::vector<ElemSet> enumerate_unitary_subsemigroups_over(const Semigroup& s, const ElemSet& h) {
  require_subject(s, h, "base subsemigroup");
  if (!is_subsemigroup(s, h)) {
    fail(errc::not_a_subsemigroup, s.label_set(h) + " is not a subsemigroup");
  }
  std::vector<ElemSet> out;
  const mask_t full = ElemSet::full(s.order()).bits;
  // Ascending sweep restricted to supersets of h: (m+1) | h jumps to the
  // next mask containing h.
  for (mask_t m = h.bits;; m = (m + 1) | h.bits) {
    if (mask_closed(s, m) && mask_left_unitary(s, m) && mask_right_unitary(s, m)) {
      out.emplace_back(s.order(), m);
    }
    if (m == full) break;
  }
  return out;
}

}  // namespace lsemi
