#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lsemi/semigroup.hpp"
#include "lsemi/subsets.hpp"

namespace lsemi {

// The context of `base` relative to a subset H: all pairs (s, t) with
// s * base * t in H. Two elements are congruent exactly when their contexts
// coincide, and an empty context puts the element into the residue class W.
struct ContextRelation {
  int base = 0;
  std::vector<std::pair<int, int>> pairs;  // lexicographically sorted

  bool empty() const { return pairs.empty(); }
  friend bool operator==(const ContextRelation&, const ContextRelation&) = default;
};

ContextRelation context(const Semigroup& s, const ElemSet& h, int base);

// Partition of 0..parent_order-1 into classes, ids dense and assigned in
// order of least member (class_of[0] == 0, and the first element outside
// class 0 gets id 1, and so on).
struct Congruence {
  int parent_order = 0;
  std::vector<int> class_of;
  int class_count = 0;

  ElemSet class_members(int cls) const;
  friend bool operator==(const Congruence&, const Congruence&) = default;
};

Congruence identity_congruence(int n);
Congruence universal_congruence(int n);

// Compatibility scan: a ~ b implies xa ~ xb and ax ~ bx for all x.
bool is_congruence(const Semigroup& s, const Congruence& c);

// The congruence induced by a subset H, together with the distinguished
// classes: h_class is set when H is itself a class, w_class when some
// elements have empty context (their class W, always an ideal — both facts
// are certified during construction).
struct PrincipalCongruence {
  Congruence congruence;
  std::optional<int> h_class;
  std::optional<int> w_class;
  ElemSet w_set;
};

// Groups elements by context. Implemented with n^2-bit context fingerprints
// per element, so the whole relation costs O(n^3) bit operations; the result
// is certified to be a congruence before it is returned.
PrincipalCongruence principal_congruence(const Semigroup& s, const ElemSet& h);

// Factor semigroup. Class labels are brace-joined member labels; classes are
// re-indexed densely by least member; projection maps parent elements to
// class ids. Throws not_a_congruence when the compatibility scan fails.
struct QuotientSemigroup {
  Semigroup quotient;
  std::vector<int> projection;
};

QuotientSemigroup quotient(const Semigroup& s, const Congruence& c);

// True iff class `identity_class` is a two-sided identity of the factor
// semigroup and every class has a two-sided inverse.
bool is_group_with_identity(const QuotientSemigroup& q, int identity_class);

// Every class lies inside N or outside N.
bool saturates(const Congruence& c, const ElemSet& n);

// Restriction of `c` to the subsemigroup N, re-indexed densely: sub-index i
// is the i-th member of N ascending, and class ids are re-assigned by least
// sub-index. Throws not_a_subsemigroup when N is not closed.
Congruence restrict_to(const Semigroup& s, const Congruence& c, const ElemSet& n);

// One row of the subgroup correspondence over a reflexive unitary H in a
// left simple semigroup: a unitary subsemigroup N containing H, its image in
// the quotient group, and the facts certified about it.
struct CorrespondenceEntry {
  ElemSet n;
  mask_t image_classes = 0;   // subset of quotient class ids
  bool saturated = false;     // N is a union of congruence classes
  bool image_subgroup = false;
  bool reflexive = false;     // N reflexive in the parent
  bool image_normal = false;  // image normal in the quotient group
  bool restriction_matches = false;  // restricted congruence == principal congruence inside N
  std::optional<IsoWitness> third_iso;  // (S/P_H)/(image) ~ S/P_N, reflexive N only
};

struct CorrespondenceReport {
  QuotientSemigroup base_quotient;
  int h_class = 0;
  std::vector<CorrespondenceEntry> entries;  // ascending by subset mask
  int subgroup_count = 0;
  bool bijective = false;  // N <-> subgroup correspondence is a bijection
};

// Certifies the full correspondence between unitary subsemigroups over H and
// subgroups of the quotient group, including the normality criterion for
// reflexive members and the second-quotient isomorphism. Any failed
// conclusion raises theorem_check_failed.
CorrespondenceReport correspondence_check(const Semigroup& s, const ElemSet& h);

// Witness for <H,N>/(congruence of H) ~ N/(congruence of H∩N), where H is a
// reflexive unitary subsemigroup, N any subsemigroup meeting H. Works in an
// arbitrary semigroup; both quotients are computed inside the respective
// induced subsemigroups. Throws precondition_violated (EmptyIntersection is
// named in the message) and theorem_check_failed if no witness exists.
IsoWitness intersection_iso(const Semigroup& s, const ElemSet& h, const ElemSet& n);

// Butterfly refinement step: for unitary A, B with N reflexive unitary in A
// and M reflexive unitary in B, certifies
//   N(A∩B) / P_{N(A∩M)}  ~  M(A∩B) / P_{M(B∩N)}
// and returns all intermediate data for reporting.
struct ZassenhausReport {
  ElemSet a_cap_b, a_cap_m, b_cap_n;
  ElemSet n_acb, n_acm, m_acb, m_bcn;
  QuotientSemigroup left_quotient, right_quotient;
  IsoWitness witness;
};

ZassenhausReport zassenhaus(const Semigroup& s, const ElemSet& a, const ElemSet& b,
                            const ElemSet& n, const ElemSet& m);

// All congruences on a small semigroup by restricted-growth-string partition
// enumeration plus a compatibility scan. Exponential (Bell numbers); refuses
// orders above `order_limit`.
std::vector<Congruence> enumerate_congruences(const Semigroup& s, int order_limit = 8);

}  // namespace lsemi
