#include "lsemi/congruence.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>

#include "lsemi/config.hpp"
#include "lsemi/error.hpp"
#include "lsemi/groups.hpp"

namespace lsemi {

namespace {

void require_parent(const Semigroup& s, const ElemSet& h, const char* what) {
  if (h.parent_order != s.order()) {
    fail(errc::parent_mismatch, std::string(what) + " belongs to a semigroup of order " +
                                    std::to_string(h.parent_order) + ", expected " +
                                    std::to_string(s.order()));
  }
}

void require_congruence_shape(const Semigroup& s, const Congruence& c) {
  if (c.parent_order != s.order() || static_cast<int>(c.class_of.size()) != s.order()) {
    fail(errc::parent_mismatch, "congruence is over order " + std::to_string(c.parent_order) +
                                    ", expected " + std::to_string(s.order()));
  }
  for (int x = 0; x < s.order(); ++x) {
    if (c.class_of[static_cast<std::size_t>(x)] < 0 ||
        c.class_of[static_cast<std::size_t>(x)] >= c.class_count) {
      fail(errc::not_a_congruence, "class id of element " + std::to_string(x) + " out of range");
    }
  }
}

// Re-number arbitrary class ids densely, in order of least member.
Congruence densify(int n, const std::vector<int>& raw) {
  Congruence c;
  c.parent_order = n;
  c.class_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> remap;
  for (int x = 0; x < n; ++x) {
    const int r = raw[static_cast<std::size_t>(x)];
    int id = -1;
    for (int k = 0; k < static_cast<int>(remap.size()); ++k) {
      if (remap[static_cast<std::size_t>(k)] == r) {
        id = k;
        break;
      }
    }
    if (id < 0) {
      id = static_cast<int>(remap.size());
      remap.push_back(r);
    }
    c.class_of[static_cast<std::size_t>(x)] = id;
  }
  c.class_count = static_cast<int>(remap.size());
  return c;
}

}  // namespace

ContextRelation context(const Semigroup& s, const ElemSet& h, int base) {
  require_parent(s, h, "subset");
  if (h.is_empty()) fail(errc::empty_subset, "context relative to the empty subset is undefined");
  if (base < 0 || base >= s.order()) {
    fail(errc::element_out_of_range,
         "context base " + std::to_string(base) + " outside semigroup of order " +
             std::to_string(s.order()));
  }
  ContextRelation r;
  r.base = base;
  for (int x = 0; x < s.order(); ++x) {
    const int xa = s.at(x, base);
    for (int y = 0; y < s.order(); ++y) {
      if (h.contains(s.at(xa, y))) r.pairs.emplace_back(x, y);
    }
  }
  return r;
}

ElemSet Congruence::class_members(int cls) const {
  if (cls < 0 || cls >= class_count) {
    fail(errc::element_out_of_range, "class id " + std::to_string(cls) + " out of range");
  }
  ElemSet out = ElemSet::empty(parent_order);
  for (int x = 0; x < parent_order; ++x) {
    if (class_of[static_cast<std::size_t>(x)] == cls) out.insert(x);
  }
  return out;
}

Congruence identity_congruence(int n) {
  Congruence c;
  c.parent_order = n;
  c.class_count = n;
  c.class_of.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) c.class_of[static_cast<std::size_t>(x)] = x;
  return c;
}

Congruence universal_congruence(int n) {
  Congruence c;
  c.parent_order = n;
  c.class_count = n > 0 ? 1 : 0;
  c.class_of.assign(static_cast<std::size_t>(n), 0);
  return c;
}

bool is_congruence(const Semigroup& s, const Congruence& c) {
  require_congruence_shape(s, c);
  const auto& cls = c.class_of;
  for (int a = 0; a < s.order(); ++a) {
    for (int b = a + 1; b < s.order(); ++b) {
      if (cls[static_cast<std::size_t>(a)] != cls[static_cast<std::size_t>(b)]) continue;
      for (int x = 0; x < s.order(); ++x) {
        if (cls[static_cast<std::size_t>(s.at(x, a))] != cls[static_cast<std::size_t>(s.at(x, b))])
          return false;
        if (cls[static_cast<std::size_t>(s.at(a, x))] != cls[static_cast<std::size_t>(s.at(b, x))])
          return false;
      }
    }
  }
  return true;
}

PrincipalCongruence principal_congruence(const Semigroup& s, const ElemSet& h) {
  require_parent(s, h, "subset");
  if (h.is_empty()) {
    fail(errc::empty_subset, "principal congruence of the empty subset is undefined");
  }
  const int n = s.order();
  // Context fingerprints: bit x*n + y of fp[a] says whether x*a*y lands in
  // H. Elements are congruent exactly when their fingerprints coincide, so
  // the relation falls out of grouping n bitvectors of n^2 bits: O(n^3).
  const int words = (n * n + 63) / 64;
  std::vector<std::vector<mask_t>> fp(static_cast<std::size_t>(n),
                                      std::vector<mask_t>(static_cast<std::size_t>(words), 0));
  for (int a = 0; a < n; ++a) {
    auto& f = fp[static_cast<std::size_t>(a)];
    for (int x = 0; x < n; ++x) {
      const int xa = s.at(x, a);
      for (int y = 0; y < n; ++y) {
        if (h.contains(s.at(xa, y))) {
          const int bit = x * n + y;
          f[static_cast<std::size_t>(bit / 64)] |= mask_t{1} << (bit % 64);
        }
      }
    }
  }
  PrincipalCongruence out;
  out.congruence.parent_order = n;
  out.congruence.class_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;  // least member per class, ascending by construction
  for (int a = 0; a < n; ++a) {
    int id = -1;
    for (int k = 0; k < static_cast<int>(reps.size()); ++k) {
      if (fp[static_cast<std::size_t>(a)] ==
          fp[static_cast<std::size_t>(reps[static_cast<std::size_t>(k)])]) {
        id = k;
        break;
      }
    }
    if (id < 0) {
      id = static_cast<int>(reps.size());
      reps.push_back(a);
    }
    out.congruence.class_of[static_cast<std::size_t>(a)] = id;
  }
  out.congruence.class_count = static_cast<int>(reps.size());
  if (!is_congruence(s, out.congruence)) {
    fail(errc::theorem_check_failed,
         "context relation failed the compatibility scan; it should always be a congruence");
  }
  // Residue class W: elements whose context is empty. When present it must
  // be a single class (automatic: empty fingerprints are equal) and a
  // two-sided ideal; the ideal property is certified here.
  out.w_set = ElemSet::empty(n);
  const std::vector<mask_t> zero(static_cast<std::size_t>(words), 0);
  for (int a = 0; a < n; ++a) {
    if (fp[static_cast<std::size_t>(a)] == zero) out.w_set.insert(a);
  }
  if (!out.w_set.is_empty()) {
    out.w_class = out.congruence.class_of[static_cast<std::size_t>(out.w_set.elements().front())];
    for (int w : out.w_set.elements()) {
      for (int x = 0; x < n; ++x) {
        if (!out.w_set.contains(s.at(x, w)) || !out.w_set.contains(s.at(w, x))) {
          fail(errc::theorem_check_failed, "residue class " + s.label_set(out.w_set) +
                                               " is not an ideal, violated at element " +
                                               s.label(x));
        }
      }
    }
  }
  // h_class: set only when H is exactly one congruence class.
  const int first_cls = out.congruence.class_of[static_cast<std::size_t>(h.elements().front())];
  if (out.congruence.class_members(first_cls) == h) out.h_class = first_cls;
  return out;
}

QuotientSemigroup quotient(const Semigroup& s, const Congruence& c) {
  require_congruence_shape(s, c);
  if (!is_congruence(s, c)) {
    fail(errc::not_a_congruence, "partition is not compatible with the product");
  }
  std::vector<int> rep(static_cast<std::size_t>(c.class_count), -1);
  for (int x = s.order() - 1; x >= 0; --x) rep[static_cast<std::size_t>(c.class_of[static_cast<std::size_t>(x)])] = x;
  std::vector<std::vector<int>> table(static_cast<std::size_t>(c.class_count),
                                      std::vector<int>(static_cast<std::size_t>(c.class_count)));
  for (int i = 0; i < c.class_count; ++i) {
    for (int j = 0; j < c.class_count; ++j) {
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          c.class_of[static_cast<std::size_t>(s.at(rep[static_cast<std::size_t>(i)],
                                                    rep[static_cast<std::size_t>(j)]))];
    }
  }
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(c.class_count));
  for (int i = 0; i < c.class_count; ++i) labels.push_back(s.label_set(c.class_members(i)));
  QuotientSemigroup q{Semigroup(table, std::move(labels)), c.class_of};
  return q;
}

bool is_group_with_identity(const QuotientSemigroup& q, int identity_class) {
  const Semigroup& g = q.quotient;
  if (identity_class < 0 || identity_class >= g.order()) {
    fail(errc::element_out_of_range,
         "class id " + std::to_string(identity_class) + " out of range");
  }
  for (int x = 0; x < g.order(); ++x) {
    if (g.at(identity_class, x) != x || g.at(x, identity_class) != x) return false;
  }
  for (int x = 0; x < g.order(); ++x) {
    bool inv = false;
    for (int y = 0; y < g.order() && !inv; ++y) {
      inv = g.at(x, y) == identity_class && g.at(y, x) == identity_class;
    }
    if (!inv) return false;
  }
  return true;
}

bool saturates(const Congruence& c, const ElemSet& n) {
  if (c.parent_order != n.parent_order) {
    fail(errc::parent_mismatch, "congruence and subset live over different semigroups");
  }
  for (int cls = 0; cls < c.class_count; ++cls) {
    const ElemSet members = c.class_members(cls);
    const ElemSet inside = members & n;
    if (!inside.is_empty() && !(inside == members)) return false;
  }
  return true;
}

Congruence restrict_to(const Semigroup& s, const Congruence& c, const ElemSet& n) {
  require_congruence_shape(s, c);
  require_parent(s, n, "subset");
  if (n.is_empty()) fail(errc::empty_subset, "cannot restrict to the empty subset");
  if (!is_subsemigroup(s, n)) {
    fail(errc::not_a_subsemigroup, s.label_set(n) + " is not a subsemigroup");
  }
  const std::vector<int> members = n.elements();
  std::vector<int> raw(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    raw[i] = c.class_of[static_cast<std::size_t>(members[i])];
  }
  return densify(static_cast<int>(members.size()), raw);
}

namespace {

// Shared helper: quotient of the subsemigroup induced by `carrier` modulo
// the principal congruence of `h` inside it. `h` must lie inside carrier.
QuotientSemigroup quotient_within(const Semigroup& s, const ElemSet& carrier, const ElemSet& h,
                                  PrincipalCongruence* pc_out = nullptr,
                                  InducedSubsemigroup* sub_out = nullptr) {
  InducedSubsemigroup sub = induced(s, carrier);
  PrincipalCongruence pc = principal_congruence(sub.sub, sub.reindex(h));
  QuotientSemigroup q = quotient(sub.sub, pc.congruence);
  if (pc_out) *pc_out = pc;
  if (sub_out) *sub_out = std::move(sub);
  return q;
}

}  // namespace

CorrespondenceReport correspondence_check(const Semigroup& s, const ElemSet& h) {
  require_parent(s, h, "subset");
  if (h.is_empty()) fail(errc::empty_subset, "subset must be non-empty");
  if (!is_left_simple(s)) {
    fail(errc::precondition_violated, "NotLeftSimple: the ambient semigroup must be left simple");
  }
  if (!is_ru_subsemigroup(s, h)) {
    fail(errc::precondition_violated,
         "HNotReflexiveUnitary: " + s.label_set(h) + " is not a reflexive unitary subsemigroup");
  }
  PrincipalCongruence pc = principal_congruence(s, h);
  if (!pc.h_class) {
    fail(errc::theorem_check_failed, s.label_set(h) + " is not a full congruence class");
  }
  CorrespondenceReport rep{quotient(s, pc.congruence), *pc.h_class, {}, 0, false};
  if (!is_group_with_identity(rep.base_quotient, rep.h_class)) {
    fail(errc::theorem_check_failed,
         "quotient modulo " + s.label_set(h) + " is not a group with identity class H");
  }
  const Semigroup& q = rep.base_quotient.quotient;
  const std::vector<mask_t> subgroups = subgroups_of(q);
  rep.subgroup_count = static_cast<int>(subgroups.size());

  std::vector<mask_t> images;
  for (const ElemSet& n : enumerate_unitary_subsemigroups_over(s, h)) {
    CorrespondenceEntry e;
    e.n = n;
    e.saturated = saturates(pc.congruence, n);
    if (!e.saturated) {
      fail(errc::theorem_check_failed,
           "unitary subsemigroup " + s.label_set(n) + " is not saturated by the congruence of " +
               s.label_set(h));
    }
    for (int x : n.elements()) {
      e.image_classes |= mask_t{1} << rep.base_quotient.projection[static_cast<std::size_t>(x)];
    }
    e.image_subgroup =
        std::find(subgroups.begin(), subgroups.end(), e.image_classes) != subgroups.end();
    if (!e.image_subgroup) {
      fail(errc::theorem_check_failed,
           "image of " + s.label_set(n) + " is not a subgroup of the quotient");
    }
    e.reflexive = is_reflexive(s, n);
    e.image_normal = is_normal_subgroup(q, e.image_classes);
    if (e.reflexive != e.image_normal) {
      fail(errc::theorem_check_failed, "reflexivity of " + s.label_set(n) +
                                           " does not match normality of its image");
    }
    const InducedSubsemigroup sub_n = induced(s, n);
    e.restriction_matches =
        restrict_to(s, pc.congruence, n) ==
        principal_congruence(sub_n.sub, sub_n.reindex(h)).congruence;
    if (!e.restriction_matches) {
      fail(errc::theorem_check_failed,
           "restricting the congruence of " + s.label_set(h) + " to " + s.label_set(n) +
               " does not equal the principal congruence computed inside it");
    }
    if (e.reflexive) {
      // Second quotient: (S/P_H) modulo the image subgroup, against S/P_N.
      const ElemSet image(q.order(), e.image_classes);
      QuotientSemigroup above = quotient(q, principal_congruence(q, image).congruence);
      QuotientSemigroup direct = quotient(s, principal_congruence(s, n).congruence);
      auto w = is_isomorphic(above.quotient, direct.quotient);
      if (!w) {
        fail(errc::theorem_check_failed,
             "(S/H)/(N/H) and S/N are not isomorphic for N = " + s.label_set(n));
      }
      e.third_iso = *w;
    }
    images.push_back(e.image_classes);
    rep.entries.push_back(std::move(e));
  }

  // Bijectivity, both directions: images are pairwise distinct and every
  // subgroup of the quotient is hit by exactly one unitary subsemigroup
  // (its full preimage, which must itself appear in the enumeration).
  std::vector<mask_t> sorted_images = images;
  std::sort(sorted_images.begin(), sorted_images.end());
  const bool injective =
      std::adjacent_find(sorted_images.begin(), sorted_images.end()) == sorted_images.end();
  bool surjective = true;
  for (mask_t k : subgroups) {
    ElemSet preimage = ElemSet::empty(s.order());
    for (int x = 0; x < s.order(); ++x) {
      if ((k >> rep.base_quotient.projection[static_cast<std::size_t>(x)]) & 1u) preimage.insert(x);
    }
    bool found = false;
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
      if (rep.entries[i].n == preimage && images[i] == k) {
        found = true;
        break;
      }
    }
    if (!found) {
      surjective = false;
      break;
    }
  }
  rep.bijective = injective && surjective &&
                  static_cast<int>(rep.entries.size()) == rep.subgroup_count;
  if (!rep.bijective) {
    fail(errc::theorem_check_failed,
         "unitary subsemigroups over " + s.label_set(h) +
             " do not correspond bijectively to the subgroups of the quotient");
  }
  return rep;
}

IsoWitness intersection_iso(const Semigroup& s, const ElemSet& h, const ElemSet& n) {
  require_parent(s, h, "subset H");
  require_parent(s, n, "subset N");
  if (h.is_empty() || n.is_empty()) fail(errc::empty_subset, "subsets must be non-empty");
  if (!is_ru_subsemigroup(s, h)) {
    fail(errc::precondition_violated,
         "HNotReflexiveUnitary: " + s.label_set(h) + " is not a reflexive unitary subsemigroup");
  }
  if (!is_subsemigroup(s, n)) {
    fail(errc::not_a_subsemigroup, s.label_set(n) + " is not a subsemigroup");
  }
  const ElemSet meet = h & n;
  if (meet.is_empty()) {
    fail(errc::precondition_violated,
         "EmptyIntersection: " + s.label_set(h) + " does not meet " + s.label_set(n));
  }
  // Inside N the intersection must again be reflexive unitary — a certified
  // conclusion, not an input requirement.
  InducedSubsemigroup sub_n = induced(s, n);
  if (!is_ru_subsemigroup(sub_n.sub, sub_n.reindex(meet))) {
    fail(errc::theorem_check_failed, "intersection " + s.label_set(meet) +
                                         " is not reflexive unitary inside " + s.label_set(n));
  }
  const ElemSet join = closure(s, h | n);
  QuotientSemigroup join_mod_h = quotient_within(s, join, h);
  QuotientSemigroup n_mod_meet = quotient(sub_n.sub, principal_congruence(sub_n.sub, sub_n.reindex(meet)).congruence);
  auto w = is_isomorphic(join_mod_h.quotient, n_mod_meet.quotient);
  if (!w) {
    fail(errc::theorem_check_failed, "<H,N>/H and N/(H∩N) are not isomorphic for H = " +
                                         s.label_set(h) + ", N = " + s.label_set(n));
  }
  return *w;
}

ZassenhausReport zassenhaus(const Semigroup& s, const ElemSet& a, const ElemSet& b,
                            const ElemSet& n, const ElemSet& m) {
  require_parent(s, a, "subset A");
  require_parent(s, b, "subset B");
  require_parent(s, n, "subset N");
  require_parent(s, m, "subset M");
  if (!is_left_simple(s)) {
    fail(errc::precondition_violated, "NotLeftSimple: the ambient semigroup must be left simple");
  }
  const std::pair<const ElemSet*, const char*> outer_subs[] = {{&a, "A"}, {&b, "B"}};
  for (const auto& [set, name] : outer_subs) {
    if (set->is_empty() || !is_subsemigroup(s, *set) || !is_unitary(s, *set)) {
      fail(errc::precondition_violated,
           std::string(name) + " must be a unitary subsemigroup, got " + s.label_set(*set));
    }
  }
  InducedSubsemigroup sub_a = induced(s, a);
  InducedSubsemigroup sub_b = induced(s, b);
  if (n.is_empty() || !n.subset_of(a) || !is_ru_subsemigroup(sub_a.sub, sub_a.reindex(n))) {
    fail(errc::precondition_violated,
         "N must be a reflexive unitary subsemigroup of A, got " + s.label_set(n));
  }
  if (m.is_empty() || !m.subset_of(b) || !is_ru_subsemigroup(sub_b.sub, sub_b.reindex(m))) {
    fail(errc::precondition_violated,
         "M must be a reflexive unitary subsemigroup of B, got " + s.label_set(m));
  }
  const ElemSet a_cap_b = a & b;
  if (a_cap_b.is_empty()) {
    fail(errc::precondition_violated, "EmptyIntersection: A and B do not meet");
  }
  const ElemSet a_cap_m = a & m;
  const ElemSet b_cap_n = b & n;
  const ElemSet n_acb = set_product(s, n, a_cap_b);
  const ElemSet n_acm = set_product(s, n, a_cap_m);
  const ElemSet m_acb = set_product(s, m, a_cap_b);
  const ElemSet m_bcn = set_product(s, m, b_cap_n);
  // Certified shape facts before the quotients are formed.
  const std::tuple<const ElemSet*, const ElemSet*, const char*> sides[] = {
      {&n_acm, &n_acb, "N(A∩M) inside N(A∩B)"}, {&m_bcn, &m_acb, "M(B∩N) inside M(A∩B)"}};
  for (const auto& [inner, outer, what] : sides) {
    if (inner->is_empty() || !is_subsemigroup(s, *outer) || !inner->subset_of(*outer)) {
      fail(errc::theorem_check_failed, std::string("product sets are malformed: ") + what);
    }
    InducedSubsemigroup sub = induced(s, *outer);
    if (!is_ru_subsemigroup(sub.sub, sub.reindex(*inner))) {
      fail(errc::theorem_check_failed,
           std::string(what) + " is not a reflexive unitary subsemigroup");
    }
  }
  QuotientSemigroup left_q = quotient_within(s, n_acb, n_acm);
  QuotientSemigroup right_q = quotient_within(s, m_acb, m_bcn);
  auto w = is_isomorphic(left_q.quotient, right_q.quotient);
  if (!w) {
    fail(errc::theorem_check_failed,
         "N(A∩B)/N(A∩M) and M(A∩B)/M(B∩N) are not isomorphic");
  }
  return ZassenhausReport{a_cap_b,          a_cap_m,           b_cap_n, n_acb, n_acm, m_acb,
                          m_bcn,            std::move(left_q), std::move(right_q),
                          std::move(*w)};
}

namespace {

void enumerate_partitions(const Semigroup& s, std::vector<int>& assign, int pos, int next_id,
                          std::vector<Congruence>& out) {
  const int n = s.order();
  if (pos == n) {
    Congruence c;
    c.parent_order = n;
    c.class_of = assign;
    c.class_count = next_id;
    if (is_congruence(s, c)) out.push_back(std::move(c));
    return;
  }
  // Restricted growth: element pos may join any existing class or open the
  // next one; ids are automatically dense and least-member ordered.
  for (int id = 0; id <= next_id && id < n; ++id) {
    assign[static_cast<std::size_t>(pos)] = id;
    enumerate_partitions(s, assign, pos + 1, id == next_id ? next_id + 1 : next_id, out);
  }
}

}  // namespace

std::vector<Congruence> enumerate_congruences(const Semigroup& s, int order_limit) {
  if (s.order() > order_limit) {
    fail(errc::order_bound_exceeded, "congruence enumeration is exponential; order " +
                                         std::to_string(s.order()) + " exceeds the limit " +
                                         std::to_string(order_limit));
  }
  std::vector<Congruence> out;
  std::vector<int> assign(static_cast<std::size_t>(s.order()), 0);
  enumerate_partitions(s, assign, 1, 1, out);
  return out;
}

}  // namespace lsemi
