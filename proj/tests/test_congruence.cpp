#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "lsemi/congruence.hpp"
#include "lsemi/error.hpp"
#include "lsemi/factory.hpp"
#include "lsemi/groups.hpp"
#include "oracles.hpp"

using namespace lsemi;

namespace {

Semigroup named(const char* name) { return find_named_instance(name).value(); }

// min as product: not left simple, idempotent, commutative
Semigroup min_semilattice() {
  return Semigroup(std::vector<std::vector<int>>{{0, 0}, {0, 1}});
}

using pair_list = std::vector<std::pair<int, int>>;

}  // namespace

TEST_CASE("context pairs, frozen on the two element group") {
  const Semigroup z2 = named("Z2");
  const ElemSet h = ElemSet::of(2, {0});
  const ContextRelation c0 = context(z2, h, 0);
  CHECK(c0.base == 0);
  CHECK(c0.pairs == pair_list{{0, 0}, {1, 1}});
  const ContextRelation c1 = context(z2, h, 1);
  CHECK(c1.pairs == pair_list{{0, 1}, {1, 0}});
  CHECK(c0 != c1);
  CHECK(!c0.empty());

  try {
    context(z2, h, 2);
    FAIL("out of range base must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == errc::element_out_of_range);
  }
  CHECK_THROWS_AS(context(z2, ElemSet::empty(2), 0), Error);
}

TEST_CASE("congruence containers") {
  const Congruence id4 = identity_congruence(4);
  CHECK(id4.class_count == 4);
  CHECK(id4.class_of == std::vector<int>{0, 1, 2, 3});
  CHECK(id4.class_members(2) == ElemSet::of(4, {2}));
  const Congruence un4 = universal_congruence(4);
  CHECK(un4.class_count == 1);
  CHECK(un4.class_members(0) == ElemSet::full(4));

  const Semigroup z4 = named("Z4");
  CHECK(is_congruence(z4, id4));
  CHECK(is_congruence(z4, un4));
  // mod 2 classes are compatible with addition
  const Congruence mod2{4, {0, 1, 0, 1}, 2};
  CHECK(is_congruence(z4, mod2));
  // {0,1},{2,3} is not: 1 ~ 0 but 1+1 and 0+1 fall in different blocks
  const Congruence bad{4, {0, 0, 1, 1}, 2};
  CHECK(!is_congruence(z4, bad));
  CHECK_THROWS_AS(quotient(z4, bad), Error);
  try {
    quotient(z4, bad);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_a_congruence);
  }
}

TEST_CASE("principal congruence of a subgroup in a group") {
  const Semigroup z4 = named("Z4");
  const PrincipalCongruence pc = principal_congruence(z4, ElemSet::of(4, {0, 2}));
  CHECK(pc.congruence.class_count == 2);
  CHECK(pc.congruence.class_members(0) == ElemSet::of(4, {0, 2}));
  CHECK(pc.congruence.class_members(1) == ElemSet::of(4, {1, 3}));
  REQUIRE(pc.h_class.has_value());
  CHECK(*pc.h_class == 0);
  CHECK(!pc.w_class.has_value());
  CHECK(pc.w_set.is_empty());

  const QuotientSemigroup q = quotient(z4, pc.congruence);
  CHECK(q.quotient.order() == 2);
  CHECK(q.quotient.label(0) == "{0,2}");
  CHECK(q.quotient.label(1) == "{1,3}");
  CHECK(q.projection == std::vector<int>{0, 1, 0, 1});
  CHECK(is_group_with_identity(q, 0));
  CHECK(!is_group_with_identity(q, 1));
  REQUIRE(is_isomorphic(q.quotient, named("Z2")).has_value());
}

TEST_CASE("residue class W shows up outside left simple semigroups") {
  const Semigroup sl = min_semilattice();
  const PrincipalCongruence pc = principal_congruence(sl, ElemSet::of(2, {1}));
  // x*0*y = 0 never lands in {1}: element 0 has empty context
  CHECK(pc.congruence.class_count == 2);
  REQUIRE(pc.w_class.has_value());
  CHECK(*pc.w_class == 0);
  CHECK(pc.w_set == ElemSet::of(2, {0}));
  REQUIRE(pc.h_class.has_value());
  CHECK(*pc.h_class == 1);

  // quotient of the semilattice by the identity relation is itself
  const QuotientSemigroup q = quotient(sl, identity_congruence(2));
  CHECK(!is_group_with_identity(q, 0));
  CHECK(!is_group_with_identity(q, 1));
}

TEST_CASE("subsets that are not congruence classes") {
  // {0,1} in Z4 splits into singleton classes, so no class equals H
  const Semigroup z4 = named("Z4");
  const PrincipalCongruence pc = principal_congruence(z4, ElemSet::of(4, {0, 1}));
  CHECK(pc.congruence == identity_congruence(4));
  CHECK(!pc.h_class.has_value());
  CHECK(!pc.w_class.has_value());
  CHECK(pc.w_set.is_empty());
}

TEST_CASE("saturation and restriction") {
  const Semigroup z4 = named("Z4");
  const Congruence mod2{4, {0, 1, 0, 1}, 2};
  CHECK(saturates(mod2, ElemSet::of(4, {0, 2})));
  CHECK(saturates(mod2, ElemSet::full(4)));
  CHECK(!saturates(mod2, ElemSet::of(4, {0, 1})));
  CHECK(!saturates(mod2, ElemSet::of(4, {0})));

  const Congruence r = restrict_to(z4, mod2, ElemSet::of(4, {0, 2}));
  CHECK(r.parent_order == 2);
  CHECK(r.class_count == 1);
  CHECK(r.class_of == std::vector<int>{0, 0});

  const Congruence r2 = restrict_to(z4, identity_congruence(4), ElemSet::of(4, {0, 2}));
  CHECK(r2 == identity_congruence(2));

  try {
    restrict_to(z4, mod2, ElemSet::of(4, {0, 1}));
    FAIL("restriction needs a subsemigroup");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_a_subsemigroup);
  }
}

TEST_CASE("quotients by subgroup congruences match coset tables") {
  // every subgroup K of a catalog group: quotient modulo the congruence of K
  // must match the oracle coset table
  for (const char* name : {"Z4", "Z6", "Klein", "S3", "Q8"}) {
    const Semigroup g = named(name);
    CAPTURE(name);
    for (mask_t k : subgroups_of(g)) {
      if (!is_normal_subgroup(g, k)) continue;
      const ElemSet sub(g.order(), k);
      const PrincipalCongruence pc = principal_congruence(g, sub);
      REQUIRE(pc.h_class.has_value());
      const QuotientSemigroup q = quotient(g, pc.congruence);
      const auto oracle_q = oracle::group_quotient(g.table(), sub.elements());
      CHECK(q.quotient.order() == static_cast<int>(oracle_q.size()));
      CHECK(oracle::brute_force_iso(q.quotient.table(), oracle_q).has_value());
    }
  }
}

TEST_CASE("correspondence over the unit class in a left group") {
  const Semigroup s = direct_product(left_zero(2), named("Z4"));
  const CorrespondenceReport rep = correspondence_check(s, ElemSet::of(8, {0, 4}));
  CHECK(rep.base_quotient.quotient.order() == 4);
  REQUIRE(is_isomorphic(rep.base_quotient.quotient, named("Z4")).has_value());
  CHECK(rep.h_class == 0);
  CHECK(rep.subgroup_count == 3);
  CHECK(rep.bijective);
  REQUIRE(rep.entries.size() == 3);

  CHECK(rep.entries[0].n == ElemSet::of(8, {0, 4}));
  CHECK(rep.entries[1].n == ElemSet::of(8, {0, 2, 4, 6}));
  CHECK(rep.entries[2].n == ElemSet::full(8));
  CHECK(rep.entries[0].image_classes == 0b0001);
  CHECK(rep.entries[1].image_classes == 0b0101);
  CHECK(rep.entries[2].image_classes == 0b1111);
  for (const CorrespondenceEntry& e : rep.entries) {
    CHECK(e.saturated);
    CHECK(e.image_subgroup);
    CHECK(e.reflexive);  // over an abelian group every member is reflexive
    CHECK(e.image_normal);
    CHECK(e.restriction_matches);
    CHECK(e.third_iso.has_value());
  }
}

TEST_CASE("correspondence in a group separates normal from non-normal") {
  const Semigroup s3 = named("S3");
  const CorrespondenceReport rep = correspondence_check(s3, ElemSet::of(6, {0}));
  CHECK(rep.base_quotient.quotient.order() == 6);
  CHECK(rep.subgroup_count == 6);
  CHECK(rep.bijective);
  REQUIRE(rep.entries.size() == 6);
  int reflexive_count = 0;
  for (const CorrespondenceEntry& e : rep.entries) {
    CHECK(e.saturated);
    CHECK(e.image_subgroup);
    CHECK(e.reflexive == e.image_normal);
    CHECK(e.restriction_matches);
    CHECK(e.third_iso.has_value() == e.reflexive);
    if (e.reflexive) ++reflexive_count;
  }
  // {e}, A3 and S3 itself
  CHECK(reflexive_count == 3);
  CHECK(rep.entries[0].n == ElemSet::of(6, {0}));
  CHECK(rep.entries[4].n == ElemSet::of(6, {0, 4, 5}));
  CHECK(rep.entries[5].n == ElemSet::full(6));

  try {
    correspondence_check(s3, ElemSet::of(6, {0, 1}));
    FAIL("non-reflexive base subsets must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == errc::precondition_violated);
    CHECK(std::string(e.what()).find("HNotReflexiveUnitary") != std::string::npos);
  }
  try {
    correspondence_check(min_semilattice(), ElemSet::of(2, {1}));
    FAIL("non left simple parents must be rejected");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("NotLeftSimple") != std::string::npos);
  }
}

TEST_CASE("intersection isomorphism") {
  // S3: <A3, {e,(12)}> = S3, S3/A3 ~ {e,(12)}/{e} ~ Z2
  const Semigroup s3 = named("S3");
  const IsoWitness w1 = intersection_iso(s3, ElemSet::of(6, {0, 4, 5}), ElemSet::of(6, {0, 1}));
  CHECK(w1.mapping.size() == 2);

  // left group: H = L2 x {0,2}, N = {a1} x Z4, both quotients of order 2
  const Semigroup s = direct_product(left_zero(2), named("Z4"));
  const IsoWitness w2 =
      intersection_iso(s, ElemSet::of(8, {0, 2, 4, 6}), ElemSet::of(8, {0, 1, 2, 3}));
  CHECK(w2.mapping == std::vector<int>{0, 1});

  // degenerate: everything against everything collapses to a point
  const IsoWitness w3 = intersection_iso(named("Z4"), ElemSet::full(4), ElemSet::full(4));
  CHECK(w3.mapping == std::vector<int>{0});

  try {
    intersection_iso(s3, ElemSet::of(6, {0, 1}), ElemSet::full(6));
    FAIL("H must be reflexive unitary");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("HNotReflexiveUnitary") != std::string::npos);
  }
  try {
    intersection_iso(s3, ElemSet::of(6, {0, 4, 5}), ElemSet::of(6, {0, 4}));
    FAIL("N must be closed");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_a_subsemigroup);
  }
  try {
    intersection_iso(min_semilattice(), ElemSet::of(2, {1}), ElemSet::of(2, {0}));
    FAIL("H and N must meet");
  } catch (const Error& e) {
    CHECK(e.code() == errc::precondition_violated);
    CHECK(std::string(e.what()).find("EmptyIntersection") != std::string::npos);
  }
}

TEST_CASE("butterfly quotients on a cyclic group") {
  const Semigroup z12 = [] {
    std::vector<std::vector<int>> t(12, std::vector<int>(12));
    std::vector<std::string> labels;
    for (int a = 0; a < 12; ++a) {
      labels.push_back(std::to_string(a));
      for (int b = 0; b < 12; ++b) t[a][b] = (a + b) % 12;
    }
    return Semigroup(t, labels);
  }();
  const ElemSet a = ElemSet::of(12, {0, 2, 4, 6, 8, 10});
  const ElemSet b = ElemSet::of(12, {0, 3, 6, 9});
  const ElemSet n = ElemSet::of(12, {0, 4, 8});
  const ElemSet m = ElemSet::of(12, {0, 6});

  const ZassenhausReport r = zassenhaus(z12, a, b, n, m);
  CHECK(r.a_cap_b == ElemSet::of(12, {0, 6}));
  CHECK(r.a_cap_m == ElemSet::of(12, {0, 6}));
  CHECK(r.b_cap_n == ElemSet::of(12, {0}));
  CHECK(r.n_acb == a);
  CHECK(r.n_acm == a);
  CHECK(r.m_acb == ElemSet::of(12, {0, 6}));
  CHECK(r.m_bcn == ElemSet::of(12, {0, 6}));
  // both factors collapse: the two sides agree on the trivial group
  CHECK(r.left_quotient.quotient.order() == 1);
  CHECK(r.right_quotient.quotient.order() == 1);
  CHECK(r.witness.mapping == std::vector<int>{0});

  // same A, B with trivial N, M gives two copies of Z2
  const ZassenhausReport r2 = zassenhaus(z12, a, b, ElemSet::of(12, {0}), ElemSet::of(12, {0}));
  CHECK(r2.n_acb == ElemSet::of(12, {0, 6}));
  CHECK(r2.n_acm == ElemSet::of(12, {0}));
  CHECK(r2.m_acb == ElemSet::of(12, {0, 6}));
  CHECK(r2.m_bcn == ElemSet::of(12, {0}));
  CHECK(r2.left_quotient.quotient.order() == 2);
  CHECK(r2.right_quotient.quotient.order() == 2);
  CHECK(r2.witness.mapping == std::vector<int>{0, 1});
}

TEST_CASE("butterfly quotients on a left group") {
  const Semigroup s = direct_product(left_zero(2), named("Z4"));
  const ElemSet full = ElemSet::full(8);
  const ZassenhausReport r =
      zassenhaus(s, full, full, ElemSet::of(8, {0, 2, 4, 6}), ElemSet::of(8, {0, 4}));
  CHECK(r.n_acb == full);
  CHECK(r.n_acm == ElemSet::of(8, {0, 2, 4, 6}));
  CHECK(r.m_acb == full);
  CHECK(r.m_bcn == ElemSet::of(8, {0, 2, 4, 6}));
  CHECK(r.left_quotient.quotient.order() == 2);
  CHECK(r.right_quotient.quotient.order() == 2);
  REQUIRE(is_isomorphic(r.left_quotient.quotient, named("Z2")).has_value());

  // identical arguments on a plain group: both sides are the full quotient
  const Semigroup z4 = named("Z4");
  const ZassenhausReport r3 =
      zassenhaus(z4, ElemSet::full(4), ElemSet::full(4), ElemSet::of(4, {0}), ElemSet::of(4, {0}));
  CHECK(r3.left_quotient.quotient.order() == 4);
  CHECK(r3.witness.mapping == std::vector<int>{0, 1, 2, 3});

  try {
    zassenhaus(min_semilattice(), ElemSet::full(2), ElemSet::full(2), ElemSet::of(2, {1}),
               ElemSet::of(2, {1}));
    FAIL("ambient semigroup must be left simple");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("NotLeftSimple") != std::string::npos);
  }
  const Semigroup s3 = named("S3");
  try {
    zassenhaus(s3, ElemSet::of(6, {0, 4}), ElemSet::full(6), ElemSet::of(6, {0}),
               ElemSet::of(6, {0}));
    FAIL("A must be unitary");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("A must be") != std::string::npos);
  }
  try {
    zassenhaus(s3, ElemSet::full(6), ElemSet::full(6), ElemSet::of(6, {0, 1}),
               ElemSet::of(6, {0}));
    FAIL("N must be reflexive unitary in A");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("N must be") != std::string::npos);
  }
}

TEST_CASE("congruence enumeration on small semigroups") {
  const auto count = [](const Semigroup& s) { return enumerate_congruences(s).size(); };
  CHECK(count(named("Z2")) == 2);
  CHECK(count(left_zero(2)) == 2);
  CHECK(count(min_semilattice()) == 2);
  CHECK(count(named("Z4")) == 3);
  CHECK(count(named("S3")) == 3);   // one per normal subgroup
  CHECK(count(named("Klein")) == 5);

  const auto all = enumerate_congruences(named("Z4"));
  for (const Congruence& c : all) CHECK(is_congruence(named("Z4"), c));
  CHECK(std::count(all.begin(), all.end(), identity_congruence(4)) == 1);
  CHECK(std::count(all.begin(), all.end(), universal_congruence(4)) == 1);

  try {
    enumerate_congruences(named("D4"), 4);
    FAIL("order limit must be enforced");
  } catch (const Error& e) {
    CHECK(e.code() == errc::order_bound_exceeded);
  }
}

TEST_CASE("group congruences on left groups all arise from the construction") {
  // on a left group, every congruence whose quotient is a group must equal
  // the congruence of some reflexive unitary subsemigroup
  const Semigroup s = direct_product(left_zero(2), named("Z2"));
  const auto rus = enumerate_ru_subsemigroups(s);
  for (const Congruence& c : enumerate_congruences(s)) {
    const QuotientSemigroup q = quotient(s, c);
    const int id_class = [&] {
      for (int cls = 0; cls < c.class_count; ++cls)
        if (is_group_with_identity(q, cls)) return cls;
      return -1;
    }();
    if (id_class < 0) continue;
    bool matched = false;
    for (const ElemSet& h : rus) {
      if (principal_congruence(s, h).congruence == c) {
        matched = true;
        break;
      }
    }
    CHECK(matched);
  }
}
