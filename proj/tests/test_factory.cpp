#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "lsemi/error.hpp"
#include "lsemi/factory.hpp"
#include "lsemi/groups.hpp"
#include "lsemi/subsets.hpp"
#include "oracles.hpp"

using namespace lsemi;

namespace {

Semigroup named(const char* name) { return find_named_instance(name).value(); }

}  // namespace

TEST_CASE("left zero semigroups") {
  const Semigroup l3 = left_zero(3);
  CHECK(l3.order() == 3);
  CHECK(l3.label(0) == "a1");
  CHECK(l3.label(2) == "a3");
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(l3.at(a, b) == a);
  CHECK(is_left_simple(l3));
  CHECK(is_left_zero(l3));
  CHECK(!is_group(l3));
  CHECK(idempotents(l3) == ElemSet::full(3));

  try {
    left_zero(0);
    FAIL("size must be positive");
  } catch (const Error& e) {
    CHECK(e.code() == errc::zero_size);
  }
}

TEST_CASE("group catalog") {
  const auto& cat = group_catalog();
  const std::vector<std::string> names = {"Z1", "Z2", "Z3",    "Z4", "Z5", "Z6",
                                          "Z7", "Z8", "Klein", "S3", "D4", "Q8"};
  const std::vector<int> orders = {1, 2, 3, 4, 5, 6, 7, 8, 4, 6, 8, 8};
  REQUIRE(cat.size() == names.size());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    CAPTURE(cat[i].name);
    CHECK(cat[i].name == names[i]);
    CHECK(cat[i].semigroup.order() == orders[i]);
    CHECK(is_group(cat[i].semigroup));
    // independent identity/inverse computation agrees
    const int id = oracle::group_identity(cat[i].semigroup.table());
    REQUIRE(id >= 0);
    CHECK(identity_of(cat[i].semigroup) == std::optional<int>(id));
    const auto inv = oracle::group_inverses(cat[i].semigroup.table());
    CHECK(std::count(inv.begin(), inv.end(), -1) == 0);
  }

  // Z4 and Klein both have order 4 but are different groups
  CHECK(!is_isomorphic(named("Z4"), named("Klein")).has_value());
  CHECK(!is_isomorphic(named("Z8"), named("D4")).has_value());
  CHECK(!is_isomorphic(named("D4"), named("Q8")).has_value());
  CHECK(!is_isomorphic(named("Z6"), named("S3")).has_value());
}

TEST_CASE("subgroup structure matches the oracle") {
  const std::vector<std::pair<std::string, std::size_t>> counts = {
      {"Z1", 1}, {"Z4", 3}, {"Z6", 4},  {"Z8", 4}, {"Klein", 5},
      {"S3", 6}, {"D4", 10}, {"Q8", 6},
  };
  for (const auto& [name, expected] : counts) {
    CAPTURE(name);
    const Semigroup g = named(name.c_str());
    const auto subs = subgroups_of(g);
    CHECK(subs.size() == expected);
    // normality agrees with the definition-literal oracle sweep
    const auto oracle_normals = oracle::normal_subgroups(g.table());
    std::size_t normal_count = 0;
    for (mask_t k : subs) {
      const bool mine = is_normal_subgroup(g, k);
      std::vector<int> members;
      for (int x = 0; x < g.order(); ++x)
        if ((k >> x) & 1u) members.push_back(x);
      const bool oracles = std::find(oracle_normals.begin(), oracle_normals.end(), members) !=
                           oracle_normals.end();
      CHECK(mine == oracles);
      if (mine) ++normal_count;
    }
    CHECK(normal_count == oracle_normals.size());
  }
  CHECK(is_simple_group(named("Z5")));
  CHECK(is_simple_group(named("Z7")));
  CHECK(!is_simple_group(named("Z1")));
  CHECK(!is_simple_group(named("Z6")));
  CHECK(!is_simple_group(named("D4")));
}

TEST_CASE("left groups") {
  const Semigroup s = left_group(2, named("Z3"));
  CHECK(s.order() == 6);
  CHECK(is_left_simple(s));
  CHECK(!is_group(s));
  CHECK(!is_left_zero(s));
  REQUIRE(is_isomorphic(s, direct_product(left_zero(2), named("Z3"))).has_value());

  // one-point left zero factor reproduces the group itself
  REQUIRE(is_isomorphic(left_group(1, named("S3")), named("S3")).has_value());

  try {
    left_group(2, left_zero(2));
    FAIL("second factor must be a group");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_a_group);
  }
}

TEST_CASE("doubling construction") {
  const Semigroup d = double_of(named("Z2"));
  CHECK(d.order() == 4);
  CHECK(d.label(0) == "0");
  CHECK(d.label(2) == "0'");
  CHECK(d.label(3) == "1'");
  CHECK(is_left_simple(d));
  // frozen product samples: same copy stays, crossing copies lands primed
  CHECK(d.at(0, 1) == 1);
  CHECK(d.at(2, 3) == 1);   // both in second copy -> first copy result
  CHECK(d.at(0, 3) == 3);   // mixed -> second copy
  CHECK(d.at(2, 1) == 3);
  // the double of the two element group is the four group
  REQUIRE(is_isomorphic(d, named("Klein")).has_value());
  const auto oracle_w = oracle::brute_force_iso(d.table(), named("Klein").table());
  REQUIRE(oracle_w.has_value());
  CHECK(is_isomorphic(d, named("Klein"))->mapping == *oracle_w);

  // the original copy sits inside as a reflexive unitary subsemigroup
  CHECK(is_ru_subsemigroup(d, ElemSet::of(4, {0, 1})));

  // doubling a left zero semigroup gives a left group over Z2
  const Semigroup dl = double_of(left_zero(2));
  REQUIRE(is_isomorphic(dl, direct_product(left_zero(2), named("Z2"))).has_value());

  // a doubled left group is again covered by the corpus predicates
  const Semigroup dlg = double_of(left_group(2, named("Z2")));
  CHECK(dlg.order() == 8);
  CHECK(is_left_simple(dlg));
  CHECK(is_ru_subsemigroup(dlg, ElemSet::of(8, {0, 1, 2, 3})));

  try {
    double_of(Semigroup(std::vector<std::vector<int>>{{0, 0}, {0, 1}}));
    FAIL("doubling needs a left simple input");
  } catch (const Error& e) {
    CHECK(e.code() == errc::precondition_violated);
    CHECK(std::string(e.what()).find("NotLeftSimple") != std::string::npos);
  }
}

TEST_CASE("corpus construction") {
  const auto corpus = build_corpus(CorpusSpec{});
  CHECK(corpus.size() == 52);
  CHECK(corpus[0].name == "L1xZ1");
  CHECK(corpus[31].name == "L3xS3");
  CHECK(corpus[32].name == "double(L1xZ1)");
  CHECK(corpus.back().name == "double(L3xZ3)");

  std::set<std::string> names;
  for (const auto& [name, s] : corpus) {
    CAPTURE(name);
    names.insert(name);
    CHECK(s.order() <= 18);
    CHECK(is_left_simple(s));
    CHECK(oracle::left_simple(s.table()));
    // members are reachable again by name
    const auto again = find_named_instance(name);
    REQUIRE(again.has_value());
    CHECK(again->order() == s.order());
    CHECK(is_isomorphic(*again, s).has_value());
  }
  CHECK(names.size() == corpus.size());

  CorpusSpec small;
  small.max_order = 4;
  small.include_doubles = false;
  const auto tiny = build_corpus(small);
  std::vector<std::string> tiny_names;
  for (const auto& m : tiny) tiny_names.push_back(m.name);
  CHECK(tiny_names == std::vector<std::string>{"L1xZ1", "L1xZ2", "L1xZ3", "L1xZ4", "L1xKlein",
                                               "L2xZ1", "L2xZ2", "L3xZ1"});

  CorpusSpec filtered;
  filtered.groups = {"Z2", "S3"};
  filtered.include_doubles = false;
  const auto pair_corpus = build_corpus(filtered);
  CHECK(pair_corpus.size() == 6);
  CHECK(pair_corpus[0].name == "L1xZ2");
  CHECK(pair_corpus[5].name == "L3xS3");
}

TEST_CASE("group naming") {
  CHECK(group_name(named("Z4")) == "Z4");
  CHECK(group_name(named("Klein")) == "Klein");
  CHECK(group_name(double_of(named("Z2"))) == "Klein");
  CHECK(group_name(direct_product(named("Z2"), named("Z3"))) == "Z6");
  // not a catalog group: fall back to an order marker
  CHECK(group_name(left_zero(2)) == "?2");
}

TEST_CASE("name resolution") {
  CHECK(find_named_instance("Z4").has_value());
  CHECK(find_named_instance("L2xZ3").has_value());
  CHECK(find_named_instance("L2xZ3")->order() == 6);
  CHECK(find_named_instance("L10xZ2").has_value());
  CHECK(find_named_instance("L10xZ2")->order() == 20);
  CHECK(find_named_instance("double(L2xZ3)").has_value());
  CHECK(find_named_instance("double(L2xZ3)")->order() == 12);
  CHECK(find_named_instance("double(double(Z2))").has_value());
  CHECK(find_named_instance("double(double(Z2))")->order() == 8);
  CHECK(!find_named_instance("nope").has_value());
  CHECK(!find_named_instance("double(nope)").has_value());
  CHECK(!find_named_instance("LxZ2").has_value());
  CHECK(!find_named_instance("L0xZ2").has_value());
  CHECK(!find_named_instance("").has_value());
}
