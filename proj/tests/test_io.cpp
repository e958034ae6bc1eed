#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "lsemi/error.hpp"
#include "lsemi/factory.hpp"
#include "lsemi/io.hpp"
#include "lsemi/subsets.hpp"

using namespace lsemi;

namespace {

const char* kZ3Text = R"(# the three element cyclic group
elements: e a b
table:
e a b
a b e
b e a
subset H: e
subset A: e a b
)";

std::string errc_of(const auto& fn) {
  try {
    fn();
    return "";
  } catch (const Error& e) {
    return errc_name(e.code());
  }
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("/tmp/lsemi_io_test_" + name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("text parsing") {
  const SemigroupFile f = parse_semigroup_text(kZ3Text);
  CHECK(f.elements == std::vector<std::string>{"e", "a", "b"});
  REQUIRE(f.table.size() == 3);
  CHECK(f.table[1] == std::vector<std::string>{"a", "b", "e"});
  REQUIRE(f.subsets.size() == 2);
  CHECK(f.subsets[0].first == "H");
  CHECK(f.subsets[0].second == std::vector<std::string>{"e"});
  CHECK(f.subsets[1].first == "A");

  // indices are accepted in place of labels
  const SemigroupFile g = parse_semigroup_text("elements: x y\ntable:\n0 1\n1 0\nsubset S: 0\n");
  const LoadedSemigroup l = realize(g);
  CHECK(l.semigroup.at(0, 1) == 1);
  CHECK(l.subset("S") == ElemSet::of(2, {0}));
}

TEST_CASE("text parse errors carry line and column") {
  const auto message_of = [](const std::string& text) {
    try {
      parse_semigroup_text(text);
      return std::string();
    } catch (const Error& e) {
      return std::string(e.what());
    }
  };
  CHECK(message_of("") == "parse_error: line 1, column 1: empty file, expected an \"elements:\" line");
  CHECK(message_of("elements: a\nnope:\n").find("line 2") != std::string::npos);
  CHECK(message_of("elements: a b\ntable:\na b\na\n").find("line 4") != std::string::npos);
  CHECK(message_of("elements: a b\ntable:\na b\n") ==
        "parse_error: line 4, column 1: expected table row 2 of 2");
  CHECK(message_of("elements: a\ntable:\na\nsubset X: a\nsubset X: a\n").find("defined twice") !=
        std::string::npos);
  // comments and blank lines do not shift reported positions
  CHECK(message_of("# hi\nelements: a b\n\ntable:\na b\nb c\n").empty());
  CHECK(message_of("elements: a\n# only a comment after this\n").find("table") !=
        std::string::npos);
}

TEST_CASE("json mirror") {
  const char* json = R"({
  "elements": ["e", "a", "b"],
  "table": [["e", "a", "b"], ["a", "b", "e"], ["b", "e", "a"]],
  "subsets": {"H": ["e"], "A": ["e", "a", "b"]}
})";
  const SemigroupFile f = parse_semigroup_json(json);
  const SemigroupFile t = parse_semigroup_text(kZ3Text);
  CHECK(f == t);

  // numeric table entries are accepted and mean indices
  const SemigroupFile g =
      parse_semigroup_json(R"({"elements": ["x", "y"], "table": [[0, 1], [1, 0]]})");
  CHECK(realize(g).semigroup.at(1, 0) == 1);

  CHECK(errc_of([] { parse_semigroup_json("{"); }) == "parse_error");
  CHECK(errc_of([] { parse_semigroup_json(R"({"elements": []})") ; }) == "parse_error");
  CHECK(errc_of([] { parse_semigroup_json(R"({"table": [["x"]]})") ; }) == "parse_error");
}

TEST_CASE("realize validates the table") {
  SemigroupFile f = parse_semigroup_text(kZ3Text);
  const LoadedSemigroup l = realize(f);
  CHECK(l.semigroup.order() == 3);
  CHECK(l.semigroup.label(0) == "e");
  CHECK(is_group(l.semigroup));
  CHECK(l.subset("H") == ElemSet::of(3, {0}));
  CHECK(l.subset("A") == ElemSet::full(3));
  CHECK(errc_of([&] { l.subset("missing"); }) == "unknown_subset");
  try {
    l.subset("missing");
  } catch (const Error& e) {
    // the known names are listed to help typos along
    CHECK(std::string(e.what()).find("H") != std::string::npos);
    CHECK(std::string(e.what()).find("A") != std::string::npos);
  }

  SemigroupFile bad = f;
  bad.table[0][0] = "q";
  CHECK(errc_of([&] { realize(bad); }) == "parse_error");

  SemigroupFile short_row = f;
  short_row.table[2].pop_back();
  CHECK(errc_of([&] { realize(short_row); }) == "non_square_table");

  SemigroupFile missing_row = f;
  missing_row.table.pop_back();
  CHECK(errc_of([&] { realize(missing_row); }) == "non_square_table");

  SemigroupFile not_assoc = f;
  // (e*e)*a = a*a = e but e*(e*a) = e*a = a
  not_assoc.table = {{"a", "a", "a"}, {"a", "e", "a"}, {"a", "a", "a"}};
  CHECK(errc_of([&] { realize(not_assoc); }) == "not_associative");

  SemigroupFile dup = f;
  dup.elements = {"e", "e", "b"};
  CHECK(errc_of([&] { realize(dup); }) == "duplicate_labels");

  SemigroupFile bad_subset = f;
  bad_subset.subsets[0].second.push_back("zzz");
  CHECK(errc_of([&] { realize(bad_subset); }) == "parse_error");
}

TEST_CASE("file loading dispatches on format") {
  const TempFile text("z3.txt", kZ3Text);
  const SemigroupFile from_text = load_semigroup_file(text.path);
  CHECK(from_text.elements.size() == 3);

  const TempFile json("z3.json",
                      R"({"elements": ["e", "a", "b"],
                          "table": [["e","a","b"],["a","b","e"],["b","e","a"]],
                          "subsets": {"H": ["e"], "A": ["e","a","b"]}})");
  CHECK(load_semigroup_file(json.path) == from_text);

  // leading brace wins even without the extension
  const TempFile braced("braced.txt", R"({"elements": ["x"], "table": [["x"]]})");
  CHECK(load_semigroup_file(braced.path).elements == std::vector<std::string>{"x"});

  CHECK(errc_of([] { load_semigroup_file("/tmp/definitely_not_there.txt"); }) == "parse_error");
}

TEST_CASE("serialization round trips") {
  const SemigroupFile f = parse_semigroup_text(kZ3Text);
  CHECK(parse_semigroup_text(serialize_semigroup_text(f)) == f);
  CHECK(parse_semigroup_json(serialize_semigroup_json(f)) == f);
  CHECK(serialize_semigroup_json(f).back() == '\n');

  // round trip through to_file over corpus members, subsets included
  CorpusSpec spec;
  spec.max_order = 8;
  for (const auto& [name, s] : build_corpus(spec)) {
    CAPTURE(name);
    std::vector<std::pair<std::string, ElemSet>> subsets;
    const auto rus = enumerate_ru_subsemigroups(s);
    for (std::size_t i = 0; i < rus.size(); ++i)
      subsets.emplace_back("R" + std::to_string(i), rus[i]);
    const SemigroupFile out = to_file(s, subsets);
    CHECK(parse_semigroup_text(serialize_semigroup_text(out)) == out);
    CHECK(parse_semigroup_json(serialize_semigroup_json(out)) == out);
    const LoadedSemigroup back = realize(out);
    CHECK(back.semigroup.order() == s.order());
    CHECK(back.semigroup.table() == s.table());
    for (std::size_t i = 0; i < rus.size(); ++i)
      CHECK(back.subset("R" + std::to_string(i)) == rus[i]);
  }
}
