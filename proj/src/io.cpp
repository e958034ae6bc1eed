#include "lsemi/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "lsemi/error.hpp"

#include "json.hpp"

namespace lsemi {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(int line, int col, const std::string& msg) {
  fail(errc::parse_error,
       "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Tokens with their 1-based starting column.
std::vector<std::pair<std::string, int>> tokenize(const std::string& line) {
  std::vector<std::pair<std::string, int>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.emplace_back(line.substr(start, i - start), static_cast<int>(start) + 1);
  }
  return out;
}

}  // namespace

SemigroupFile parse_semigroup_text(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(strip_comment(line));
  }
  SemigroupFile f;
  std::size_t li = 0;
  auto next_significant = [&]() -> bool {
    while (li < lines.size() && blank(lines[li])) ++li;
    return li < lines.size();
  };
  if (!next_significant()) parse_fail(1, 1, "empty file, expected an \"elements:\" line");
  {
    auto toks = tokenize(lines[li]);
    if (toks.empty() || toks[0].first != "elements:") {
      parse_fail(static_cast<int>(li) + 1, toks.empty() ? 1 : toks[0].second,
                 "expected \"elements:\"");
    }
    if (toks.size() == 1) {
      parse_fail(static_cast<int>(li) + 1, toks[0].second, "no elements listed");
    }
    for (std::size_t k = 1; k < toks.size(); ++k) f.elements.push_back(toks[k].first);
    ++li;
  }
  if (!next_significant()) {
    parse_fail(static_cast<int>(li) + 1, 1, "expected a \"table:\" line");
  }
  {
    auto toks = tokenize(lines[li]);
    if (toks.size() != 1 || toks[0].first != "table:") {
      parse_fail(static_cast<int>(li) + 1, toks.empty() ? 1 : toks[0].second,
                 "expected \"table:\" on its own line");
    }
    ++li;
  }
  for (std::size_t row = 0; row < f.elements.size(); ++row) {
    if (!next_significant()) {
      parse_fail(static_cast<int>(li) + 1, 1,
                 "expected table row " + std::to_string(row + 1) + " of " +
                     std::to_string(f.elements.size()));
    }
    auto toks = tokenize(lines[li]);
    if (toks.size() != f.elements.size()) {
      parse_fail(static_cast<int>(li) + 1, toks.empty() ? 1 : toks[0].second,
                 "table row has " + std::to_string(toks.size()) + " entries, expected " +
                     std::to_string(f.elements.size()));
    }
    std::vector<std::string> row_labels;
    for (auto& [tok, col] : toks) row_labels.push_back(tok);
    f.table.push_back(std::move(row_labels));
    ++li;
  }
  while (next_significant()) {
    auto toks = tokenize(lines[li]);
    if (toks[0].first != "subset") {
      parse_fail(static_cast<int>(li) + 1, toks[0].second,
                 "expected \"subset <name>:\" or end of file, got \"" + toks[0].first + "\"");
    }
    if (toks.size() < 2 || toks[1].first.size() < 2 || toks[1].first.back() != ':') {
      parse_fail(static_cast<int>(li) + 1, toks.size() < 2 ? toks[0].second : toks[1].second,
                 "subset needs a name followed by ':'");
    }
    const std::string name = toks[1].first.substr(0, toks[1].first.size() - 1);
    std::vector<std::string> members;
    for (std::size_t k = 2; k < toks.size(); ++k) members.push_back(toks[k].first);
    for (const auto& [existing, unused] : f.subsets) {
      if (existing == name) {
        parse_fail(static_cast<int>(li) + 1, toks[1].second,
                   "subset \"" + name + "\" defined twice");
      }
    }
    f.subsets.emplace_back(name, std::move(members));
    ++li;
  }
  return f;
}

SemigroupFile parse_semigroup_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(errc::parse_error, e.what());
  }
  SemigroupFile f;
  if (!j.is_object() || !j.contains("elements") || !j.contains("table")) {
    fail(errc::parse_error, "JSON semigroup needs \"elements\" and \"table\" fields");
  }
  try {
    for (const auto& e : j.at("elements")) {
      f.elements.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    }
    for (const auto& row : j.at("table")) {
      std::vector<std::string> r;
      for (const auto& entry : row) {
        r.push_back(entry.is_string() ? entry.get<std::string>() : entry.dump());
      }
      f.table.push_back(std::move(r));
    }
    if (j.contains("subsets")) {
      for (const auto& [name, members] : j.at("subsets").items()) {
        std::vector<std::string> m;
        for (const auto& entry : members) {
          m.push_back(entry.is_string() ? entry.get<std::string>() : entry.dump());
        }
        f.subsets.emplace_back(name, std::move(m));
      }
    }
  } catch (const json::exception& e) {
    fail(errc::parse_error, e.what());
  }
  return f;
}

SemigroupFile load_semigroup_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const bool looks_json = [&] {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") return true;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      return c == '{';
    }
    return false;
  }();
  return looks_json ? parse_semigroup_json(text) : parse_semigroup_text(text);
}

std::string serialize_semigroup_text(const SemigroupFile& f) {
  std::ostringstream out;
  out << "elements:";
  for (const auto& e : f.elements) out << " " << e;
  out << "\ntable:\n";
  for (const auto& row : f.table) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << "\n";
  }
  for (const auto& [name, members] : f.subsets) {
    out << "subset " << name << ":";
    for (const auto& m : members) out << " " << m;
    out << "\n";
  }
  return out.str();
}

std::string serialize_semigroup_json(const SemigroupFile& f) {
  json j;
  j["elements"] = f.elements;
  j["table"] = f.table;
  json subs = json::object();
  for (const auto& [name, members] : f.subsets) subs[name] = members;
  j["subsets"] = std::move(subs);
  return j.dump(2) + "\n";
}

ElemSet LoadedSemigroup::subset(const std::string& name) const {
  for (const auto& [n, set] : subsets) {
    if (n == name) return set;
  }
  std::string known;
  for (const auto& [n, set] : subsets) {
    if (!known.empty()) known += ", ";
    known += n;
  }
  fail(errc::unknown_subset,
       "no subset named \"" + name + "\"" + (known.empty() ? "" : "; known: " + known));
}

LoadedSemigroup realize(const SemigroupFile& f) {
  const int n = static_cast<int>(f.elements.size());
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(f.elements[static_cast<std::size_t>(i)], i).second) {
      fail(errc::duplicate_labels,
           "label \"" + f.elements[static_cast<std::size_t>(i)] + "\" repeats");
    }
  }
  // Labels take precedence; otherwise a bare decimal index is accepted.
  auto resolve = [&](const std::string& tok, const char* where) {
    auto it = index.find(tok);
    if (it != index.end()) return it->second;
    if (!tok.empty() && tok.size() <= 9 &&
        std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const int v = std::stoi(tok);
      if (v < n) return v;
    }
    fail(errc::parse_error, std::string(where) + ": \"" + tok + "\" is neither a label nor an index");
  };
  if (static_cast<int>(f.table.size()) != n) {
    fail(errc::non_square_table, "table has " + std::to_string(f.table.size()) + " rows for " +
                                     std::to_string(n) + " elements");
  }
  std::vector<std::vector<int>> table;
  for (std::size_t r = 0; r < f.table.size(); ++r) {
    std::vector<int> row;
    if (f.table[r].size() != static_cast<std::size_t>(n)) {
      fail(errc::non_square_table, "table row " + std::to_string(r + 1) + " has " +
                                       std::to_string(f.table[r].size()) + " entries for " +
                                       std::to_string(n) + " elements");
    }
    for (const auto& tok : f.table[r]) row.push_back(resolve(tok, "table entry"));
    table.push_back(std::move(row));
  }
  LoadedSemigroup out{Semigroup(table, f.elements), {}};
  for (const auto& [name, members] : f.subsets) {
    ElemSet set = ElemSet::empty(n);
    for (const auto& tok : members) set.insert(resolve(tok, ("subset " + name).c_str()));
    out.subsets.emplace_back(name, set);
  }
  return out;
}

SemigroupFile to_file(const Semigroup& s,
                      const std::vector<std::pair<std::string, ElemSet>>& subsets) {
  SemigroupFile f;
  f.elements = s.labels();
  for (int a = 0; a < s.order(); ++a) {
    std::vector<std::string> row;
    for (int b = 0; b < s.order(); ++b) row.push_back(s.label(s.at(a, b)));
    f.table.push_back(std::move(row));
  }
  for (const auto& [name, set] : subsets) {
    std::vector<std::string> members;
    for (int x : set.elements()) members.push_back(s.label(x));
    f.subsets.emplace_back(name, std::move(members));
  }
  return f;
}

}  // namespace lsemi
