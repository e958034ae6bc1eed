#include "lsemi/factory.hpp"

#include <algorithm>
#include <string>

#include "lsemi/config.hpp"
#include "lsemi/error.hpp"
#include "lsemi/subsets.hpp"

namespace lsemi {

Semigroup left_zero(int m) {
  if (m < 1) fail(errc::zero_size, "left zero semigroup needs at least one element");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m),
                                      std::vector<int>(static_cast<std::size_t>(m)));
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    labels.push_back("a" + std::to_string(a + 1));
    for (int b = 0; b < m; ++b) table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a;
  }
  return Semigroup(table, std::move(labels));
}

namespace {

Semigroup cyclic(int n) {
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  }
  return Semigroup(table, std::move(labels));
}

Semigroup klein() {
  // Z2 x Z2 presented as XOR on {0,1,2,3}.
  std::vector<std::vector<int>> table(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a ^ b;
  }
  return Semigroup(table, {"e", "a", "b", "c"});
}

Semigroup symmetric3() {
  // Permutations of {0,1,2}; composition (p*q)(x) = p(q(x)).
  const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> labels = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  auto find_perm = [&](const int* image) {
    for (int k = 0; k < 6; ++k) {
      if (perms[k][0] == image[0] && perms[k][1] == image[1] && perms[k][2] == image[2]) return k;
    }
    fail(errc::construction_check_failed, "permutation composition left the table");
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int p = 0; p < 6; ++p) {
    for (int q = 0; q < 6; ++q) {
      int image[3];
      for (int x = 0; x < 3; ++x) image[x] = perms[p][perms[q][x]];
      table[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = find_perm(image);
    }
  }
  return Semigroup(table, labels);
}

Semigroup dihedral4() {
  // r^a s^b with b in {0,1}, index a + 4b; s r = r^-1 s.
  auto idx = [](int a, int b) { return ((a % 4) + 4) % 4 + 4 * b; };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a1 = 0; a1 < 4; ++a1) {
    for (int b1 = 0; b1 < 2; ++b1) {
      for (int a2 = 0; a2 < 4; ++a2) {
        for (int b2 = 0; b2 < 2; ++b2) {
          const int a = b1 == 0 ? a1 + a2 : a1 - a2;
          table[static_cast<std::size_t>(idx(a1, b1))][static_cast<std::size_t>(idx(a2, b2))] =
              idx(a, b1 ^ b2);
        }
      }
    }
  }
  return Semigroup(table, {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"});
}

Semigroup quaternion8() {
  // Units {1, i, j, k} with signs; index = 2*unit + sign.
  // unit_mul[u][v] and sign_mul[u][v] encode u*v = ± unit.
  const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int u = 0; u < 4; ++u) {
    for (int su = 0; su < 2; ++su) {
      for (int v = 0; v < 4; ++v) {
        for (int sv = 0; sv < 2; ++sv) {
          const int w = unit_mul[u][v];
          const int sw = su ^ sv ^ sign_mul[u][v];
          table[static_cast<std::size_t>(2 * u + su)][static_cast<std::size_t>(2 * v + sv)] =
              2 * w + sw;
        }
      }
    }
  }
  return Semigroup(table, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

std::vector<NamedSemigroup> build_catalog() {
  std::vector<NamedSemigroup> cat;
  for (int n = 1; n <= 8; ++n) cat.push_back({"Z" + std::to_string(n), cyclic(n)});
  cat.push_back({"Klein", klein()});
  cat.push_back({"S3", symmetric3()});
  cat.push_back({"D4", dihedral4()});
  cat.push_back({"Q8", quaternion8()});
  for (const auto& [name, g] : cat) {
    if (!is_group(g)) fail(errc::construction_check_failed, "catalog entry " + name + " is not a group");
  }
  return cat;
}

}  // namespace

const std::vector<NamedSemigroup>& group_catalog() {
  static const std::vector<NamedSemigroup> cat = build_catalog();
  return cat;
}

Semigroup left_group(int m, const Semigroup& g) {
  if (m < 1) fail(errc::zero_size, "left group needs at least one left zero component");
  if (!is_group(g)) fail(errc::not_a_group, "second factor of a left group must be a group");
  Semigroup out = direct_product(left_zero(m), g);
  if (!is_left_simple(out)) {
    fail(errc::construction_check_failed, "left group construction is not left simple");
  }
  return out;
}

Semigroup double_of(const Semigroup& s) {
  if (!is_left_simple(s)) {
    fail(errc::precondition_violated, "NotLeftSimple: doubling needs a left simple semigroup");
  }
  const int n = s.order();
  // Two copies of S; the copy map is index shift by n. Products stay in the
  // first copy when both factors come from the same copy, and are shifted
  // into the second copy when the factors come from different copies.
  std::vector<std::vector<int>> table(static_cast<std::size_t>(2 * n),
                                      std::vector<int>(static_cast<std::size_t>(2 * n)));
  for (int e = 0; e < 2 * n; ++e) {
    for (int f = 0; f < 2 * n; ++f) {
      const int eb = e < n ? e : e - n;
      const int fb = f < n ? f : f - n;
      const bool same_copy = (e < n) == (f < n);
      table[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)] =
          same_copy ? s.at(eb, fb) : s.at(eb, fb) + n;
    }
  }
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(2 * n));
  for (int x = 0; x < n; ++x) labels.push_back(s.label(x));
  // Second copy is primed; keep adding primes past any label the base
  // already uses (a nested double contains primed labels of its own).
  for (int x = 0; x < n; ++x) {
    std::string primed = s.label(x) + "'";
    while (std::find(labels.begin(), labels.end(), primed) != labels.end()) primed += "'";
    labels.push_back(primed);
  }
  Semigroup out(table, std::move(labels));
  if (!is_left_simple(out)) {
    fail(errc::construction_check_failed, "doubled semigroup is not left simple");
  }
  const ElemSet first_copy(2 * n, (mask_t{1} << n) - 1);
  if (!is_ru_subsemigroup(out, first_copy)) {
    fail(errc::construction_check_failed,
         "original copy is not reflexive unitary in the doubled semigroup");
  }
  return out;
}

std::vector<NamedSemigroup> build_corpus(const CorpusSpec& spec) {
  std::vector<NamedSemigroup> out;
  const auto& cat = group_catalog();
  auto selected = [&](const std::string& name) {
    return spec.groups.empty() ||
           std::find(spec.groups.begin(), spec.groups.end(), name) != spec.groups.end();
  };
  for (int m : spec.left_zero_sizes) {
    for (const auto& [gname, g] : cat) {
      if (!selected(gname)) continue;
      if (m * g.order() > spec.max_order) continue;
      out.push_back({"L" + std::to_string(m) + "x" + gname, left_group(m, g)});
    }
  }
  if (spec.include_doubles) {
    const std::size_t base_count = out.size();
    for (std::size_t i = 0; i < base_count; ++i) {
      const int order = out[i].semigroup.order();
      if (order <= spec.double_max_base_order && 2 * order <= spec.max_order) {
        out.push_back({"double(" + out[i].name + ")", double_of(out[i].semigroup)});
      }
    }
  }
  for (const auto& [name, member] : out) {
    if (!is_left_simple(member)) {
      fail(errc::construction_check_failed, "corpus member " + name + " is not left simple");
    }
  }
  return out;
}

std::string group_name(const Semigroup& g) {
  for (const auto& [name, member] : group_catalog()) {
    if (member.order() == g.order() && is_isomorphic(member, g)) return name;
  }
  return "?" + std::to_string(g.order());
}

std::optional<Semigroup> find_named_instance(const std::string& name) {
  for (const auto& [cname, g] : group_catalog()) {
    if (cname == name) return g;
  }
  if (name.rfind("double(", 0) == 0 && name.back() == ')') {
    auto inner = find_named_instance(name.substr(7, name.size() - 8));
    if (!inner || !is_left_simple(*inner)) return std::nullopt;
    return double_of(*inner);
  }
  if (name.size() >= 4 && name[0] == 'L') {
    const auto x = name.find('x');
    if (x != std::string::npos && x > 1) {
      const std::string digits = name.substr(1, x - 1);
      if (!digits.empty() &&
          std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        auto g = find_named_instance(name.substr(x + 1));
        const int m = std::stoi(digits);
        if (g && m >= 1 && is_group(*g)) return left_group(m, *g);
      }
    }
  }
  return std::nullopt;
}

}  // namespace lsemi
