#include "lsemi/groups.hpp"

#include <string>

#include "lsemi/error.hpp"

namespace lsemi {

namespace {

int require_group(const Semigroup& g) {
  auto e = identity_of(g);
  if (!e || !is_group(g)) {
    fail(errc::not_a_group, "operation needs a group, got a semigroup of order " +
                                std::to_string(g.order()) + " without one");
  }
  return *e;
}

std::vector<int> inverses(const Semigroup& g, int e) {
  std::vector<int> inv(static_cast<std::size_t>(g.order()), -1);
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      if (g.at(a, b) == e && g.at(b, a) == e) {
        inv[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
  }
  return inv;
}

}  // namespace

std::vector<mask_t> subgroups_of(const Semigroup& g) {
  const int e = require_group(g);
  const auto inv = inverses(g, e);
  const int n = g.order();
  const mask_t full = ElemSet::full(n).bits;
  std::vector<mask_t> out;
  for (mask_t m = 1; m <= full; ++m) {
    if (!((m >> e) & 1u)) continue;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!((m >> a) & 1u)) continue;
      if (!((m >> inv[static_cast<std::size_t>(a)]) & 1u)) {
        ok = false;
        break;
      }
      for (int b = 0; b < n; ++b) {
        if (((m >> b) & 1u) && !((m >> g.at(a, b)) & 1u)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(m);
  }
  return out;
}

bool is_normal_subgroup(const Semigroup& g, mask_t subgroup) {
  const int e = require_group(g);
  const auto inv = inverses(g, e);
  for (int x = 0; x < g.order(); ++x) {
    if (!((subgroup >> x) & 1u)) continue;
    for (int a = 0; a < g.order(); ++a) {
      const int conj = g.at(g.at(a, x), inv[static_cast<std::size_t>(a)]);
      if (!((subgroup >> conj) & 1u)) return false;
    }
  }
  return true;
}

bool is_simple_group(const Semigroup& g) {
  require_group(g);
  if (g.order() == 1) return false;
  int normal = 0;
  for (mask_t m : subgroups_of(g)) {
    if (is_normal_subgroup(g, m)) ++normal;
  }
  return normal == 2;  // only the trivial subgroup and the whole group
}

}  // namespace lsemi
