#include "lsemi/semigroup.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "lsemi/config.hpp"
#include "lsemi/error.hpp"

namespace lsemi {

namespace {

void require_parent(const Semigroup& s, const ElemSet& x, const char* what) {
  if (x.parent_order != s.order()) {
    fail(errc::parent_mismatch, std::string(what) + " belongs to a semigroup of order " +
                                    std::to_string(x.parent_order) + ", expected " +
                                    std::to_string(s.order()));
  }
}

void require_element(const Semigroup& s, int a, const char* what) {
  if (a < 0 || a >= s.order()) {
    fail(errc::element_out_of_range, std::string(what) + " index " + std::to_string(a) +
                                         " outside semigroup of order " +
                                         std::to_string(s.order()));
  }
}

}  // namespace

Semigroup::Semigroup(const std::vector<std::vector<int>>& table, std::vector<std::string> labels)
    : order_(static_cast<int>(table.size())) {
  if (order_ == 0) fail(errc::invalid_params, "a semigroup needs at least one element");
  if (order_ > config::max_order()) {
    fail(errc::order_bound_exceeded, "order " + std::to_string(order_) +
                                         " exceeds the configured bound " +
                                         std::to_string(config::max_order()));
  }
  table_.resize(static_cast<std::size_t>(order_) * order_);
  for (int a = 0; a < order_; ++a) {
    if (static_cast<int>(table[a].size()) != order_) {
      fail(errc::non_square_table, "row " + std::to_string(a) + " has " +
                                       std::to_string(table[a].size()) + " entries, expected " +
                                       std::to_string(order_));
    }
    for (int b = 0; b < order_; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= order_) {
        fail(errc::entry_out_of_range, "entry at (" + std::to_string(a) + "," +
                                           std::to_string(b) + ") is " + std::to_string(v) +
                                           ", outside 0.." + std::to_string(order_ - 1));
      }
      table_[static_cast<std::size_t>(a) * order_ + b] = static_cast<std::uint8_t>(v);
    }
  }
  // Eager associativity scan over all triples; everything downstream relies
  // on it, so the cost is paid once here.
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      int ab = at(a, b);
      for (int c = 0; c < order_; ++c) {
        if (at(ab, c) != at(a, at(b, c))) {
          fail(errc::not_associative, "(a*b)*c != a*(b*c) at a=" + std::to_string(a) +
                                          " b=" + std::to_string(b) + " c=" + std::to_string(c));
        }
      }
    }
  }
  if (labels.empty()) {
    labels_.reserve(static_cast<std::size_t>(order_));
    for (int i = 0; i < order_; ++i) labels_.push_back("x" + std::to_string(i));
  } else {
    if (static_cast<int>(labels.size()) != order_) {
      fail(errc::invalid_params, "got " + std::to_string(labels.size()) + " labels for " +
                                     std::to_string(order_) + " elements");
    }
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) fail(errc::duplicate_labels, "label \"" + l + "\" repeats");
    }
    labels_ = std::move(labels);
  }
}

const std::string& Semigroup::label(int x) const {
  require_element(*this, x, "label");
  return labels_[static_cast<std::size_t>(x)];
}

std::optional<int> Semigroup::index_of_label(const std::string& label) const {
  for (int i = 0; i < order_; ++i) {
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> Semigroup::table() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(order_),
                                    std::vector<int>(static_cast<std::size_t>(order_)));
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) out[a][b] = at(a, b);
  }
  return out;
}

std::string Semigroup::label_set(const ElemSet& s) const {
  require_parent(*this, s, "subset");
  std::string out = "{";
  bool first = true;
  for (int x : s.elements()) {
    if (!first) out += ",";
    out += label(x);
    first = false;
  }
  return out + "}";
}

bool is_left_simple(const Semigroup& s) {
  const int n = s.order();
  const mask_t full = ElemSet::full(n).bits;
  for (int a = 0; a < n; ++a) {
    mask_t image = 0;  // S*a
    for (int x = 0; x < n; ++x) image |= mask_t{1} << s.at(x, a);
    if (image != full) return false;
  }
  return true;
}

ElemSet closure(const Semigroup& s, const ElemSet& x) {
  require_parent(s, x, "generator set");
  if (x.is_empty()) fail(errc::empty_generator, "closure of the empty set is undefined");
  mask_t cur = x.bits;
  for (;;) {
    mask_t grown = cur;
    for (int a = 0; a < s.order(); ++a) {
      if (!((cur >> a) & 1u)) continue;
      for (int b = 0; b < s.order(); ++b) {
        if ((cur >> b) & 1u) grown |= mask_t{1} << s.at(a, b);
      }
    }
    if (grown == cur) return ElemSet(s.order(), cur);
    cur = grown;
  }
}

ElemSet set_product(const Semigroup& s, const ElemSet& a, const ElemSet& b) {
  require_parent(s, a, "left factor");
  require_parent(s, b, "right factor");
  mask_t out = 0;
  for (int x = 0; x < s.order(); ++x) {
    if (!a.contains(x)) continue;
    for (int y = 0; y < s.order(); ++y) {
      if (b.contains(y)) out |= mask_t{1} << s.at(x, y);
    }
  }
  return ElemSet(s.order(), out);
}

Semigroup direct_product(const Semigroup& s, const Semigroup& t) {
  const int n = s.order(), m = t.order();
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n) * m,
                                      std::vector<int>(static_cast<std::size_t>(n) * m));
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n) * m);
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < m; ++x) labels.push_back("(" + s.label(a) + "," + t.label(x) + ")");
  }
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < m; ++x) {
      for (int b = 0; b < n; ++b) {
        for (int y = 0; y < m; ++y) {
          table[static_cast<std::size_t>(a) * m + x][static_cast<std::size_t>(b) * m + y] =
              s.at(a, b) * m + t.at(x, y);
        }
      }
    }
  }
  return Semigroup(table, std::move(labels));
}

ElemSet idempotents(const Semigroup& s) {
  ElemSet out = ElemSet::empty(s.order());
  for (int a = 0; a < s.order(); ++a) {
    if (s.at(a, a) == a) out.insert(a);
  }
  return out;
}

std::optional<int> identity_of(const Semigroup& s) {
  for (int e = 0; e < s.order(); ++e) {
    bool ok = true;
    for (int x = 0; x < s.order() && ok; ++x) ok = s.at(e, x) == x && s.at(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

bool is_group(const Semigroup& s) {
  auto e = identity_of(s);
  if (!e) return false;
  for (int a = 0; a < s.order(); ++a) {
    bool inv = false;
    for (int b = 0; b < s.order() && !inv; ++b) inv = s.at(a, b) == *e && s.at(b, a) == *e;
    if (!inv) return false;
  }
  return true;
}

bool is_left_zero(const Semigroup& s) {
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < s.order(); ++b) {
      if (s.at(a, b) != a) return false;
    }
  }
  return true;
}

bool is_subsemigroup(const Semigroup& s, const ElemSet& x) {
  require_parent(s, x, "subset");
  if (x.is_empty()) return false;
  for (int a = 0; a < s.order(); ++a) {
    if (!x.contains(a)) continue;
    for (int b = 0; b < s.order(); ++b) {
      if (x.contains(b) && !x.contains(s.at(a, b))) return false;
    }
  }
  return true;
}

ElemSet InducedSubsemigroup::reindex(const ElemSet& parent_subset) const {
  ElemSet out = ElemSet::empty(sub.order());
  for (int p : parent_subset.elements()) {
    if (p < 0 || p >= static_cast<int>(to_sub.size()) || to_sub[static_cast<std::size_t>(p)] < 0) {
      fail(errc::element_out_of_range,
           "element " + std::to_string(p) + " does not belong to the subsemigroup");
    }
    out.insert(to_sub[static_cast<std::size_t>(p)]);
  }
  return out;
}

ElemSet InducedSubsemigroup::to_parent_set(const ElemSet& sub_subset) const {
  ElemSet out = ElemSet::empty(static_cast<int>(to_sub.size()));
  for (int i : sub_subset.elements()) out.insert(to_parent[static_cast<std::size_t>(i)]);
  return out;
}

InducedSubsemigroup induced(const Semigroup& s, const ElemSet& members) {
  require_parent(s, members, "subset");
  if (members.is_empty()) fail(errc::empty_subset, "cannot induce on the empty subset");
  if (!is_subsemigroup(s, members)) {
    fail(errc::not_a_subsemigroup,
         "subset " + s.label_set(members) + " is not closed under the product");
  }
  std::vector<int> to_parent = members.elements();
  std::vector<int> to_sub(static_cast<std::size_t>(s.order()), -1);
  for (int i = 0; i < static_cast<int>(to_parent.size()); ++i) {
    to_sub[static_cast<std::size_t>(to_parent[static_cast<std::size_t>(i)])] = i;
  }
  const int m = static_cast<int>(to_parent.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m),
                                      std::vector<int>(static_cast<std::size_t>(m)));
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) labels.push_back(s.label(to_parent[static_cast<std::size_t>(i)]));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = to_sub[static_cast<std::size_t>(
          s.at(to_parent[static_cast<std::size_t>(i)], to_parent[static_cast<std::size_t>(j)]))];
    }
  }
  return InducedSubsemigroup{Semigroup(table, std::move(labels)), std::move(to_parent),
                             std::move(to_sub)};
}

namespace {

// Structural profile of one element, invariant under isomorphism. Used to
// prune the image candidates during the backtracking search.
struct ElementProfile {
  bool idempotent = false;
  int tail = 0;    // first repeat position in the power sequence a, a^2, ...
  int period = 0;  // cycle length of that sequence
  int right_image = 0;  // |aS|
  int left_image = 0;   // |Sa|
  int fixes_right = 0;  // |{b : ab = b}|
  int fixes_left = 0;   // |{b : ba = b}|
  int absorbs_right = 0;  // |{b : ab = a}|
  int absorbs_left = 0;   // |{b : ba = a}|

  friend bool operator==(const ElementProfile&, const ElementProfile&) = default;
  friend auto operator<=>(const ElementProfile&, const ElementProfile&) = default;
};

ElementProfile profile_of(const Semigroup& s, int a) {
  ElementProfile p;
  p.idempotent = s.at(a, a) == a;
  // Walk powers of a until the first repeat; (tail, period) describes the
  // shape of the cyclic subsemigroup generated by a.
  std::vector<int> seen_at(static_cast<std::size_t>(s.order()), -1);
  int cur = a, step = 0;
  while (seen_at[static_cast<std::size_t>(cur)] < 0) {
    seen_at[static_cast<std::size_t>(cur)] = step++;
    cur = s.at(cur, a);
  }
  p.tail = seen_at[static_cast<std::size_t>(cur)];
  p.period = step - p.tail;
  mask_t right = 0, left = 0;
  for (int b = 0; b < s.order(); ++b) {
    right |= mask_t{1} << s.at(a, b);
    left |= mask_t{1} << s.at(b, a);
    if (s.at(a, b) == b) ++p.fixes_right;
    if (s.at(b, a) == b) ++p.fixes_left;
    if (s.at(a, b) == a) ++p.absorbs_right;
    if (s.at(b, a) == a) ++p.absorbs_left;
  }
  p.right_image = std::popcount(right);
  p.left_image = std::popcount(left);
  return p;
}

struct IsoSearch {
  const Semigroup& s;
  const Semigroup& t;
  const std::vector<ElementProfile>& ps;
  const std::vector<ElementProfile>& pt;
  std::vector<int> map;   // s index -> t index, -1 unassigned
  std::vector<int> inv;   // t index -> s index, -1 unassigned
  std::vector<std::vector<std::pair<int, int>>> pairs_by_product;  // in s

  // Checks every product constraint that the assignment of element `i`
  // completes: pairs involving i, and pairs whose product is i.
  bool consistent(int i) const {
    for (int x = 0; x <= i; ++x) {
      if (!check_pair(x, i) || !check_pair(i, x)) return false;
    }
    for (const auto& [x, y] : pairs_by_product[static_cast<std::size_t>(i)]) {
      if (x < i && y < i && !check_pair(x, y)) return false;
    }
    return true;
  }

  bool check_pair(int x, int y) const {
    const int p = s.at(x, y);
    const int q = t.at(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]);
    if (map[static_cast<std::size_t>(p)] >= 0) return map[static_cast<std::size_t>(p)] == q;
    // p not yet assigned: its image must become q, so q must still be free.
    return inv[static_cast<std::size_t>(q)] < 0;
  }

  bool assign(int i) {
    const int n = s.order();
    if (i == n) return true;
    for (int cand = 0; cand < n; ++cand) {
      if (inv[static_cast<std::size_t>(cand)] >= 0) continue;
      if (!(ps[static_cast<std::size_t>(i)] == pt[static_cast<std::size_t>(cand)])) continue;
      map[static_cast<std::size_t>(i)] = cand;
      inv[static_cast<std::size_t>(cand)] = i;
      if (consistent(i) && assign(i + 1)) return true;
      map[static_cast<std::size_t>(i)] = -1;
      inv[static_cast<std::size_t>(cand)] = -1;
    }
    return false;
  }
};

}  // namespace

bool verify_isomorphism(const Semigroup& s, const Semigroup& t, const IsoWitness& w) {
  const int n = s.order();
  if (t.order() != n || static_cast<int>(w.mapping.size()) != n) return false;
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int a = 0; a < n; ++a) {
    int img = w.mapping[static_cast<std::size_t>(a)];
    if (img < 0 || img >= n || hit[static_cast<std::size_t>(img)]) return false;
    hit[static_cast<std::size_t>(img)] = true;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (w.mapping[static_cast<std::size_t>(s.at(a, b))] !=
          t.at(w.mapping[static_cast<std::size_t>(a)], w.mapping[static_cast<std::size_t>(b)])) {
        return false;
      }
    }
  }
  return true;
}

std::optional<IsoWitness> is_isomorphic(const Semigroup& s, const Semigroup& t) {
  const int n = s.order();
  if (t.order() != n) return std::nullopt;
  std::vector<ElementProfile> ps, pt;
  ps.reserve(static_cast<std::size_t>(n));
  pt.reserve(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    ps.push_back(profile_of(s, a));
    pt.push_back(profile_of(t, a));
  }
  {
    auto as = ps, at_ = pt;
    std::sort(as.begin(), as.end());
    std::sort(at_.begin(), at_.end());
    if (as != at_) return std::nullopt;  // profile multisets must agree
  }
  IsoSearch search{s, t, ps, pt,
                   std::vector<int>(static_cast<std::size_t>(n), -1),
                   std::vector<int>(static_cast<std::size_t>(n), -1),
                   std::vector<std::vector<std::pair<int, int>>>(static_cast<std::size_t>(n))};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      search.pairs_by_product[static_cast<std::size_t>(s.at(a, b))].emplace_back(a, b);
    }
  }
  if (!search.assign(0)) return std::nullopt;
  IsoWitness w{std::move(search.map)};
  if (!verify_isomorphism(s, t, w)) {
    fail(errc::construction_check_failed, "isomorphism search produced an invalid witness");
  }
  return w;
}

}  // namespace lsemi
