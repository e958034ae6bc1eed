#include "lsemi/series.hpp"

#include <algorithm>
#include <string>

#include "lsemi/error.hpp"
#include "lsemi/factory.hpp"
#include "lsemi/groups.hpp"

namespace lsemi {

NormalSeries validate_series(const Semigroup& parent, const std::vector<ElemSet>& chain) {
  if (!is_left_simple(parent)) {
    fail(errc::precondition_violated, "NotLeftSimple: series parent must be left simple");
  }
  if (chain.empty()) {
    fail(errc::invalid_params, "a series needs at least one term (the full semigroup)");
  }
  if (!(chain.front() == parent.universe())) {
    fail(errc::invalid_params, "a series must start at the full semigroup");
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const ElemSet& term = chain[i];
    if (term.parent_order != parent.order()) {
      fail(errc::parent_mismatch, "term " + std::to_string(i) + " lives over order " +
                                      std::to_string(term.parent_order) + ", expected " +
                                      std::to_string(parent.order()));
    }
    if (term.is_empty()) {
      fail(errc::empty_subset, "term " + std::to_string(i) + " is empty");
    }
    if (!is_subsemigroup(parent, term)) {
      fail(errc::not_a_subsemigroup,
           "term " + std::to_string(i) + " = " + parent.label_set(term) + " is not closed");
    }
    if (i == 0) continue;
    if (!term.subset_of(chain[i - 1])) {
      fail(errc::not_descending, "term " + std::to_string(i) + " = " + parent.label_set(term) +
                                     " is not contained in term " + std::to_string(i - 1));
    }
    // Reflexive unitary within the predecessor, checked inside the induced
    // subsemigroup; witnesses are translated back to parent labels.
    const InducedSubsemigroup pred = induced(parent, chain[i - 1]);
    const ElemSet term_in_pred = pred.reindex(term);
    const SubsetReport r = subset_report(pred.sub, term_in_pred);
    if (!r.reflexive || !r.left_unitary || !r.right_unitary) {
      const auto witness = r.reflexive_witness   ? r.reflexive_witness
                           : r.left_unitary_witness ? r.left_unitary_witness
                                                    : r.right_unitary_witness;
      std::string detail = "term " + std::to_string(i) + " = " + parent.label_set(term) +
                           " is not reflexive unitary inside term " + std::to_string(i - 1);
      if (witness) {
        detail += " (witness a=" + pred.sub.label(witness->first) +
                  ", b=" + pred.sub.label(witness->second) + ")";
      }
      fail(errc::not_normal_in_predecessor, detail);
    }
  }
  return NormalSeries{parent, chain};
}

SeriesFactors factors(const NormalSeries& ns) {
  SeriesFactors out;
  for (std::size_t i = 0; i + 1 < ns.chain.size(); ++i) {
    const InducedSubsemigroup sub = induced(ns.parent, ns.chain[i]);
    const PrincipalCongruence pc = principal_congruence(sub.sub, sub.reindex(ns.chain[i + 1]));
    QuotientSemigroup q = quotient(sub.sub, pc.congruence);
    if (!pc.h_class || !is_group_with_identity(q, *pc.h_class)) {
      fail(errc::theorem_check_failed,
           "factor " + std::to_string(i + 1) + " of the series is not a group with identity " +
               ns.parent.label_set(ns.chain[i + 1]));
    }
    out.identity_classes.push_back(*pc.h_class);
    out.factors.push_back(std::move(q));
  }
  return out;
}

std::optional<SeriesIso> series_isomorphic(const NormalSeries& a, const NormalSeries& b) {
  if (a.length() != b.length()) return std::nullopt;
  const SeriesFactors fa = factors(a);
  const SeriesFactors fb = factors(b);
  const int k = static_cast<int>(fa.factors.size());
  SeriesIso iso;
  iso.permutation.assign(static_cast<std::size_t>(k), -1);
  iso.witnesses.resize(static_cast<std::size_t>(k));
  std::vector<bool> used(static_cast<std::size_t>(k), false);
  // First-fit matching in index order keeps the pairing deterministic.
  for (int i = 0; i < k; ++i) {
    bool matched = false;
    for (int j = 0; j < k && !matched; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      auto w = is_isomorphic(fa.factors[static_cast<std::size_t>(i)].quotient,
                             fb.factors[static_cast<std::size_t>(j)].quotient);
      if (w) {
        iso.permutation[static_cast<std::size_t>(i)] = j;
        iso.witnesses[static_cast<std::size_t>(i)] = *w;
        used[static_cast<std::size_t>(j)] = true;
        matched = true;
      }
    }
    if (!matched) return std::nullopt;
  }
  return iso;
}

namespace {

void require_same_ambient(const NormalSeries& a, const NormalSeries& b) {
  if (!(a.parent == b.parent)) {
    fail(errc::parent_mismatch, "series live over different semigroups");
  }
}

}  // namespace

std::pair<NormalSeries, NormalSeries> common_tail_refine(const NormalSeries& a,
                                                         const NormalSeries& b) {
  require_same_ambient(a, b);
  std::vector<ElemSet> ea = a.chain;
  for (std::size_t j = 1; j < b.chain.size(); ++j) ea.push_back(a.chain.back() & b.chain[j]);
  std::vector<ElemSet> eb = b.chain;
  for (std::size_t i = 1; i < a.chain.size(); ++i) eb.push_back(b.chain.back() & a.chain[i]);
  // Both extensions end at back(a) ∩ back(b); validation certifies that each
  // appended meet is again reflexive unitary in its predecessor.
  NormalSeries ra = [&] {
    try {
      return validate_series(a.parent, ea);
    } catch (const Error& e) {
      fail(errc::theorem_check_failed,
           std::string("meet extension of the first series is not a valid series: ") + e.what());
    }
  }();
  NormalSeries rb = [&] {
    try {
      return validate_series(b.parent, eb);
    } catch (const Error& e) {
      fail(errc::theorem_check_failed,
           std::string("meet extension of the second series is not a valid series: ") + e.what());
    }
  }();
  if (!(ra.chain.back() == rb.chain.back())) {
    fail(errc::theorem_check_failed, "extended series do not share their final term");
  }
  return {std::move(ra), std::move(rb)};
}

namespace {

bool is_refinement(const NormalSeries& fine, const NormalSeries& coarse) {
  for (const ElemSet& term : coarse.chain) {
    if (std::find(fine.chain.begin(), fine.chain.end(), term) == fine.chain.end()) return false;
  }
  return true;
}

}  // namespace

SchreierResult schreier_refine(const NormalSeries& a, const NormalSeries& b) {
  require_same_ambient(a, b);
  NormalSeries base_a = a, base_b = b;
  if (!(a.chain.back() == b.chain.back())) {
    auto aligned = common_tail_refine(a, b);
    base_a = std::move(aligned.first);
    base_b = std::move(aligned.second);
  }
  const Semigroup& s = a.parent;
  const int k = base_a.length();
  const int n = base_b.length();

  // Interpolated term S_{j,i} = S_i * (S_{i-1} ∩ H_j). Block i runs j=1..n
  // and descends from S_{i-1} to S_i; blocks are chained so each boundary
  // term appears once. The certified identities S_{0,i} = S_{i-1} and
  // S_{n,i} = S_i pin the blocks to the original terms.
  auto interpolate = [&s](const NormalSeries& primary, const NormalSeries& other) {
    std::vector<ElemSet> chain{primary.chain.front()};
    for (std::size_t i = 1; i < primary.chain.size(); ++i) {
      const ElemSet& lo = primary.chain[i];
      const ElemSet& hi = primary.chain[i - 1];
      const ElemSet boundary_start = set_product(s, lo, hi & other.chain.front());
      if (!(boundary_start == hi)) {
        fail(errc::theorem_check_failed,
             "block start " + s.label_set(boundary_start) + " differs from " + s.label_set(hi));
      }
      for (std::size_t j = 1; j < other.chain.size(); ++j) {
        chain.push_back(set_product(s, lo, hi & other.chain[j]));
      }
      if (!(chain.back() == lo)) {
        fail(errc::theorem_check_failed,
             "block end " + s.label_set(chain.back()) + " differs from " + s.label_set(lo));
      }
    }
    return chain;
  };

  auto validate_refined = [&s](std::vector<ElemSet> chain) {
    try {
      return validate_series(s, chain);
    } catch (const Error& e) {
      if (e.code() == errc::theorem_check_failed) throw;
      fail(errc::theorem_check_failed,
           std::string("interpolated chain is not a valid series: ") + e.what());
    }
  };
  SchreierResult out{validate_refined(interpolate(base_a, base_b)),
                     validate_refined(interpolate(base_b, base_a)),
                     SeriesIso{}};
  if (!is_refinement(out.refined_a, a) || !is_refinement(out.refined_b, b)) {
    fail(errc::theorem_check_failed, "refined series do not contain the original terms");
  }
  if (out.refined_a.length() != k * n || out.refined_b.length() != n * k) {
    fail(errc::theorem_check_failed, "refined series have unexpected length");
  }

  // Factor (i-1)*n + j of the first refinement pairs with factor
  // (j-1)*k + i of the second (1-based); the butterfly step certifies each
  // pair, and the witnesses are kept.
  const SeriesFactors fa = factors(out.refined_a);
  const SeriesFactors fb = factors(out.refined_b);
  out.iso.permutation.assign(static_cast<std::size_t>(k * n), -1);
  out.iso.witnesses.resize(static_cast<std::size_t>(k * n));
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int fa_idx = (i - 1) * n + j - 1;
      const int fb_idx = (j - 1) * k + i - 1;
      auto w = is_isomorphic(fa.factors[static_cast<std::size_t>(fa_idx)].quotient,
                             fb.factors[static_cast<std::size_t>(fb_idx)].quotient);
      if (!w) {
        fail(errc::theorem_check_failed, "factors at block (" + std::to_string(i) + "," +
                                             std::to_string(j) + ") are not isomorphic");
      }
      out.iso.permutation[static_cast<std::size_t>(fa_idx)] = fb_idx;
      out.iso.witnesses[static_cast<std::size_t>(fa_idx)] = *w;
    }
  }
  return out;
}

namespace {

// Proper reflexive unitary subsemigroups of the subsemigroup induced by
// `within`, translated back to parent indices, ascending.
std::vector<ElemSet> proper_ru_inside(const Semigroup& parent, const ElemSet& within) {
  const InducedSubsemigroup sub = induced(parent, within);
  std::vector<ElemSet> out;
  for (const ElemSet& t : enumerate_ru_subsemigroups(sub.sub)) {
    const ElemSet in_parent = sub.to_parent_set(t);
    const ElemSet resized(parent.order(), in_parent.bits);
    if (!(resized == within)) out.push_back(resized);
  }
  return out;
}

}  // namespace

CompositionCheck is_composition_series(const NormalSeries& ns) {
  CompositionCheck check;
  bool by_gaps = true;
  std::string reason;
  for (std::size_t i = 1; i < ns.chain.size() && by_gaps; ++i) {
    if (ns.chain[i] == ns.chain[i - 1]) {
      by_gaps = false;
      reason = "step " + std::to_string(i) + " is not strict";
      break;
    }
    for (const ElemSet& t : proper_ru_inside(ns.parent, ns.chain[i - 1])) {
      if (ns.chain[i].proper_subset_of(t)) {
        by_gaps = false;
        reason = "term " + std::to_string(i) + " is not maximal: " + ns.parent.label_set(t) +
                 " fits strictly between";
        break;
      }
    }
  }
  if (by_gaps && !proper_ru_inside(ns.parent, ns.chain.back()).empty()) {
    by_gaps = false;
    reason = "last term still has a proper reflexive unitary subsemigroup";
  }

  // Cross-check with the factor criterion: strict steps with every factor a
  // simple group, and the same terminal condition. The two characterisations
  // must agree.
  bool by_factors = true;
  for (std::size_t i = 1; i < ns.chain.size() && by_factors; ++i) {
    by_factors = !(ns.chain[i] == ns.chain[i - 1]);
  }
  if (by_factors) {
    for (const QuotientSemigroup& q : factors(ns).factors) {
      if (!is_simple_group(q.quotient)) {
        by_factors = false;
        break;
      }
    }
    by_factors = by_factors && proper_ru_inside(ns.parent, ns.chain.back()).empty();
  }
  if (by_gaps != by_factors) {
    fail(errc::theorem_check_failed,
         "maximality criterion and simple-factor criterion disagree on a series");
  }
  check.ok = by_gaps;
  check.reason = check.ok ? "" : reason;
  return check;
}

namespace {

void descend_maximal(const Semigroup& s, std::vector<ElemSet>& chain, bool all,
                     std::vector<NormalSeries>& out) {
  if (!all && !out.empty()) return;
  const std::vector<ElemSet> proper = proper_ru_inside(s, chain.back());
  if (proper.empty()) {
    out.push_back(validate_series(s, chain));
    return;
  }
  for (const ElemSet& cand : proper) {
    bool maximal = true;
    for (const ElemSet& other : proper) {
      if (cand.proper_subset_of(other)) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    chain.push_back(cand);
    descend_maximal(s, chain, all, out);
    chain.pop_back();
    if (!all && !out.empty()) return;
  }
}

}  // namespace

std::vector<NormalSeries> find_composition_series(const Semigroup& s, bool all) {
  if (!is_left_simple(s)) {
    fail(errc::precondition_violated, "NotLeftSimple: composition series need a left simple parent");
  }
  std::vector<ElemSet> chain{s.universe()};
  std::vector<NormalSeries> out;
  descend_maximal(s, chain, all, out);
  return out;
}

namespace {

void descend_all(const Semigroup& s, std::vector<ElemSet>& chain, std::size_t max_count,
                 std::vector<NormalSeries>& out) {
  if (out.size() >= max_count) return;
  out.push_back(validate_series(s, chain));
  for (const ElemSet& cand : proper_ru_inside(s, chain.back())) {
    if (out.size() >= max_count) return;
    chain.push_back(cand);
    descend_all(s, chain, max_count, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<NormalSeries> enumerate_normal_series(const Semigroup& s, std::size_t max_count) {
  if (!is_left_simple(s)) {
    fail(errc::precondition_violated, "NotLeftSimple: series need a left simple parent");
  }
  std::vector<ElemSet> chain{s.universe()};
  std::vector<NormalSeries> out;
  descend_all(s, chain, max_count, out);
  return out;
}

JordanHolderReport jordan_holder_check(const Semigroup& s) {
  JordanHolderReport rep;
  rep.series = find_composition_series(s, true);
  if (rep.series.empty()) {
    fail(errc::theorem_check_failed, "no composition series found on a finite left simple semigroup");
  }
  for (const NormalSeries& ns : rep.series) {
    const CompositionCheck check = is_composition_series(ns);
    if (!check.ok) {
      fail(errc::theorem_check_failed, "found series fails the composition check: " + check.reason);
    }
  }
  rep.length = rep.series.front().length();
  for (std::size_t i = 0; i < rep.series.size(); ++i) {
    if (rep.series[i].length() != rep.length) {
      fail(errc::theorem_check_failed, "composition series have different lengths");
    }
  }
  for (std::size_t i = 0; i < rep.series.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.series.size(); ++j) {
      if (!series_isomorphic(rep.series[i], rep.series[j])) {
        fail(errc::theorem_check_failed, "composition series " + std::to_string(i) + " and " +
                                             std::to_string(j) + " have non-isomorphic factors");
      }
    }
  }
  for (const QuotientSemigroup& q : factors(rep.series.front()).factors) {
    rep.factor_names.push_back(group_name(q.quotient));
  }
  std::sort(rep.factor_names.begin(), rep.factor_names.end());
  rep.all_isomorphic = true;
  return rep;
}

NormalSeries compact(const NormalSeries& ns) {
  std::vector<ElemSet> chain;
  for (const ElemSet& term : ns.chain) {
    if (chain.empty() || !(chain.back() == term)) chain.push_back(term);
  }
  return NormalSeries{ns.parent, chain};
}

}  // namespace lsemi
