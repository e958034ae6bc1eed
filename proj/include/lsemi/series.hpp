#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lsemi/congruence.hpp"

namespace lsemi {

// Descending chain S = chain[0] ⊇ chain[1] ⊇ ... ⊇ chain[k] over a left
// simple parent, where every term is a reflexive unitary subsemigroup of its
// predecessor. Construct through validate_series so the invariants hold.
struct NormalSeries {
  Semigroup parent;
  std::vector<ElemSet> chain;

  int length() const { return static_cast<int>(chain.size()) - 1; }
  friend bool operator==(const NormalSeries&, const NormalSeries&) = default;
};

// Checks: parent left simple, chain nonempty and starting at the full set,
// every term a nonempty subsemigroup of the parent, descending (repeats
// allowed), and each term reflexive unitary inside the subsemigroup induced
// by its predecessor. Throws not_descending, not_a_subsemigroup or
// not_normal_in_predecessor with the failing index (and witness pair, in
// parent indices) in the message.
NormalSeries validate_series(const Semigroup& parent, const std::vector<ElemSet>& chain);

// factors[i] = chain[i] / (principal congruence of chain[i+1] inside it).
// Each factor is certified to be a group whose identity class is the
// re-indexed chain[i+1].
struct SeriesFactors {
  std::vector<QuotientSemigroup> factors;
  std::vector<int> identity_classes;
};

SeriesFactors factors(const NormalSeries& ns);

// Matching between the factor lists of two series of equal length: factor i
// of the first is isomorphic to factor permutation[i] of the second, with a
// verified witness per pair. Matching is first-fit in index order, so the
// result is deterministic.
struct SeriesIso {
  std::vector<int> permutation;
  std::vector<IsoWitness> witnesses;
};

std::optional<SeriesIso> series_isomorphic(const NormalSeries& a, const NormalSeries& b);

// Extends both series with the meets of their last terms against the other
// chain's terms, producing two series with a common final term. Requires the
// same parent; the extensions are validated before being returned.
std::pair<NormalSeries, NormalSeries> common_tail_refine(const NormalSeries& a,
                                                         const NormalSeries& b);

// Schreier-style refinement: inserts the products S_i * (S_{i-1} ∩ H_j)
// between consecutive terms of one series (and symmetrically for the other),
// after first aligning the tails if they differ. The two refined series have
// equal length k*n and pairwise isomorphic factors under the block-transpose
// pairing; the returned SeriesIso carries one verified witness per factor.
struct SchreierResult {
  NormalSeries refined_a;
  NormalSeries refined_b;
  SeriesIso iso;
};

SchreierResult schreier_refine(const NormalSeries& a, const NormalSeries& b);

// Strictly descending, no intermediate reflexive unitary subsemigroup fits
// between consecutive terms, and the last term has no proper one at all.
// The verdict is cross-checked against the factor criterion (all factors
// simple groups); disagreement would raise theorem_check_failed.
struct CompositionCheck {
  bool ok = false;
  std::string reason;  // empty when ok
};

CompositionCheck is_composition_series(const NormalSeries& ns);

// Depth-first descent through maximal proper reflexive unitary
// subsemigroups. With all=false returns just the lexicographically first
// series; with all=true every composition series, in DFS order.
std::vector<NormalSeries> find_composition_series(const Semigroup& s, bool all);

// Every strictly descending series (any depth, emitted pre-order), capped at
// max_count. Used to generate refinement test pairs.
std::vector<NormalSeries> enumerate_normal_series(const Semigroup& s, std::size_t max_count);

// Checks that all composition series of `s` have the same length and
// pairwise isomorphic factor lists. factor_names is the sorted multiset of
// catalog names of the factors of the first series.
struct JordanHolderReport {
  std::vector<NormalSeries> series;
  int length = 0;
  std::vector<std::string> factor_names;
  bool all_isomorphic = false;
};

JordanHolderReport jordan_holder_check(const Semigroup& s);

// Display helper: the same series with adjacent duplicate terms removed.
NormalSeries compact(const NormalSeries& ns);

}  // namespace lsemi
