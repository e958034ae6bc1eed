#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lsemi/semigroup.hpp"

namespace lsemi {

// A pair (a, b) of parent indices demonstrating that a subset fails one of
// the definitional conditions. Always the lexicographically first violation
// in row-major (a, b) order, so reports are reproducible.
using witness_pair = std::pair<int, int>;

// Reflexive: ab in H implies ba in H. Witness: ab in H but ba not in H.
std::optional<witness_pair> reflexive_violation(const Semigroup& s, const ElemSet& h);

// Left unitary: a in U and ab in U imply b in U. Witness: (a, b) with
// a, ab in U but b outside.
std::optional<witness_pair> left_unitary_violation(const Semigroup& s, const ElemSet& u);

// Right unitary: b in U and ab in U imply a in U.
std::optional<witness_pair> right_unitary_violation(const Semigroup& s, const ElemSet& u);

// Witness: a, b in H with ab outside H.
std::optional<witness_pair> closure_violation(const Semigroup& s, const ElemSet& h);

bool is_reflexive(const Semigroup& s, const ElemSet& h);
bool is_left_unitary(const Semigroup& s, const ElemSet& u);
bool is_right_unitary(const Semigroup& s, const ElemSet& u);
bool is_unitary(const Semigroup& s, const ElemSet& u);

// Nonempty, closed, reflexive and unitary — the subsets whose principal
// congruence yields a group quotient on left simple semigroups.
bool is_ru_subsemigroup(const Semigroup& s, const ElemSet& h);

// One-stop classification of a subset, with witnesses for every failed flag.
struct SubsetReport {
  ElemSet subject;
  bool subsemigroup = false;
  bool reflexive = false;
  bool left_unitary = false;
  bool right_unitary = false;
  bool unitary = false;
  std::optional<witness_pair> closure_witness;
  std::optional<witness_pair> reflexive_witness;
  std::optional<witness_pair> left_unitary_witness;
  std::optional<witness_pair> right_unitary_witness;
};

SubsetReport subset_report(const Semigroup& s, const ElemSet& h);

// The join <H and N> inside a left simple semigroup where H is a reflexive
// unitary subsemigroup and N a unitary subsemigroup. Certifies the structural
// facts it returns: HN equals the generated subsemigroup, H and N intersect,
// the join is unitary, and when N is reflexive too, HN = NH and the join is
// reflexive. Violations raise theorem_check_failed.
ElemSet join_hn(const Semigroup& s, const ElemSet& h, const ElemSet& n);

// Exhaustive subset sweeps in ascending bitmask order.
std::vector<ElemSet> enumerate_subsemigroups(const Semigroup& s);
std::vector<ElemSet> enumerate_ru_subsemigroups(const Semigroup& s);
std::vector<ElemSet> enumerate_unitary_subsemigroups(const Semigroup& s);
std::vector<ElemSet> enumerate_right_unitary_subsemigroups(const Semigroup& s);

// Unitary subsemigroups containing `h`, swept over supersets of h only.
std::vector<ElemSet> enumerate_unitary_subsemigroups_over(const Semigroup& s, const ElemSet& h);

}  // namespace lsemi
