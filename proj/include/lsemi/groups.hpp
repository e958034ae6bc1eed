#pragma once

#include <vector>

#include "lsemi/semigroup.hpp"

namespace lsemi {

// Group-specific helpers used when a quotient is known to be a group.
// All of them throw not_a_group unless `g` passes is_group().

// All subgroups as masks, ascending. Checks closure, identity and inverses
// explicitly rather than relying on finiteness shortcuts.
std::vector<mask_t> subgroups_of(const Semigroup& g);

bool is_normal_subgroup(const Semigroup& g, mask_t subgroup);

// Nontrivial and without proper nontrivial normal subgroups. The one-element
// group is not simple.
bool is_simple_group(const Semigroup& g);

}  // namespace lsemi
