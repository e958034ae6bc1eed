#pragma once

namespace lsemi::config {

// Largest semigroup order the library accepts. Element subsets are stored as
// 64-bit masks and several routines sweep all 2^n subsets, so the hard limit
// is 32 and the default keeps exhaustive sweeps fast.
inline constexpr int default_max_order = 24;
inline constexpr int hard_max_order = 32;

int max_order() noexcept;

// Set the accepted order bound. Throws invalid_params unless 1 <= n <= 32.
void set_max_order(int n);

}  // namespace lsemi::config
