#pragma once

#include <stdexcept>
#include <string>

namespace lsemi {

// Every failure the library reports, grouped by how a caller should react:
// input validation (reject the data), precondition violation (the operation
// does not apply), or a certification failure (a conclusion this library
// promises to verify did not hold — always a bug, never a user error).
enum class errc {
  // input validation
  non_square_table,
  entry_out_of_range,
  not_associative,
  duplicate_labels,
  unknown_subset,
  parse_error,
  invalid_params,
  // precondition violations
  empty_subset,
  empty_generator,
  parent_mismatch,
  element_out_of_range,
  order_bound_exceeded,
  zero_size,
  not_a_group,
  not_a_congruence,
  not_a_subsemigroup,
  not_descending,
  not_normal_in_predecessor,
  precondition_violated,
  // certification failures
  theorem_check_failed,
  construction_check_failed,
};

// Stable identifier for an errc, e.g. "not_associative". Used in error
// output and exit-code mapping tests.
const char* errc_name(errc c) noexcept;

// Which of the three reaction groups a code belongs to: 1 = validation,
// 2 = precondition, 3 = certification. Doubles as the CLI exit code.
int errc_category(errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg);
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& msg);

}  // namespace lsemi
