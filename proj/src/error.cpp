#include "lsemi/error.hpp"

namespace lsemi {

const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::non_square_table: return "non_square_table";
    case errc::entry_out_of_range: return "entry_out_of_range";
    case errc::not_associative: return "not_associative";
    case errc::duplicate_labels: return "duplicate_labels";
    case errc::unknown_subset: return "unknown_subset";
    case errc::parse_error: return "parse_error";
    case errc::invalid_params: return "invalid_params";
    case errc::empty_subset: return "empty_subset";
    case errc::empty_generator: return "empty_generator";
    case errc::parent_mismatch: return "parent_mismatch";
    case errc::element_out_of_range: return "element_out_of_range";
    case errc::order_bound_exceeded: return "order_bound_exceeded";
    case errc::zero_size: return "zero_size";
    case errc::not_a_group: return "not_a_group";
    case errc::not_a_congruence: return "not_a_congruence";
    case errc::not_a_subsemigroup: return "not_a_subsemigroup";
    case errc::not_descending: return "not_descending";
    case errc::not_normal_in_predecessor: return "not_normal_in_predecessor";
    case errc::precondition_violated: return "precondition_violated";
    case errc::theorem_check_failed: return "theorem_check_failed";
    case errc::construction_check_failed: return "construction_check_failed";
  }
  return "unknown";
}

int errc_category(errc c) noexcept {
  switch (c) {
    case errc::non_square_table:
    case errc::entry_out_of_range:
    case errc::not_associative:
    case errc::duplicate_labels:
    case errc::unknown_subset:
    case errc::parse_error:
    case errc::invalid_params:
      return 1;
    case errc::theorem_check_failed:
    case errc::construction_check_failed:
      return 3;
    default:
      return 2;
  }
}

Error::Error(errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace lsemi
