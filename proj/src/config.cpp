#include "lsemi/config.hpp"

#include <string>

#include "lsemi/error.hpp"

namespace lsemi::config {

namespace {
int g_max_order = default_max_order;
}

int max_order() noexcept { return g_max_order; }

void set_max_order(int n) {
  if (n < 1 || n > hard_max_order) {
    fail(errc::invalid_params, "order bound must be between 1 and " +
                                   std::to_string(hard_max_order) + ", got " + std::to_string(n));
  }
  g_max_order = n;
}

}  // namespace lsemi::config
