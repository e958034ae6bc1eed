#include <cstdlib>
#include <iostream>
#include <string>

#include "commands.hpp"
#include "lsemi/config.hpp"
#include "lsemi/error.hpp"

int main(int argc, char** argv) {
  if (const char* bound = std::getenv("LSEMI_MAX_ORDER")) {
    try {
      lsemi::config::set_max_order(std::stoi(bound));
    } catch (const std::exception& e) {
      std::cerr << "error (invalid_params): LSEMI_MAX_ORDER: " << e.what() << "\n";
      return 1;
    }
  }
  return lsemi::cli::run(argc, argv, std::cout, std::cerr);
}
