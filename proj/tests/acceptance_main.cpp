// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <iostream>

#include "vkc/acceptance.hpp"

int main() {
  vkc::AcceptanceConfig config;
  config.fixture_dir = VKC_FIXTURE_DIR;
  bool all = true;
  vkc::run_acceptance(config, [&](const vkc::CriterionResult& r) {
    std::cout << vkc::format_result(r) << std::endl;
    all = all && r.passed;
  });
  return all ? 0 : 1;
}
