#include "convcode/budget.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace convcode {

Budgets Budgets::from_environment() {
  Budgets b;
  if (const char* env = std::getenv("CONVCODE_BUDGET"); env && *env) {
    try {
      b = b.with_search_cap(std::stoull(env));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("CONVCODE_BUDGET is not a number: ") + env);
    }
  }
  return b;
}

Budgets Budgets::with_search_cap(std::uint64_t cap) const {
  Budgets b = *this;
  b.enumeration = cap;
  b.linear_group = cap;
  b.orbit = cap;
  return b;
}

std::uint64_t checked_power(std::uint64_t q, std::uint64_t e, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > limit / q) return limit + 1;
    r *= q;
  }
  return r;
}

}  // namespace convcode
