#pragma once

#include <cstdint>

namespace convcode {

/// Limits on exhaustive searches. Exceeding one raises BudgetExceeded rather
/// than truncating a search.
struct Budgets {
  /// Largest admissible number of states q^delta.
  std::uint64_t states = 4096;
  /// Messages or transitions enumerated by one brute-force call.
  std::uint64_t enumeration = 10'000'000;
  /// Largest |GL_delta(q)| searched for a WAM state isomorphism.
  std::uint64_t linear_group = 10'000'000;
  /// Encoders visited while walking a reduced-encoder orbit.
  std::uint64_t orbit = 1'000'000;
  /// Path length limit for the free-distance search.
  std::uint64_t path_length = 1000;

  /// Defaults, with the search caps (enumeration, linear_group, orbit)
  /// overridden by the CONVCODE_BUDGET environment variable when set.
  static Budgets from_environment();
  /// Copy with all search caps set to `cap`.
  Budgets with_search_cap(std::uint64_t cap) const;
};

/// q^e, or a value above `limit` if it would exceed it.
std::uint64_t checked_power(std::uint64_t q, std::uint64_t e, std::uint64_t limit);

}  // namespace convcode
