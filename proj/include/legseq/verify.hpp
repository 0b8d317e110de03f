#pragma once

// End-to-end consistency sweep for one field instance: every closed form is
// checked against brute force, and every branch of the correlation
// predictors that fires is counted.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legseq/finite_field.hpp"

namespace legseq {

struct VerifyOptions {
  /// Shifts to sweep; default is every e in [0, N).
  std::optional<std::vector<std::size_t>> shifts;
  /// Upper bound on (e1, e2) pairs for the cross-correlation check. All pairs
  /// are used when there are no more than this many.
  std::size_t max_pairs = 256;
  std::uint64_t seed = 1;
  /// Refuse the default full sweep above this N.
  std::size_t max_default_period = 4096;
  /// Test hook: flip this bit of every S^e before its autocorrelation check.
  std::optional<std::size_t> fault_bit;
};

struct CheckOutcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// "e=.. tau=.. expected=.. observed=.." for the first failing case.
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  std::vector<std::size_t> shifts;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<CheckOutcome> checks;
  /// Every known branch label, with the number of tau positions it covered.
  std::map<std::string, std::size_t> branch_counts;

  bool all_passed() const;
  const CheckOutcome* first_failure() const;
};

/// Deterministic choice of cross-correlation pairs among `shifts`: pairs hitting
/// each special congruence first, then seeded random fill.
std::vector<std::pair<std::size_t, std::size_t>> select_pairs(std::size_t n,
                                                              const std::vector<std::size_t>& shifts,
                                                              std::size_t max_pairs,
                                                              std::uint64_t seed);

/// Throws ParameterError for out-of-range shifts or when N exceeds
/// max_default_period with no explicit shift list.
VerifyReport verify_instance(const FieldContext& ctx, const VerifyOptions& options = {});

}  // namespace legseq
