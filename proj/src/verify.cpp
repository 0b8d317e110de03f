#include "legseq/verify.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <set>

#include "legseq/complexity.hpp"
#include "legseq/correlation.hpp"
#include "legseq/errors.hpp"
#include "legseq/kernels.hpp"
#include "legseq/sequence.hpp"

namespace legseq {

namespace {

class Check {
 public:
  explicit Check(std::string name) { outcome_.name = std::move(name); }

  void expect(bool ok, const std::string& where, std::int64_t expected, std::int64_t observed) {
    ++outcome_.cases;
    if (ok) return;
    if (outcome_.failures++ == 0) {
      outcome_.first_failure = where + " expected=" + std::to_string(expected) +
                               " observed=" + std::to_string(observed);
    }
  }

  void expect_equal(std::int64_t expected, std::int64_t observed, const std::string& where) {
    expect(expected == observed, where, expected, observed);
  }

  void fail(const std::string& what) {
    ++outcome_.cases;
    if (outcome_.failures++ == 0) outcome_.first_failure = what;
  }

  CheckOutcome take() { return std::move(outcome_); }

 private:
  CheckOutcome outcome_;
};

std::string at(std::size_t e, std::size_t tau) {
  return "e=" + std::to_string(e) + " tau=" + std::to_string(tau);
}

std::string at_pair(std::size_t e1, std::size_t e2, std::size_t tau) {
  return "e1=" + std::to_string(e1) + " e2=" + std::to_string(e2) + " tau=" + std::to_string(tau);
}

std::vector<std::int64_t> brute(const BinarySequence& a, const BinarySequence& b) {
  return kernels::correlate_packed(a.bits(), b.bits());
}

// Per-shift results computed in parallel, then merged in order.
struct ShiftResult {
  std::vector<std::int64_t> observed;
  CorrelationPrediction predicted;
  std::vector<std::int64_t> decomposed;
  std::size_t zeros = 0;
  std::size_t ones = 0;
  std::optional<LinearComplexityReport> lc;
  std::string error;
  std::string lc_error;
};

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed(); });
}

const CheckOutcome* VerifyReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed()) return &c;
  }
  return nullptr;
}

std::vector<std::pair<std::size_t, std::size_t>> select_pairs(std::size_t n,
                                                              const std::vector<std::size_t>& shifts,
                                                              std::size_t max_pairs,
                                                              std::uint64_t seed) {
  std::vector<std::size_t> sorted = shifts;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<std::pair<std::size_t, std::size_t>> all;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) all.emplace_back(sorted[i], sorted[j]);
  }
  if (all.size() <= max_pairs) return all;

  const auto sn = static_cast<std::int64_t>(n);
  const std::int64_t half = sn / 2;
  auto special = [&](const std::pair<std::size_t, std::size_t>& pr) {
    const auto e1 = static_cast<std::int64_t>(pr.first);
    const auto e2 = static_cast<std::int64_t>(pr.second);
    if (residue(e2 - e1, sn) == half) return 0;
    if (residue(e1 + e2, sn) == 1) return 1;
    if (residue(e1 + e2, sn) == residue(1 - half, sn)) return 2;
    return -1;
  };

  std::set<std::pair<std::size_t, std::size_t>> chosen;
  const std::size_t per_class = std::max<std::size_t>(1, max_pairs / 8);
  for (int cls = 0; cls < 3; ++cls) {
    std::vector<std::pair<std::size_t, std::size_t>> members;
    for (const auto& pr : all) {
      if (special(pr) == cls) members.push_back(pr);
    }
    // evenly spaced picks keep the choice spread over the shift range
    const std::size_t take = std::min(per_class, members.size());
    for (std::size_t k = 0; k < take && chosen.size() < max_pairs; ++k) {
      chosen.insert(members[k * members.size() / take]);
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  while (chosen.size() < max_pairs) chosen.insert(all[pick(rng)]);
  return {chosen.begin(), chosen.end()};
}

VerifyReport verify_instance(const FieldContext& ctx, const VerifyOptions& options) {
  const std::size_t n = ctx.period();
  const auto sn = static_cast<std::int64_t>(n);
  VerifyReport report;

  if (options.shifts) {
    for (const std::size_t e : *options.shifts) {
      if (e >= n) {
        throw ParameterError("shift " + std::to_string(e) + " outside [0, " + std::to_string(n - 1) +
                             "]");
      }
    }
    report.shifts = *options.shifts;
  } else {
    if (n > options.max_default_period) {
      throw ParameterError("N = " + std::to_string(n) + " exceeds " +
                           std::to_string(options.max_default_period) +
                           "; pass an explicit shift list");
    }
    for (std::size_t e = 0; e < n; ++e) report.shifts.push_back(e);
  }
  report.pairs = select_pairs(n, report.shifts, options.max_pairs, options.seed);
  for (const auto& label : all_branch_labels()) report.branch_counts[label] = 0;
  auto count = [&](const CorrelationPrediction& pred) {
    for (const auto& label : pred.labels) ++report.branch_counts[label];
  };

  const CorrelationConstants constants = correlation_constants(ctx);
  const GeometricPair pair = geometric_pair(ctx);
  const BinarySequence& t1 = pair.type1;
  const BinarySequence& t2 = pair.type2;

  {
    Check c("least-period");
    c.expect_equal(sn, static_cast<std::int64_t>(least_period(t1)), "T1");
    c.expect_equal(sn, static_cast<std::int64_t>(least_period(t2)), "T2");
    report.checks.push_back(c.take());
  }
  {
    Check c("complement-shift");
    for (std::size_t i = 0; i < n; ++i) {
      c.expect_equal(t1[i + n / 2] ^ 1, t2[i], "n=" + std::to_string(i));
    }
    report.checks.push_back(c.take());
  }

  const auto r_t1 = brute(t1, t1);
  {
    Check c("type1-autocorrelation");
    const auto pred = predict_t1_autocorrelation(constants);
    count(pred);
    for (std::size_t tau = 0; tau < n; ++tau) {
      c.expect_equal(pred.values[tau], r_t1[tau], "tau=" + std::to_string(tau));
    }
    report.checks.push_back(c.take());
  }
  {
    Check c("type1-type2-cross");
    const auto r12 = brute(t1, t2);
    for (std::size_t tau = 0; tau < n; ++tau) {
      c.expect_equal(-r_t1[(tau + n / 2) % n], r12[tau], "tau=" + std::to_string(tau));
    }
    report.checks.push_back(c.take());
  }
  {
    Check c("type2-autocorrelation");
    const auto r_t2 = brute(t2, t2);
    for (std::size_t tau = 0; tau < n; ++tau) {
      c.expect_equal(r_t1[tau], r_t2[tau], "tau=" + std::to_string(tau));
    }
    report.checks.push_back(c.take());
  }
  {
    Check c("type-linear-complexity");
    c.expect_equal(sn, static_cast<std::int64_t>(berlekamp_massey(t1)), "T1");
    c.expect_equal(sn, static_cast<std::int64_t>(berlekamp_massey(t2)), "T2");
    report.checks.push_back(c.take());
  }
  {
    Check c("type1-balance");
    const std::uint64_t p = ctx.p();
    std::uint64_t q1 = 1;
    for (unsigned i = 1; i < ctx.m(); ++i) q1 *= p;
    const auto zeros = static_cast<std::int64_t>(q1 + 2 * (q1 - 1) / (p - 1));
    c.expect_equal(zeros, static_cast<std::int64_t>(t1.count_zeros()), "zeros");
    c.expect_equal(static_cast<std::int64_t>(q1), static_cast<std::int64_t>(t1.count_ones()), "ones");
    report.checks.push_back(c.take());
  }

  // Per-shift work: autocorrelation, decomposition, balance, linear complexity.
  const std::size_t count_shifts = report.shifts.size();
  std::vector<ShiftResult> per_shift(count_shifts);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(count_shifts); ++k) {
    auto& out = per_shift[static_cast<std::size_t>(k)];
    const std::size_t e = report.shifts[static_cast<std::size_t>(k)];
    try {
      const BinarySequence s = interleaved(pair, e);
      out.zeros = s.count_zeros();
      out.ones = s.count_ones();
      BinarySequence probe = s;
      if (options.fault_bit) {
        std::vector<std::uint8_t> bits(s.bits().begin(), s.bits().end());
        bits[*options.fault_bit % bits.size()] ^= 1;
        probe = BinarySequence(std::move(bits));
      }
      out.observed = brute(probe, probe);
      out.predicted = predict_se_autocorrelation(constants, static_cast<std::int64_t>(e));
      out.decomposed.resize(2 * n);
      for (std::size_t tau = 0; tau < 2 * n; ++tau) {
        out.decomposed[tau] = decompose_correlation(r_t1, static_cast<std::int64_t>(e),
                                               static_cast<std::int64_t>(e),
                                               static_cast<std::int64_t>(tau));
      }
    } catch (const std::exception& ex) {
      out.error = ex.what();
      continue;
    }
    try {
      out.lc = lc_report(ctx, pair, e);
    } catch (const std::exception& ex) {
      out.lc_error = ex.what();
    }
  }

  Check least("interleaved-least-period");
  Check balance("interleaved-balance");
  Check autocorr("interleaved-autocorrelation");
  Check decomposition("decomposition");
  Check complexity("linear-complexity");
  Check bounds("linear-complexity-bounds");
  const std::uint64_t odd_part = n >> nu2(n);
  for (std::size_t k = 0; k < count_shifts; ++k) {
    const std::size_t e = report.shifts[k];
    const auto& r = per_shift[k];
    if (!r.error.empty()) {
      least.fail("e=" + std::to_string(e) + ": " + r.error);
      continue;
    }
    least.expect(true, "", 0, 0);
    balance.expect_equal(sn, static_cast<std::int64_t>(r.zeros), "e=" + std::to_string(e) + " zeros");
    balance.expect_equal(sn, static_cast<std::int64_t>(r.ones), "e=" + std::to_string(e) + " ones");
    count(r.predicted);
    for (std::size_t tau = 0; tau < 2 * n; ++tau) {
      autocorr.expect_equal(r.predicted.values[tau], r.observed[tau], at(e, tau));
      decomposition.expect_equal(r.decomposed[tau], r.observed[tau], at(e, tau));
    }
    if (!r.lc) {
      complexity.fail(r.lc_error);
      continue;
    }
    const auto& lc = *r.lc;
    complexity.expect_equal(static_cast<std::int64_t>(lc.l_closed_form),
                            static_cast<std::int64_t>(lc.l_berlekamp_massey), "e=" + std::to_string(e));
    bounds.expect(lc.l_closed_form <= 2 * n - 1 && lc.l_closed_form >= 2 * n - odd_part,
                  "e=" + std::to_string(e), static_cast<std::int64_t>(2 * n - 1),
                  static_cast<std::int64_t>(lc.l_closed_form));
    const bool lower = (lc.l_closed_form == 2 * n - odd_part);
    const bool lower_condition = residue(1 - 2 * static_cast<std::int64_t>(e),
                                         static_cast<std::int64_t>(odd_part)) == 0;
    bounds.expect(lower == lower_condition, "e=" + std::to_string(e) + " lower-bound attainment",
                  lower_condition, lower);
    bounds.expect((lc.l_closed_form == 2 * n - 1) == (lc.g == 1),
                  "e=" + std::to_string(e) + " upper-bound attainment", 1,
                  static_cast<std::int64_t>(lc.g));
    bounds.expect_equal(static_cast<std::int64_t>(lc.g),
                        static_cast<std::int64_t>(g_of_gcd_form(n, e)),
                        "e=" + std::to_string(e) + " G gcd form");
  }
  report.checks.push_back(least.take());
  report.checks.push_back(balance.take());
  report.checks.push_back(autocorr.take());

  // Cross-correlation of selected pairs.
  struct PairResult {
    std::vector<std::int64_t> observed;
    CorrelationPrediction predicted;
    std::string error;
  };
  std::vector<PairResult> per_pair(report.pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(report.pairs.size()); ++k) {
    auto& out = per_pair[static_cast<std::size_t>(k)];
    const auto [e1, e2] = report.pairs[static_cast<std::size_t>(k)];
    try {
      out.observed = brute(interleaved(pair, e1), interleaved(pair, e2));
      out.predicted = predict_cross_correlation(constants, static_cast<std::int64_t>(e1),
                                                static_cast<std::int64_t>(e2));
    } catch (const std::exception& ex) {
      out.error = ex.what();
    }
  }
  Check cross("interleaved-cross-correlation");
  for (std::size_t k = 0; k < report.pairs.size(); ++k) {
    const auto [e1, e2] = report.pairs[k];
    const auto& r = per_pair[k];
    if (!r.error.empty()) {
      cross.fail("e1=" + std::to_string(e1) + " e2=" + std::to_string(e2) + ": " + r.error);
      continue;
    }
    count(r.predicted);
    for (std::size_t tau = 0; tau < 2 * n; ++tau) {
      const auto where = at_pair(e1, e2, tau);
      cross.expect_equal(r.predicted.values[tau], r.observed[tau], where);
      decomposition.expect_equal(
          decompose_correlation(r_t1, static_cast<std::int64_t>(e1), static_cast<std::int64_t>(e2),
                           static_cast<std::int64_t>(tau)),
          r.observed[tau], where);
    }
  }
  report.checks.push_back(cross.take());
  report.checks.push_back(decomposition.take());
  report.checks.push_back(complexity.take());
  report.checks.push_back(bounds.take());
  return report;
}

}  // namespace legseq
