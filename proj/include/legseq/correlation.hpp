#pragma once

// Brute-force periodic correlation of generated sequences and the closed-form
// predictions for T1, S^e and pairs (S^e1, S^e2).
//
// Branch labels are part of the stable report schema. Each prediction entry
// carries the label of the case that produced it:
//
//   t1/N  t1/N1  t1/N2                         autocorrelation of T1 (and T2)
//   auto/even/{2N,2N1,2N2}                     S^e, tau = 2 tau0
//   auto/odd/{-N-N2,-N1-N2,-2N2}               S^e, tau odd, 2e != 1 - N/2
//   auto/odd-merged/{-N-N1,-2N2}               S^e, tau odd, 2e == 1 - N/2
//   cross/even/{N+N2,N1+N2,2N2}                e2 - e1 != N/2
//   cross/even-half/{N+N1,2N2}                 e2 - e1 == N/2
//   cross/odd/{-N-N2,-N1-N2,-2N2}              e1 + e2 != 1, 1 - N/2
//   cross/odd-sum1/{-2N,-2N1,-2N2}             e1 + e2 == 1
//   cross/odd-sumhalf/{-N-N1,-2N2}             e1 + e2 == 1 - N/2
//
// (all congruences mod N)

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "legseq/finite_field.hpp"
#include "legseq/sequence.hpp"

namespace legseq {

enum class CorrelationKind { autocorrelation, cross };

enum class CorrelationKernel { reference, parallel, packed };

struct CorrelationProfile {
  std::vector<std::int64_t> values;  // indexed by tau in [0, period)
  CorrelationKind kind = CorrelationKind::cross;
  std::string lhs_id;
  std::string rhs_id;
};

struct CorrelationPrediction {
  std::vector<std::int64_t> values;
  std::vector<std::string> labels;
};

/// N, N1 = -2p^(m-1) + 2(p^(m-1) - 1)/(p - 1), N2 = 2(p^(m-2) - 1)/(p - 1).
struct CorrelationConstants {
  std::int64_t n;
  std::int64_t n1;
  std::int64_t n2;
};

CorrelationConstants correlation_constants(std::uint64_t p, unsigned m);
CorrelationConstants correlation_constants(const FieldContext& ctx);

/// Periodic correlation; kind is autocorrelation when a == b.
/// Throws ParameterError on a period mismatch.
CorrelationProfile correlate(const BinarySequence& a, const BinarySequence& b,
                             CorrelationKernel kernel = CorrelationKernel::packed);
/// Generates both sequences and labels the profile with their ids.
CorrelationProfile correlate(const FieldContext& ctx, const SequenceKind& lhs,
                             const SequenceKind& rhs,
                             CorrelationKernel kernel = CorrelationKernel::packed);

CorrelationPrediction predict_t1_autocorrelation(const CorrelationConstants& c);
CorrelationPrediction predict_t1_autocorrelation(const FieldContext& ctx);

/// Requires 0 <= e < N.
CorrelationPrediction predict_se_autocorrelation(const CorrelationConstants& c, std::int64_t e);
CorrelationPrediction predict_se_autocorrelation(const FieldContext& ctx, std::int64_t e);

/// Requires 0 <= e1 < e2 < N.
CorrelationPrediction predict_cross_correlation(const CorrelationConstants& c, std::int64_t e1,
                                                std::int64_t e2);
CorrelationPrediction predict_cross_correlation(const FieldContext& ctx, std::int64_t e1,
                                                std::int64_t e2);

/// R_{S^e1,S^e2}(tau) rebuilt from the autocorrelation of T1:
///   tau = 2t:     R_T1(t) + R_T1(e2 - e1 + t)
///   tau = 2t + 1: -R_T1(e2 + t + N/2) - R_T1(e1 - t - 1 + N/2)
/// with every argument reduced mod N. e1, e2 in [0, N), tau in [0, 2N).
std::int64_t decompose_correlation(std::span<const std::int64_t> t1_autocorrelation, std::int64_t e1,
                              std::int64_t e2, std::int64_t tau);
/// Same, computing R_T1 by brute force.
std::int64_t decompose_correlation(const FieldContext& ctx, std::int64_t e1, std::int64_t e2,
                              std::int64_t tau);

/// All labels the predictors can emit, in schema order.
const std::vector<std::string>& all_branch_labels();

/// Least nonnegative residue of a mod n (n > 0).
std::int64_t residue(std::int64_t a, std::int64_t n);

}  // namespace legseq
