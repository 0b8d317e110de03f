#pragma once

// Text formats shared by the CLI and tests:
//   coefficient lists  "3,2,1"  (constant term first; x^2 + 2x + 3)
//   bits               one period as ASCII '0'/'1' followed by a newline
//   hex                one period packed 8 bits per byte, sequence bit 8k+j
//                      at bit j of byte k, bytes as lowercase hex pairs
//   correlation CSV    header "tau,value,predicted,branch"
//   JSON reports       key order is fixed, so equal inputs give equal bytes

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "legseq/complexity.hpp"
#include "legseq/correlation.hpp"
#include "legseq/finite_field.hpp"
#include "legseq/sequence.hpp"
#include "legseq/verify.hpp"

namespace legseq {

/// Throws ParameterError on anything but comma-separated non-negative integers.
std::vector<Coeff> parse_coefficients(std::string_view text);
std::string format_coefficients(const std::vector<Coeff>& coeffs);

/// Comma-separated shifts, with optional a-b ranges ("0,3,5-9").
std::vector<std::size_t> parse_shift_list(std::string_view text);

std::string format_bits(const BinarySequence& s);
std::string format_hex(const BinarySequence& s);
/// Inverse of format_hex for a known period.
BinarySequence parse_hex(std::string_view hex, std::size_t period);

/// What the correlation report describes, echoed in its parameters block.
struct CorrelationSubject {
  std::string lhs;                  // e.g. "S^4"
  std::string rhs;
  std::optional<std::size_t> e;     // autocorrelation of S^e
  std::optional<std::size_t> e1;    // cross-correlation
  std::optional<std::size_t> e2;
  bool swapped = false;             // caller's pair was reversed
};

bool prediction_matches(const CorrelationProfile& observed, const CorrelationPrediction& predicted);

std::string correlation_csv(const CorrelationProfile& observed, const CorrelationPrediction& predicted);
std::string correlation_json(const FieldContext& ctx, const CorrelationSubject& subject,
                             const CorrelationProfile& observed,
                             const CorrelationPrediction& predicted);

std::string complexity_json(const LinearComplexityReport& report);
std::string complexity_json(const std::vector<LinearComplexityReport>& reports);
std::string complexity_csv(const std::vector<LinearComplexityReport>& reports);

std::string field_info_json(const FieldContext& ctx);
std::string verify_json(const FieldContext& ctx, const VerifyReport& report);

}  // namespace legseq
