#pragma once

// Linear complexity of S^e three ways: the closed form 2N - G(N, e), the
// minimal polynomial (x^P + 1) / gcd(x^P + 1, S(x)), and Berlekamp-Massey on
// two periods. Over F_2, x^P - 1 and x^P + 1 are the same polynomial.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "legseq/finite_field.hpp"
#include "legseq/gf2_poly.hpp"
#include "legseq/sequence.hpp"

namespace legseq {

/// Exponent of the largest power of two dividing n. Throws for n < 1.
unsigned nu2(std::uint64_t n);

/// G(N, e) = gcd(M, (1 - 2e) underline-mod M) with M = N / 2^nu2(N).
/// When M = 1 the gcd is 1.
std::uint64_t g_of(std::uint64_t n, std::uint64_t e);

/// gcd(2N, 3N - 2e + 1); always equal to g_of.
std::uint64_t g_of_gcd_form(std::uint64_t n, std::uint64_t e);

struct MinimalPolynomial {
  Gf2Poly polynomial;         // m(x)
  Gf2Poly gcd;                // gcd(x^P + 1, S(x))
  std::size_t linear_complexity;
};

/// All-zero input gives m(x) = 1, L = 0.
MinimalPolynomial minimal_poly_gcd(const BinarySequence& s);

/// Shortest LFSR length for `bits`, which must hold at least two periods of a
/// `period`-periodic sequence. Throws ParameterError otherwise.
std::size_t berlekamp_massey(std::span<const std::uint8_t> bits, std::size_t period);
/// Runs on exactly two periods of s.
std::size_t berlekamp_massey(const BinarySequence& s);

struct LinearComplexityReport {
  std::uint64_t p = 0;
  unsigned m = 0;
  std::size_t e = 0;
  std::size_t n = 0;  // N; the sequence period is 2N
  unsigned nu2_n = 0;
  std::uint64_t g = 0;
  std::size_t l_closed_form = 0;
  std::size_t l_gcd_method = 0;
  std::size_t l_berlekamp_massey = 0;
  Gf2Poly minimal_poly;
  bool agreement = false;
};

/// Throws VerificationError if the methods disagree or m(x) differs from
/// (x^2N + 1) / (x^G + 1).
LinearComplexityReport lc_report(const FieldContext& ctx, const GeometricPair& pair, std::size_t e);
LinearComplexityReport lc_report(const FieldContext& ctx, std::size_t e);

/// lc_report for every e in `shifts`, evaluated in parallel. The first error
/// (in shift order) is rethrown.
std::vector<LinearComplexityReport> lc_sweep(const FieldContext& ctx,
                                             std::span<const std::size_t> shifts);

}  // namespace legseq
