#include "legseq/complexity.hpp"

#include <exception>
#include <numeric>
#include <string>

#include "legseq/errors.hpp"

namespace legseq {

unsigned nu2(std::uint64_t n) {
  if (n < 1) throw ParameterError("nu2 needs n >= 1");
  unsigned k = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++k;
  }
  return k;
}

std::uint64_t g_of(std::uint64_t n, std::uint64_t e) {
  if (n == 0 || n % 2 != 0) throw ParameterError("G(N, e) needs an even N");
  if (e >= n) throw ParameterError("G(N, e) needs 0 <= e < N");
  const std::uint64_t odd = n >> nu2(n);
  if (odd == 1) return 1;
  const auto rep = underline_mod(1 - 2 * static_cast<std::int64_t>(e), static_cast<std::int64_t>(odd));
  return std::gcd(odd, static_cast<std::uint64_t>(rep));
}

std::uint64_t g_of_gcd_form(std::uint64_t n, std::uint64_t e) {
  if (e >= n) throw ParameterError("G(N, e) needs 0 <= e < N");
  return std::gcd(2 * n, 3 * n - 2 * e + 1);
}

MinimalPolynomial minimal_poly_gcd(const BinarySequence& s) {
  const std::size_t period = s.period();
  const Gf2Poly modulus = xn_minus_1(period);
  const Gf2Poly series = Gf2Poly::from_bits(s.bits());
  if (series.is_zero()) return {Gf2Poly::monomial(0), modulus, 0};

  Gf2Poly common = gcd(modulus, series);
  const auto split = divmod(modulus, common);
  const std::size_t common_degree = common.degree().value_or(0);
  return {split.quotient, std::move(common), period - common_degree};
}

std::size_t berlekamp_massey(std::span<const std::uint8_t> bits, std::size_t period) {
  if (period == 0 || bits.size() < 2 * period) {
    throw ParameterError("Berlekamp-Massey needs at least two full periods");
  }
  const std::size_t n = bits.size();
  std::vector<std::uint8_t> current(n + 1, 0);   // connection polynomial C(x)
  std::vector<std::uint8_t> previous(n + 1, 0);  // B(x)
  current[0] = previous[0] = 1;
  std::size_t length = 0;
  std::size_t gap = 1;  // i - index of last length change

  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t discrepancy = bits[i];
    for (std::size_t j = 1; j <= length; ++j) discrepancy ^= current[j] & bits[i - j];
    if (discrepancy == 0) {
      ++gap;
      continue;
    }
    if (2 * length <= i) {
      const std::vector<std::uint8_t> saved = current;
      for (std::size_t j = 0; j + gap <= n; ++j) current[j + gap] ^= previous[j];
      length = i + 1 - length;
      previous = saved;
      gap = 1;
    } else {
      for (std::size_t j = 0; j + gap <= n; ++j) current[j + gap] ^= previous[j];
      ++gap;
    }
  }
  return length;
}

std::size_t berlekamp_massey(const BinarySequence& s) {
  const auto two_periods = s.unrolled(2);
  return berlekamp_massey(two_periods, s.period());
}

LinearComplexityReport lc_report(const FieldContext& ctx, const GeometricPair& pair, std::size_t e) {
  const BinarySequence s = interleaved(pair, e);
  const std::size_t n = ctx.period();

  LinearComplexityReport r;
  r.p = ctx.p();
  r.m = ctx.m();
  r.e = e;
  r.n = n;
  r.nu2_n = nu2(n);
  r.g = g_of(n, e);
  r.l_closed_form = 2 * n - r.g;

  MinimalPolynomial mp = minimal_poly_gcd(s);
  r.l_gcd_method = mp.linear_complexity;
  r.l_berlekamp_massey = berlekamp_massey(s);
  r.minimal_poly = mp.polynomial;
  r.agreement = r.l_closed_form == r.l_gcd_method && r.l_gcd_method == r.l_berlekamp_massey;

  const std::string where = "e = " + std::to_string(e) + ": ";
  if (!r.agreement) {
    throw VerificationError(where + "linear complexity disagreement (closed form " +
                            std::to_string(r.l_closed_form) + ", gcd " +
                            std::to_string(r.l_gcd_method) + ", Berlekamp-Massey " +
                            std::to_string(r.l_berlekamp_massey) + ")");
  }
  if (r.minimal_poly.degree() != r.l_gcd_method) {
    throw VerificationError(where + "minimal polynomial degree differs from L");
  }
  const auto expected = divmod(xn_minus_1(2 * n), xn_minus_1(r.g));
  if (!expected.remainder.is_zero() || expected.quotient != r.minimal_poly) {
    throw VerificationError(where + "minimal polynomial differs from (x^2N + 1)/(x^G + 1)");
  }
  if (mp.polynomial * mp.gcd != xn_minus_1(2 * n)) {
    throw VerificationError(where + "m(x) * gcd != x^2N + 1");
  }
  return r;
}

LinearComplexityReport lc_report(const FieldContext& ctx, std::size_t e) {
  return lc_report(ctx, geometric_pair(ctx), e);
}

std::vector<LinearComplexityReport> lc_sweep(const FieldContext& ctx,
                                             std::span<const std::size_t> shifts) {
  const GeometricPair pair = geometric_pair(ctx);
  std::vector<LinearComplexityReport> out(shifts.size());
  std::vector<std::exception_ptr> errors(shifts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(shifts.size()); ++k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      out[i] = lc_report(ctx, pair, shifts[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return out;
}

}  // namespace legseq
