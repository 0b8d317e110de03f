#include <doctest.h>

#include <numeric>
#include <random>

#include "legseq/complexity.hpp"
#include "legseq/errors.hpp"
#include "oracles.hpp"

using namespace legseq;

TEST_CASE("nu2 and G") {
  CHECK(nu2(24) == 3);
  CHECK(nu2(62) == 1);
  CHECK(nu2(31) == 0);
  CHECK_THROWS_AS(nu2(0), ParameterError);

  CHECK(g_of(24, 2) == 3);
  CHECK(g_of(24, 0) == 1);
  CHECK(g_of(62, 16) == 31);
  CHECK(g_of(62, 47) == 31);
  CHECK(g_of(8, 3) == 1);
  CHECK_THROWS_AS(g_of(24, 24), ParameterError);
  CHECK_THROWS_AS(g_of(25, 0), ParameterError);

  for (const auto& inst : oracle::grid()) {
    const auto n = static_cast<std::uint64_t>(oracle::period_n(inst.p, inst.m));
    for (std::uint64_t e = 0; e < n; ++e) CHECK(g_of(n, e) == g_of_gcd_form(n, e));
  }
  for (std::uint64_t n = 2; n <= 200; n += 2)
    for (std::uint64_t e = 0; e < n; ++e) CHECK(g_of(n, e) == g_of_gcd_form(n, e));
}

TEST_CASE("berlekamp-massey against the recurrence oracle") {
  std::vector<std::uint8_t> alt{1, 0, 1, 0};
  CHECK(berlekamp_massey(alt, 2) == 2);
  std::vector<std::uint8_t> zeros(10, 0);
  CHECK(berlekamp_massey(zeros, 5) == 0);
  CHECK_THROWS_AS(berlekamp_massey(alt, 3), ParameterError);

  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t period = 1 + rng() % 40;
    std::vector<std::uint8_t> bits(period);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);
    const BinarySequence s(bits);
    const std::size_t expected = oracle::linear_complexity(bits);
    CHECK(berlekamp_massey(s) == expected);
    CHECK(minimal_poly_gcd(s).linear_complexity == expected);
  }
}

TEST_CASE("minimal polynomial by gcd") {
  const BinarySequence ones(std::vector<std::uint8_t>(7, 1));
  const auto m1 = minimal_poly_gcd(ones);
  CHECK(m1.polynomial == Gf2Poly::from_exponents({0, 1}));
  CHECK(m1.linear_complexity == 1);

  const BinarySequence alt(std::vector<std::uint8_t>{1, 0});
  const auto m2 = minimal_poly_gcd(alt);
  CHECK(m2.polynomial == Gf2Poly::from_exponents({0, 2}));
  CHECK(m2.linear_complexity == 2);

  const BinarySequence zero(std::vector<std::uint8_t>(6, 0));
  const auto m0 = minimal_poly_gcd(zero);
  CHECK(m0.polynomial == Gf2Poly::monomial(0));
  CHECK(m0.linear_complexity == 0);

  const auto ctx = FieldContext::create(5, 2, PrimePoly{3, 2, 1}, std::vector<Coeff>{0, 4});
  const auto s4 = gen_se(ctx, 4);
  const auto m = minimal_poly_gcd(s4);
  // N = 12 here, so G(12, 4) = gcd(3, 2) = 1 and L = 2N - 1
  CHECK(m.linear_complexity == 23);
  CHECK(oracle::linear_complexity({s4.bits().begin(), s4.bits().end()}) == 23);
  CHECK(m.polynomial * m.gcd == xn_minus_1(24));
}

TEST_CASE("closed form on the worked examples") {
  const auto c11 = FieldContext::create(11, 2, PrimePoly{2, 7, 1}, std::vector<Coeff>{9, 2});
  for (std::size_t e = 0; e < 24; ++e) {
    const auto r = lc_report(c11, e);
    CHECK(r.l_closed_form == (e % 3 == 2 ? 45u : 47u));
    CHECK(r.agreement);
    CHECK(r.nu2_n == 3);
  }
  const auto c53 = FieldContext::create(5, 3, PrimePoly{3, 2, 3, 1}, std::vector<Coeff>{1, 1, 2});
  std::vector<std::size_t> shifts(62);
  std::iota(shifts.begin(), shifts.end(), 0);
  for (const auto& r : lc_sweep(c53, shifts)) {
    CHECK(r.l_closed_form == ((r.e == 16 || r.e == 47) ? 93u : 123u));
    CHECK(r.l_gcd_method == r.l_closed_form);
    CHECK(r.l_berlekamp_massey == r.l_closed_form);
  }
  CHECK_THROWS_AS(lc_report(c53, 62), ParameterError);
}

TEST_CASE("bounds and the recurrence oracle on the grid") {
  for (const auto& inst : oracle::grid()) {
    const auto ctx = FieldContext::create(inst.p, inst.m, std::nullopt, std::nullopt);
    const auto pair = geometric_pair(ctx);
    const std::size_t n = ctx.period();
    const std::size_t odd = n >> nu2(n);
    for (std::size_t e = 0; e < n; ++e) {
      const auto r = lc_report(ctx, pair, e);
      CHECK(r.l_closed_form >= 2 * n - odd);
      CHECK(r.l_closed_form <= 2 * n - 1);
      CHECK((r.l_closed_form == 2 * n - 1) == (r.g == 1));
      const auto lower = static_cast<std::int64_t>(1) - 2 * static_cast<std::int64_t>(e);
      CHECK((r.l_closed_form == 2 * n - odd) == (((lower % static_cast<std::int64_t>(odd)) + static_cast<std::int64_t>(odd)) % static_cast<std::int64_t>(odd) == 0));
      CHECK(r.minimal_poly == divmod(xn_minus_1(2 * n), xn_minus_1(r.g)).quotient);
      if (n <= 30 || e % 9 == 0) {
        const auto s = interleaved(pair, e);
        CHECK(oracle::linear_complexity({s.bits().begin(), s.bits().end()}) == r.l_closed_form);
      }
    }
    const std::vector<std::uint8_t> t1(pair.type1.bits().begin(), pair.type1.bits().end());
    const std::vector<std::uint8_t> t2(pair.type2.bits().begin(), pair.type2.bits().end());
    CHECK(berlekamp_massey(pair.type1) == n);
    CHECK(berlekamp_massey(pair.type2) == n);
    CHECK(oracle::linear_complexity(t1) == n);
    CHECK(oracle::linear_complexity(t2) == n);
  }
}
