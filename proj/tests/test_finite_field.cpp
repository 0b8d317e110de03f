#include <doctest.h>

#include <set>

#include "legseq/errors.hpp"
#include "legseq/finite_field.hpp"
#include "oracles.hpp"

using namespace legseq;

namespace {

// Monic polynomials of degree d over GF(p), constant term first.
std::vector<PrimePoly> monic_polys(std::uint64_t p, unsigned d) {
  std::vector<PrimePoly> out;
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    PrimePoly f(d + 1, 0);
    f[d] = 1;
    std::uint64_t r = idx;
    for (unsigned i = 0; i < d; ++i) {
      f[i] = r % p;
      r /= p;
    }
    out.push_back(f);
  }
  return out;
}

bool divides(const PrimePoly& g, PrimePoly f, std::uint64_t p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t k = f.size(); k-- > dg;) {
    const Coeff c = f[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dg; ++i) f[k - dg + i] = (f[k - dg + i] + p * p - c * g[i]) % p;
  }
  for (std::size_t i = 0; i < dg; ++i)
    if (f[i] != 0) return false;
  return true;
}

// Trial division by every monic polynomial of degree 1..m/2.
bool irreducible_by_trial(std::uint64_t p, const PrimePoly& f) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= m / 2; ++d)
    for (const auto& g : monic_polys(p, d))
      if (divides(g, f, p)) return false;
  return true;
}

}  // namespace

TEST_CASE("primes and factors") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK(is_prime(2147483647ULL));
  CHECK(prime_factors(24) == std::vector<std::uint64_t>{2, 3});
  CHECK(prime_factors(124) == std::vector<std::uint64_t>{2, 31});
  CHECK(prime_factors(1) == std::vector<std::uint64_t>{});
  CHECK(pow_mod(3, 4, 5) == 1);
  CHECK(pow_mod(0, 0, 7) == 1);
}

TEST_CASE("legendre symbol") {
  CHECK(legendre(5, 0) == 0);
  CHECK(legendre(5, 1) == 1);
  CHECK(legendre(5, 4) == 1);
  CHECK(legendre(5, 2) == -1);
  CHECK(legendre(5, 3) == -1);
  CHECK(legendre(7, -1) == -1);
  CHECK(legendre(13, -1) == 1);
  CHECK_THROWS_AS(legendre(4, 1), ParameterError);
  CHECK_THROWS_AS(legendre(2, 1), ParameterError);

  for (std::uint64_t p = 3; p <= 101; p += 2) {
    if (!is_prime(p)) continue;
    const auto sp = static_cast<long long>(p);
    int sum = 0;
    for (long long a = 0; a < sp; ++a) {
      CHECK(legendre(p, a) == oracle::chi(a, sp));
      sum += legendre(p, a);
      for (long long b = 1; b < sp; b += 7) CHECK(legendre(p, a * b) == legendre(p, a) * legendre(p, b));
    }
    CHECK(sum == 0);
  }
}

TEST_CASE("underline mod") {
  CHECK(underline_mod(7, 7) == 7);
  CHECK(underline_mod(0, 3) == 3);
  CHECK(underline_mod(-7, 3) == 2);
  CHECK(underline_mod(-31, 31) == 31);
  CHECK(underline_mod(5, 3) == 2);
  CHECK_THROWS_AS(underline_mod(5, 1), ParameterError);
}

TEST_CASE("irreducibility agrees with trial division") {
  for (const std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
    for (unsigned m = 2; m <= 4; ++m) {
      if (p == 7 && m == 4) continue;
      for (const auto& f : monic_polys(p, m)) CHECK(is_irreducible(p, f) == irreducible_by_trial(p, f));
    }
  }
  // x^2 + 1 over GF(5) has roots 2 and 3
  CHECK_FALSE(is_irreducible(5, {1, 0, 1}));
  CHECK(is_irreducible(5, {3, 2, 1}));
  CHECK(is_irreducible(3, {1, 0, 2, 1}));
  CHECK(is_irreducible(11, {2, 7, 1}));
  CHECK(is_irreducible(5, {3, 2, 3, 1}));
}

TEST_CASE("lexicographic search picks the first irreducible") {
  for (const auto& inst : oracle::grid()) {
    const PrimePoly f = find_irreducible(inst.p, inst.m);
    CHECK(irreducible_by_trial(inst.p, f));
    for (const auto& g : monic_polys(inst.p, inst.m)) {
      // c0 most significant: compare (c0, c1, ..., c_{m-1}) lexicographically
      const bool earlier = std::lexicographical_compare(g.begin(), g.end() - 1, f.begin(), f.end() - 1);
      if (earlier && g[0] != 0) CHECK_FALSE(irreducible_by_trial(inst.p, g));
    }
  }
  CHECK(find_irreducible(3, 2) == PrimePoly{1, 0, 1});
  CHECK(find_irreducible(5, 2) == PrimePoly{1, 1, 1});
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(ExtensionField::create(5, 2, {1, 0, 1}), FieldConstructionError);
  CHECK_THROWS_AS(ExtensionField::create(5, 2, {3, 2}), ParameterError);
  CHECK_THROWS_AS(ExtensionField::create(5, 2, {3, 2, 2}), ParameterError);
  CHECK_THROWS_AS(ExtensionField::create(5, 2, {3, 7, 1}), ParameterError);
  CHECK_THROWS_AS(ExtensionField::create(4, 2, {1, 1, 1}), ParameterError);
  CHECK_THROWS_AS(ExtensionField::create(5, 1, {1, 1}), ParameterError);
  FieldLimits tight;
  tight.max_order = 100;
  CHECK_THROWS_AS(ExtensionField::create(5, 3, {3, 2, 3, 1}, tight), ParameterError);
  CHECK_NOTHROW(ExtensionField::create(5, 2, {3, 2, 1}, tight));
}

TEST_CASE("field axioms on small fields") {
  for (const auto& inst : oracle::grid()) {
    if (inst.p == 5 && inst.m == 3) continue;
    const auto field = ExtensionField::create(inst.p, inst.m, find_irreducible(inst.p, inst.m));
    CHECK(field.order() == static_cast<std::uint64_t>(oracle::ipow(static_cast<long long>(inst.p), inst.m)));
    std::set<std::vector<Coeff>> seen;
    for (std::uint64_t i = 1; i < field.order(); ++i) {
      const auto a = field.from_index(i);
      seen.insert(a.coeffs);
      const auto inv = field.inverse(a);
      CHECK(field.mul(a, inv) == field.one());
      CHECK(field.trace(field.frobenius(a)) == field.trace(a));
      CHECK(field.trace(a) == static_cast<Coeff>(oracle::trace(
                                  oracle::Poly(a.coeffs.begin(), a.coeffs.end()), field.modulus(),
                                  static_cast<long long>(inst.p))));
      CHECK(field.sub(field.add(a, a), a) == a);
    }
    CHECK(seen.size() == field.order() - 1);
    CHECK_THROWS_AS(field.inverse(field.zero()), ParameterError);
  }
}

TEST_CASE("trace form matches conjugate sum") {
  const auto field = ExtensionField::create(5, 3, {3, 2, 3, 1});
  const TraceForm tr(field);
  for (std::uint64_t i = 0; i < field.order(); ++i) {
    const auto a = field.from_index(i);
    CHECK(tr(a) == field.trace(a));
  }
  CHECK(tr.basis_traces().size() == 3);
}

TEST_CASE("primitive elements") {
  const auto field = ExtensionField::create(5, 2, {3, 2, 1});
  CHECK(is_primitive(field, field.element({0, 4})));
  CHECK_FALSE(is_primitive(field, field.one()));
  CHECK_FALSE(is_primitive(field, field.zero()));

  // order of w by walking powers
  for (std::uint64_t i = 1; i < field.order(); ++i) {
    const auto w = field.from_index(i);
    std::uint64_t order = 1;
    for (auto x = w; !(x == field.one()); x = field.mul(x, w)) ++order;
    CHECK(is_primitive(field, w) == (order == field.order() - 1));
  }

  const auto f3 = ExtensionField::create(3, 3, {1, 0, 2, 1});
  CHECK(is_primitive(f3, f3.element({0, 0, 2})));
}

TEST_CASE("field context") {
  const auto ctx = FieldContext::create(5, 2, PrimePoly{3, 2, 1}, std::vector<Coeff>{0, 4});
  CHECK(ctx.period() == 12);
  CHECK(ctx.p() == 5);
  CHECK(ctx.m() == 2);
  CHECK(ctx.modulus() == PrimePoly{3, 2, 1});
  CHECK(ctx.omega().coeffs == std::vector<Coeff>{0, 4});

  for (const auto& fp : oracle::fixed_pairs()) {
    CHECK_NOTHROW(FieldContext::create(fp.inst.p, fp.inst.m, fp.f, fp.omega));
  }
  CHECK_THROWS_AS(FieldContext::create(5, 2, PrimePoly{3, 2, 1}, std::vector<Coeff>{1, 0}),
                  FieldConstructionError);
  CHECK_THROWS_AS(FieldContext::create(5, 2, PrimePoly{1, 0, 1}, std::nullopt), FieldConstructionError);
  CHECK_THROWS_AS(FieldContext::create(5, 2, PrimePoly{3, 2, 1}, std::vector<Coeff>{0, 4, 1}),
                  ParameterError);
  CHECK_THROWS_AS(FieldContext::create(5, 2, std::nullopt, std::vector<Coeff>{0, 5}), ParameterError);

  // deterministic defaults
  for (const auto& inst : oracle::grid()) {
    const auto a = FieldContext::create(inst.p, inst.m, std::nullopt, std::nullopt);
    const auto b = FieldContext::create(inst.p, inst.m, std::nullopt, std::nullopt);
    CHECK(a.modulus() == b.modulus());
    CHECK(a.omega() == b.omega());
    CHECK(a.period() == static_cast<std::size_t>(oracle::period_n(inst.p, inst.m)));
    // omega^(N/2) generates GF(p)^*
    const auto h = a.field().pow(a.omega(), a.period() / 2);
    for (unsigned i = 1; i < inst.m; ++i) CHECK(h.coeffs[i] == 0);
    std::uint64_t order = 1;
    for (std::uint64_t x = h.coeffs[0]; x != 1; x = x * h.coeffs[0] % inst.p) ++order;
    CHECK(order == inst.p - 1);
  }
}
