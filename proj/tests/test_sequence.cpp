#include <doctest.h>

#include <string>

#include "legseq/errors.hpp"
#include "legseq/sequence.hpp"
#include "oracles.hpp"

using namespace legseq;

namespace {

BinarySequence from_string(const std::string& s) {
  std::vector<std::uint8_t> bits;
  for (const char c : s) bits.push_back(static_cast<std::uint8_t>(c - '0'));
  return BinarySequence(bits);
}

std::string to_bits(const BinarySequence& s) {
  std::string out;
  for (const auto b : s.bits()) out.push_back(static_cast<char>('0' + b));
  return out;
}

FieldContext fixed(std::size_t i) {
  const auto& fp = oracle::fixed_pairs().at(i);
  return FieldContext::create(fp.inst.p, fp.inst.m, fp.f, fp.omega);
}

}  // namespace

TEST_CASE("binary sequence basics") {
  CHECK_THROWS_AS(BinarySequence(std::vector<std::uint8_t>{}), ParameterError);
  CHECK_THROWS_AS(BinarySequence(std::vector<std::uint8_t>{0, 2}), ParameterError);
  const auto s = from_string("0110");
  CHECK(s.period() == 4);
  CHECK(s[5] == 1);
  CHECK(s.count_ones() == 2);
  CHECK(s.unrolled(2) == std::vector<std::uint8_t>{0, 1, 1, 0, 0, 1, 1, 0});
  CHECK(least_period(from_string("010101")) == 2);
  CHECK(least_period(from_string("000")) == 1);
  CHECK(least_period(from_string("0110")) == 4);
}

TEST_CASE("shift, interleave, deinterleave") {
  CHECK(to_bits(left_shift(from_string("111101000110"), 4)) == "010001101111");
  CHECK_THROWS_AS(left_shift(from_string("0110"), 4), ParameterError);

  const std::vector<BinarySequence> fam{from_string("0011"), from_string("0101"), from_string("1111")};
  const auto u = interleave(fam);
  CHECK(to_bits(u) == "001011101111");
  CHECK(deinterleave(u, 3) == fam);
  const std::vector<BinarySequence> bad{from_string("01"), from_string("011")};
  CHECK_THROWS_AS(interleave(bad), ParameterError);
  CHECK_THROWS_AS(deinterleave(u, 5), ParameterError);
}

TEST_CASE("worked examples") {
  const auto c1 = fixed(0);
  CHECK(to_bits(gen_t1(c1)) == "111001000010");
  CHECK(to_bits(gen_t2(c1)) == "111101000110");
  CHECK(to_bits(gen_se(c1, 4)) == "101110000011010001011101");

  const auto c2 = fixed(1);
  CHECK(to_bits(gen_t1(c2)) == "01011000111010000000100010");
  CHECK(to_bits(gen_t2(c2)) == "11111110111011010011100010");
  CHECK(to_bits(gen_se(c2, 17)) == "0011011110000001101111011101010100010101100101001100");

  CHECK(to_string(Type1{}) == "T1");
  CHECK(to_string(Interleaved{17}) == "S^17");
  CHECK(generate(c2, Interleaved{17}) == gen_se(c2, 17));
  CHECK_THROWS_AS(gen_se(c1, 12), ParameterError);
}

TEST_CASE("generator agrees with the oracle") {
  std::vector<FieldContext> contexts;
  for (const auto& inst : oracle::grid()) contexts.push_back(FieldContext::create(inst.p, inst.m, std::nullopt, std::nullopt));
  for (std::size_t i = 0; i < oracle::fixed_pairs().size(); ++i) contexts.push_back(fixed(i));

  for (const auto& ctx : contexts) {
    CAPTURE(ctx.p());
    CAPTURE(ctx.m());
    const auto pair = geometric_pair(ctx);
    const auto ref = oracle::geometric(ctx.p(), ctx.modulus(), ctx.omega().coeffs);
    REQUIRE(std::vector<std::uint8_t>(pair.type1.bits().begin(), pair.type1.bits().end()) == ref.t1);
    REQUIRE(std::vector<std::uint8_t>(pair.type2.bits().begin(), pair.type2.bits().end()) == ref.t2);

    const std::size_t n = ctx.period();
    // type 2 is type 1 shifted by half a period and complemented
    for (std::size_t k = 0; k < n; ++k) CHECK(pair.type2[k] == (pair.type1[k + n / 2] ^ 1));

    const std::uint64_t pm1 = static_cast<std::uint64_t>(oracle::ipow(static_cast<long long>(ctx.p()), ctx.m() - 1));
    CHECK(pair.type1.count_ones() == pm1);
    CHECK(pair.type1.count_zeros() == pm1 + 2 * (pm1 - 1) / (ctx.p() - 1));
    CHECK(oracle::least_period(ref.t1) == n);
    CHECK(oracle::least_period(ref.t2) == n);

    for (std::size_t e = 0; e < n; ++e) {
      const auto s = interleaved(pair, e);
      const auto bits = oracle::interleave_shift(ref, e);
      CHECK(std::vector<std::uint8_t>(s.bits().begin(), s.bits().end()) == bits);
      CHECK(s.count_ones() == n);
      CHECK(oracle::least_period(bits) == 2 * n);
      const auto parts = deinterleave(s, 2);
      CHECK(parts[0] == pair.type1);
      CHECK(parts[1] == left_shift(pair.type2, e));
    }
  }
}

TEST_CASE("trace characters") {
  const auto ctx = fixed(0);
  const auto chi = trace_characters(ctx);
  REQUIRE(chi.size() == 12);
  const auto t1 = gen_t1(ctx);
  const auto t2 = gen_t2(ctx);
  for (std::size_t i = 0; i < chi.size(); ++i) {
    CHECK(t1[i] == (chi[i] == -1 ? 1 : 0));
    CHECK(t2[i] == (chi[i] == 1 ? 0 : 1));
  }
}
