#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "legseq/errors.hpp"
#include "legseq/report.hpp"

using namespace legseq;

namespace {

FieldContext example_ctx() {
  return FieldContext::create(5, 2, PrimePoly{3, 2, 1}, std::vector<Coeff>{0, 4});
}

}  // namespace

TEST_CASE("coefficient lists") {
  CHECK(parse_coefficients("3,2,1") == std::vector<Coeff>{3, 2, 1});
  CHECK(parse_coefficients("0") == std::vector<Coeff>{0});
  CHECK(format_coefficients({3, 2, 1}) == "3,2,1");
  CHECK_THROWS_AS(parse_coefficients(""), ParameterError);
  CHECK_THROWS_AS(parse_coefficients("3,,1"), ParameterError);
  CHECK_THROWS_AS(parse_coefficients("3,-2"), ParameterError);
  CHECK_THROWS_AS(parse_coefficients("a"), ParameterError);
}

TEST_CASE("shift lists") {
  CHECK(parse_shift_list("0,3,5-7") == std::vector<std::size_t>{0, 3, 5, 6, 7});
  CHECK(parse_shift_list("4") == std::vector<std::size_t>{4});
  CHECK_THROWS_AS(parse_shift_list("7-5"), ParameterError);
  CHECK_THROWS_AS(parse_shift_list("x"), ParameterError);
}

TEST_CASE("bitstream formats") {
  const auto s4 = gen_se(example_ctx(), 4);
  CHECK(format_bits(s4) == "101110000011010001011101\n");
  // bit 8k+j sits at bit j of byte k
  CHECK(format_hex(s4) == "1d2cba\n");
  CHECK(parse_hex("1d2cba", 24) == s4);
  CHECK(parse_hex(format_hex(gen_t1(example_ctx())), 12) == gen_t1(example_ctx()));
  CHECK_THROWS_AS(parse_hex("1d2c", 24), ParameterError);
  CHECK_THROWS_AS(parse_hex("zz", 8), ParameterError);
}

TEST_CASE("correlation reports") {
  const auto ctx = example_ctx();
  const auto observed = correlate(ctx, Interleaved{4}, Interleaved{4});
  const auto predicted = predict_se_autocorrelation(ctx, 4);
  CHECK(prediction_matches(observed, predicted));

  const auto csv = correlation_csv(observed, predicted);
  CHECK(csv.rfind("tau,value,predicted,branch\n0,24,24,auto/even/2N\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 25);

  CorrelationSubject subject;
  subject.lhs = subject.rhs = "S^4";
  subject.e = 4;
  const auto j = nlohmann::json::parse(correlation_json(ctx, subject, observed, predicted));
  CHECK(j["parameters"]["f"] == "3,2,1");
  CHECK(j["parameters"]["omega"] == "0,4");
  CHECK(j["parameters"]["e"] == 4);
  CHECK(j["observed"].size() == 24);
  CHECK(j["branches"].size() == 24);
  CHECK(j["match"] == true);

  auto wrong = predicted;
  wrong.values[3] += 2;
  CHECK_FALSE(prediction_matches(observed, wrong));
}

TEST_CASE("complexity and field reports") {
  const auto ctx = FieldContext::create(5, 3, PrimePoly{3, 2, 3, 1}, std::vector<Coeff>{1, 1, 2});
  const auto j = nlohmann::json::parse(complexity_json(lc_report(ctx, 16)));
  CHECK(j["L_closed"] == 93);
  CHECK(j["L_gcd"] == 93);
  CHECK(j["L_bm"] == 93);
  CHECK(j["G"] == 31);
  CHECK(j["nu2"] == 1);
  CHECK(j["agreement"] == true);
  // (x^124 + 1) / (x^31 + 1)
  CHECK(j["minimal_poly_hex"] == "200000004000000080000001");

  const auto info = nlohmann::json::parse(field_info_json(example_ctx()));
  CHECK(info["N"] == 12);
  CHECK(info["N1"] == -8);
  CHECK(info["N2"] == 0);
  CHECK(info["order"] == 25);
}

TEST_CASE("verify report") {
  const auto ctx = example_ctx();
  const auto report = verify_instance(ctx);
  CHECK(report.all_passed());
  CHECK(report.first_failure() == nullptr);
  CHECK(report.shifts.size() == 12);
  CHECK(report.pairs.size() == 66);
  const auto j = nlohmann::json::parse(verify_json(ctx, report));
  CHECK(j["passed"] == true);
  CHECK(j["branch_coverage"].size() == all_branch_labels().size());
  CHECK(verify_json(ctx, report) == verify_json(ctx, verify_instance(ctx)));

  VerifyOptions opts;
  opts.fault_bit = 0;
  const auto broken = verify_instance(ctx, opts);
  CHECK_FALSE(broken.all_passed());
  REQUIRE(broken.first_failure() != nullptr);
  CHECK(broken.first_failure()->name == "interleaved-autocorrelation");

  opts = {};
  opts.shifts = std::vector<std::size_t>{12};
  CHECK_THROWS_AS(verify_instance(ctx, opts), ParameterError);
}

TEST_CASE("pair selection") {
  std::vector<std::size_t> shifts(62);
  for (std::size_t i = 0; i < shifts.size(); ++i) shifts[i] = i;
  const auto a = select_pairs(62, shifts, 100, 9);
  CHECK(a.size() == 100);
  CHECK(a == select_pairs(62, shifts, 100, 9));
  bool half = false, one = false, sum_half = false;
  for (const auto& [e1, e2] : a) {
    CHECK(e1 < e2);
    half |= (e2 - e1) % 62 == 31;
    one |= (e1 + e2) % 62 == 1;
    sum_half |= (e1 + e2) % 62 == 32;
  }
  CHECK(half);
  CHECK(one);
  CHECK(sum_half);
  CHECK(select_pairs(12, std::vector<std::size_t>{0, 1, 2}, 256, 1).size() == 3);
}
