#include "legseq/report.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "legseq/errors.hpp"

namespace legseq {

namespace {

using Json = nlohmann::ordered_json;

std::uint64_t parse_uint(std::string_view token, std::string_view what) {
  std::uint64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw ParameterError("malformed " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

Json field_block(const FieldContext& ctx) {
  Json j;
  j["p"] = ctx.p();
  j["m"] = ctx.m();
  j["f"] = format_coefficients(ctx.modulus());
  j["omega"] = format_coefficients(ctx.omega().coeffs);
  j["N"] = ctx.period();
  return j;
}

Json complexity_object(const LinearComplexityReport& r) {
  Json j;
  j["p"] = r.p;
  j["m"] = r.m;
  j["e"] = r.e;
  j["N"] = r.n;
  j["nu2"] = r.nu2_n;
  j["G"] = r.g;
  j["L_closed"] = r.l_closed_form;
  j["L_gcd"] = r.l_gcd_method;
  j["L_bm"] = r.l_berlekamp_massey;
  j["minimal_poly_hex"] = r.minimal_poly.to_hex();
  j["agreement"] = r.agreement;
  return j;
}

}  // namespace

std::vector<Coeff> parse_coefficients(std::string_view text) {
  std::vector<Coeff> out;
  for (const auto token : split(text, ',')) out.push_back(parse_uint(strip(token), "coefficient"));
  return out;
}

std::string format_coefficients(const std::vector<Coeff>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs[i]);
  }
  return out;
}

std::vector<std::size_t> parse_shift_list(std::string_view text) {
  std::vector<std::size_t> out;
  for (const auto raw : split(text, ',')) {
    const auto token = strip(raw);
    const auto dash = token.find('-');
    if (dash == std::string_view::npos) {
      out.push_back(parse_uint(token, "shift"));
      continue;
    }
    const auto lo = parse_uint(strip(token.substr(0, dash)), "shift range");
    const auto hi = parse_uint(strip(token.substr(dash + 1)), "shift range");
    if (lo > hi) throw ParameterError("empty shift range '" + std::string(token) + "'");
    for (auto e = lo; e <= hi; ++e) out.push_back(e);
  }
  return out;
}

std::string format_bits(const BinarySequence& s) {
  std::string out;
  out.reserve(s.period() + 1);
  for (const auto b : s.bits()) out.push_back(b ? '1' : '0');
  out.push_back('\n');
  return out;
}

std::string format_hex(const BinarySequence& s) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const auto bits = s.bits();
  std::string out;
  for (std::size_t byte = 0; byte * 8 < bits.size(); ++byte) {
    unsigned value = 0;
    for (std::size_t j = 0; j < 8 && byte * 8 + j < bits.size(); ++j) {
      value |= static_cast<unsigned>(bits[byte * 8 + j]) << j;
    }
    out.push_back(kDigits[value >> 4]);
    out.push_back(kDigits[value & 0xF]);
  }
  out.push_back('\n');
  return out;
}

BinarySequence parse_hex(std::string_view hex, std::size_t period) {
  while (!hex.empty() && (hex.back() == '\n' || hex.back() == '\r')) hex.remove_suffix(1);
  if (hex.size() != 2 * ((period + 7) / 8)) throw ParameterError("hex length does not match period");
  std::vector<std::uint8_t> bits(period);
  for (std::size_t byte = 0; byte < hex.size() / 2; ++byte) {
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(hex.data() + 2 * byte, hex.data() + 2 * byte + 2, value, 16);
    if (ec != std::errc{} || ptr != hex.data() + 2 * byte + 2) throw ParameterError("invalid hex digit");
    for (std::size_t j = 0; j < 8 && byte * 8 + j < period; ++j) {
      bits[byte * 8 + j] = static_cast<std::uint8_t>((value >> j) & 1u);
    }
  }
  return BinarySequence(std::move(bits));
}

bool prediction_matches(const CorrelationProfile& observed, const CorrelationPrediction& predicted) {
  return observed.values == predicted.values;
}

std::string correlation_csv(const CorrelationProfile& observed, const CorrelationPrediction& predicted) {
  std::ostringstream out;
  out << "tau,value,predicted,branch\n";
  for (std::size_t tau = 0; tau < observed.values.size(); ++tau) {
    out << tau << ',' << observed.values[tau] << ',' << predicted.values.at(tau) << ','
        << predicted.labels.at(tau) << '\n';
  }
  return out.str();
}

std::string correlation_json(const FieldContext& ctx, const CorrelationSubject& subject,
                             const CorrelationProfile& observed,
                             const CorrelationPrediction& predicted) {
  Json params = field_block(ctx);
  params["kind"] = observed.kind == CorrelationKind::autocorrelation ? "auto" : "cross";
  params["lhs"] = subject.lhs;
  params["rhs"] = subject.rhs;
  if (subject.e) params["e"] = *subject.e;
  if (subject.e1) params["e1"] = *subject.e1;
  if (subject.e2) params["e2"] = *subject.e2;
  if (subject.e1) params["swapped"] = subject.swapped;

  Json j;
  j["parameters"] = params;
  j["observed"] = observed.values;
  j["predicted"] = predicted.values;
  j["branches"] = predicted.labels;
  j["match"] = prediction_matches(observed, predicted);
  return j.dump(2) + "\n";
}

std::string complexity_json(const LinearComplexityReport& report) {
  return complexity_object(report).dump(2) + "\n";
}

std::string complexity_json(const std::vector<LinearComplexityReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(complexity_object(r));
  return arr.dump(2) + "\n";
}

std::string complexity_csv(const std::vector<LinearComplexityReport>& reports) {
  std::ostringstream out;
  out << "p,m,e,N,nu2,G,L_closed,L_gcd,L_bm,minimal_poly_hex,agreement\n";
  for (const auto& r : reports) {
    out << r.p << ',' << r.m << ',' << r.e << ',' << r.n << ',' << r.nu2_n << ',' << r.g << ','
        << r.l_closed_form << ',' << r.l_gcd_method << ',' << r.l_berlekamp_massey << ','
        << r.minimal_poly.to_hex() << ',' << (r.agreement ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string field_info_json(const FieldContext& ctx) {
  const auto c = correlation_constants(ctx);
  const auto& field = ctx.field();
  Json j = field_block(ctx);
  j["order"] = field.order();
  j["N1"] = c.n1;
  j["N2"] = c.n2;
  j["nu2_N"] = nu2(ctx.period());
  j["trace_of_basis"] = ctx.trace_form().basis_traces();
  j["omega_half_period_power"] =
      format_coefficients(field.pow(ctx.omega(), ctx.period() / 2).coeffs);
  return j.dump(2) + "\n";
}

std::string verify_json(const FieldContext& ctx, const VerifyReport& report) {
  Json j;
  j["parameters"] = field_block(ctx);
  j["shifts"] = report.shifts.size();
  j["pairs"] = report.pairs.size();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json o;
    o["name"] = c.name;
    o["passed"] = c.passed();
    o["cases"] = c.cases;
    o["failures"] = c.failures;
    if (!c.passed()) o["first_failure"] = c.first_failure;
    checks.push_back(o);
  }
  j["checks"] = checks;
  Json coverage;
  for (const auto& [label, n] : report.branch_counts) coverage[label] = n;
  j["branch_coverage"] = coverage;
  j["passed"] = report.all_passed();
  return j.dump(2) + "\n";
}

}  // namespace legseq
