// legseq: generate and analyse Legendre-binarized geometric sequences and
// their interleavings.
//
// Exit codes: 0 success, 1 verification mismatch, 2 parameter error,
// 3 field-construction failure (reducible --irreducible or non-primitive
// --omega).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "legseq/complexity.hpp"
#include "legseq/correlation.hpp"
#include "legseq/errors.hpp"
#include "legseq/finite_field.hpp"
#include "legseq/report.hpp"
#include "legseq/sequence.hpp"
#include "legseq/verify.hpp"

namespace {

using namespace legseq;

constexpr int kExitMismatch = 1;
constexpr int kExitParameter = 2;
constexpr int kExitField = 3;

// Environment variable giving the directory for relative --out paths.
constexpr const char* kOutDirEnv = "LEGSEQ_OUT_DIR";

struct RunConfig {
  std::uint64_t p = 0;
  unsigned m = 0;
  std::string irreducible;
  std::string omega;
  std::uint64_t max_order = FieldLimits{}.max_order;
  std::string kind = "se";
  std::optional<std::size_t> e;
  std::optional<std::size_t> e1;
  std::optional<std::size_t> e2;
  std::string format;
  std::string out;
  std::string shift_list;
  std::size_t max_pairs = VerifyOptions{}.max_pairs;
  std::uint64_t seed = VerifyOptions{}.seed;
  std::optional<std::size_t> fault_bit;
};

struct Result {
  std::string data;
  int status = 0;
};

FieldContext build_context(const RunConfig& cfg) {
  std::optional<PrimePoly> modulus;
  std::optional<std::vector<Coeff>> omega;
  if (!cfg.irreducible.empty()) modulus = parse_coefficients(cfg.irreducible);
  if (!cfg.omega.empty()) omega = parse_coefficients(cfg.omega);
  FieldLimits limits;
  limits.max_order = cfg.max_order;
  return FieldContext::create(cfg.p, cfg.m, std::move(modulus), std::move(omega), limits);
}

// Parameters are echoed on stderr for the formats that have no header block.
void echo_parameters(const FieldContext& ctx) {
  std::cerr << "# p=" << ctx.p() << " m=" << ctx.m() << " f=" << format_coefficients(ctx.modulus())
            << " omega=" << format_coefficients(ctx.omega().coeffs) << " N=" << ctx.period() << '\n';
}

std::size_t require(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw ParameterError(std::string(flag) + " is required for this command");
  return *v;
}

Result cmd_gen(const RunConfig& cfg) {
  const FieldContext ctx = build_context(cfg);
  SequenceKind kind;
  if (cfg.kind == "t1") kind = Type1{};
  else if (cfg.kind == "t2") kind = Type2{};
  else kind = Interleaved{require(cfg.e, "--e")};
  const BinarySequence s = generate(ctx, kind);
  echo_parameters(ctx);
  return {cfg.format == "hex" ? format_hex(s) : format_bits(s)};
}

Result cmd_autocorr(const RunConfig& cfg) {
  const FieldContext ctx = build_context(cfg);
  CorrelationSubject subject;
  SequenceKind kind;
  CorrelationPrediction predicted;
  if (cfg.kind == "t1" || cfg.kind == "t2") {
    kind = cfg.kind == "t1" ? SequenceKind{Type1{}} : SequenceKind{Type2{}};
    predicted = predict_t1_autocorrelation(ctx);
  } else {
    const std::size_t e = require(cfg.e, "--e");
    kind = Interleaved{e};
    subject.e = e;
    predicted = predict_se_autocorrelation(ctx, static_cast<std::int64_t>(e));
  }
  const CorrelationProfile observed = correlate(ctx, kind, kind);
  subject.lhs = subject.rhs = to_string(kind);

  const bool match = prediction_matches(observed, predicted);
  if (!match) std::cerr << "legseq: observed autocorrelation differs from prediction\n";
  if (cfg.format == "json") return {correlation_json(ctx, subject, observed, predicted), match ? 0 : kExitMismatch};
  echo_parameters(ctx);
  return {correlation_csv(observed, predicted), match ? 0 : kExitMismatch};
}

Result cmd_crosscorr(const RunConfig& cfg) {
  const FieldContext ctx = build_context(cfg);
  std::size_t e1 = require(cfg.e1, "--e1");
  std::size_t e2 = require(cfg.e2, "--e2");
  if (e1 == e2) throw ParameterError("--e1 and --e2 must differ; use autocorr for equal shifts");
  CorrelationSubject subject;
  if (e1 > e2) {
    std::swap(e1, e2);
    subject.swapped = true;
    std::cerr << "legseq: swapped to e1=" << e1 << " e2=" << e2
              << " (R_{A,B}(tau) = R_{B,A}(P - tau))\n";
  }
  const auto predicted =
      predict_cross_correlation(ctx, static_cast<std::int64_t>(e1), static_cast<std::int64_t>(e2));
  const CorrelationProfile observed = correlate(ctx, Interleaved{e1}, Interleaved{e2});
  subject.lhs = observed.lhs_id;
  subject.rhs = observed.rhs_id;
  subject.e1 = e1;
  subject.e2 = e2;

  const bool match = prediction_matches(observed, predicted);
  if (!match) std::cerr << "legseq: observed cross-correlation differs from prediction\n";
  if (cfg.format == "json") return {correlation_json(ctx, subject, observed, predicted), match ? 0 : kExitMismatch};
  echo_parameters(ctx);
  return {correlation_csv(observed, predicted), match ? 0 : kExitMismatch};
}

Result cmd_lincomp(const RunConfig& cfg) {
  const FieldContext ctx = build_context(cfg);
  std::vector<std::size_t> shifts;
  if (cfg.e) {
    shifts.push_back(*cfg.e);
  } else if (!cfg.shift_list.empty()) {
    shifts = parse_shift_list(cfg.shift_list);
  } else {
    for (std::size_t e = 0; e < ctx.period(); ++e) shifts.push_back(e);
  }
  for (const auto e : shifts) {
    if (e >= ctx.period()) {
      throw ParameterError("shift e = " + std::to_string(e) + " outside [0, " +
                           std::to_string(ctx.period() - 1) + "]");
    }
  }
  const auto reports = lc_sweep(ctx, shifts);
  if (cfg.format == "csv") {
    echo_parameters(ctx);
    return {complexity_csv(reports)};
  }
  return {cfg.e ? complexity_json(reports.front()) : complexity_json(reports)};
}

Result cmd_verify(const RunConfig& cfg) {
  const FieldContext ctx = build_context(cfg);
  VerifyOptions options;
  if (!cfg.shift_list.empty()) options.shifts = parse_shift_list(cfg.shift_list);
  options.max_pairs = cfg.max_pairs;
  options.seed = cfg.seed;
  options.fault_bit = cfg.fault_bit;
  const VerifyReport report = verify_instance(ctx, options);
  if (const auto* failed = report.first_failure()) {
    std::cerr << "legseq: verification failed: " << failed->name << ": " << failed->first_failure
              << '\n';
    return {verify_json(ctx, report), kExitMismatch};
  }
  return {verify_json(ctx, report)};
}

Result cmd_field_info(const RunConfig& cfg) { return {field_info_json(build_context(cfg))}; }

std::filesystem::path output_path(const std::string& out) {
  std::filesystem::path path(out);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutDirEnv); dir != nullptr && *dir != '\0') {
      path = std::filesystem::path(dir) / path;
    }
  }
  return path;
}

void emit(const RunConfig& cfg, const std::string& data) {
  if (cfg.out.empty()) {
    std::cout << data;
    std::cout.flush();
    return;
  }
  const auto path = output_path(cfg.out);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParameterError("cannot open output file " + path.string());
  file << data;
}

void add_field_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--p", cfg.p, "odd prime p")->required();
  cmd->add_option("--m", cfg.m, "extension degree m > 1")->required();
  cmd->add_option("--irreducible", cfg.irreducible,
                  "monic modulus, coefficients constant term first (e.g. 3,2,1)");
  cmd->add_option("--omega", cfg.omega, "primitive element, m coefficients constant term first");
  cmd->add_option("--max-order", cfg.max_order, "refuse fields with p^m above this");
  cmd->add_option("--out", cfg.out, std::string("output file (relative paths resolve under $") + kOutDirEnv + ")");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendre-binarized geometric sequences: generation and analysis"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* gen = app.add_subcommand("gen", "write one least period of T1, T2 or S^e");
  add_field_options(gen, cfg);
  gen->add_option("--kind", cfg.kind, "t1 | t2 | se")->check(CLI::IsMember({"t1", "t2", "se"}));
  gen->add_option("--e", cfg.e, "left shift of T2 for S^e");
  gen->add_option("--format", cfg.format, "bits | hex")->check(CLI::IsMember({"bits", "hex"}));

  auto* autocorr = app.add_subcommand("autocorr", "autocorrelation profile with closed-form prediction");
  add_field_options(autocorr, cfg);
  autocorr->add_option("--kind", cfg.kind, "t1 | t2 | se")->check(CLI::IsMember({"t1", "t2", "se"}));
  autocorr->add_option("--e", cfg.e, "shift for S^e");
  autocorr->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  auto* crosscorr = app.add_subcommand("crosscorr", "cross-correlation of S^e1 and S^e2");
  add_field_options(crosscorr, cfg);
  crosscorr->add_option("--e1", cfg.e1)->required();
  crosscorr->add_option("--e2", cfg.e2)->required();
  crosscorr->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  auto* lincomp = app.add_subcommand("lincomp", "linear complexity of S^e by three methods");
  add_field_options(lincomp, cfg);
  lincomp->add_option("--e", cfg.e, "single shift (default: every e in [0, N))");
  lincomp->add_option("--e-list", cfg.shift_list, "shifts, e.g. 0,4,10-15");
  lincomp->add_option("--format", cfg.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "check every closed form against brute force");
  add_field_options(verify, cfg);
  verify->add_option("--e-list", cfg.shift_list, "shifts to sweep (default: all, N <= 4096)");
  verify->add_option("--pairs", cfg.max_pairs, "maximum cross-correlation pairs");
  verify->add_option("--seed", cfg.seed, "seed for sampling pairs");
  verify->add_option("--inject-fault", cfg.fault_bit, "test hook: flip this bit of each S^e")
      ->group("");

  auto* info = app.add_subcommand("field-info", "print the field context as JSON");
  add_field_options(info, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "legseq: " << e.what() << '\n';
    return kExitParameter;
  }

  try {
    Result result;
    if (gen->parsed()) {
      if (cfg.format.empty()) cfg.format = "bits";
      result = cmd_gen(cfg);
    } else if (autocorr->parsed()) {
      if (cfg.format.empty()) cfg.format = "csv";
      result = cmd_autocorr(cfg);
    } else if (crosscorr->parsed()) {
      if (cfg.format.empty()) cfg.format = "csv";
      result = cmd_crosscorr(cfg);
    } else if (lincomp->parsed()) {
      if (cfg.format.empty()) cfg.format = "json";
      result = cmd_lincomp(cfg);
    } else if (verify->parsed()) {
      result = cmd_verify(cfg);
    } else {
      result = cmd_field_info(cfg);
    }
    emit(cfg, result.data);
    return result.status;
  } catch (const ParameterError& e) {
    std::cerr << "legseq: " << e.what() << '\n';
    return kExitParameter;
  } catch (const FieldConstructionError& e) {
    std::cerr << "legseq: " << e.what() << '\n';
    return kExitField;
  } catch (const VerificationError& e) {
    std::cerr << "legseq: verification failed: " << e.what() << '\n';
    return kExitMismatch;
  }
}
