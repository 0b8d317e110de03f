#include "legseq/correlation.hpp"

#include "legseq/errors.hpp"
#include "legseq/kernels.hpp"

namespace legseq {

namespace {

std::int64_t ipow(std::int64_t base, unsigned exp) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

void require_shift(std::int64_t e, std::int64_t n, const char* name) {
  if (e < 0 || e >= n) {
    throw ParameterError(std::string(name) + " = " + std::to_string(e) + " outside [0, " +
                         std::to_string(n - 1) + "]");
  }
}

struct Entry {
  std::int64_t value;
  const char* label;
};

void push(CorrelationPrediction& out, Entry entry) {
  out.values.push_back(entry.value);
  out.labels.emplace_back(entry.label);
}

}  // namespace

std::int64_t residue(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

CorrelationConstants correlation_constants(std::uint64_t p, unsigned m) {
  const auto sp = static_cast<std::int64_t>(p);
  const std::int64_t q = ipow(sp, m);
  const std::int64_t q1 = ipow(sp, m - 1);
  const std::int64_t q2 = ipow(sp, m - 2);
  return {2 * (q - 1) / (sp - 1), -2 * q1 + 2 * (q1 - 1) / (sp - 1), 2 * (q2 - 1) / (sp - 1)};
}

CorrelationConstants correlation_constants(const FieldContext& ctx) {
  return correlation_constants(ctx.p(), ctx.m());
}

CorrelationProfile correlate(const BinarySequence& a, const BinarySequence& b,
                             CorrelationKernel kernel) {
  CorrelationProfile out;
  switch (kernel) {
    case CorrelationKernel::reference:
      out.values = kernels::correlate_reference(a.bits(), b.bits());
      break;
    case CorrelationKernel::parallel:
      out.values = kernels::correlate_parallel(a.bits(), b.bits());
      break;
    case CorrelationKernel::packed:
      out.values = kernels::correlate_packed(a.bits(), b.bits());
      break;
  }
  out.kind = a == b ? CorrelationKind::autocorrelation : CorrelationKind::cross;
  return out;
}

CorrelationProfile correlate(const FieldContext& ctx, const SequenceKind& lhs,
                             const SequenceKind& rhs, CorrelationKernel kernel) {
  const auto pair = geometric_pair(ctx);
  auto build = [&](const SequenceKind& kind) {
    if (const auto* s = std::get_if<Interleaved>(&kind)) return interleaved(pair, s->e);
    return std::holds_alternative<Type1>(kind) ? pair.type1 : pair.type2;
  };
  const BinarySequence a = build(lhs);
  const BinarySequence b = build(rhs);
  CorrelationProfile out = correlate(a, b, kernel);
  out.lhs_id = to_string(lhs);
  out.rhs_id = to_string(rhs);
  return out;
}

CorrelationPrediction predict_t1_autocorrelation(const CorrelationConstants& c) {
  CorrelationPrediction out;
  for (std::int64_t tau = 0; tau < c.n; ++tau) {
    if (tau == 0) push(out, {c.n, "t1/N"});
    else if (tau == c.n / 2) push(out, {c.n1, "t1/N1"});
    else push(out, {c.n2, "t1/N2"});
  }
  return out;
}

CorrelationPrediction predict_t1_autocorrelation(const FieldContext& ctx) {
  return predict_t1_autocorrelation(correlation_constants(ctx));
}

CorrelationPrediction predict_se_autocorrelation(const CorrelationConstants& c, std::int64_t e) {
  const std::int64_t n = c.n;
  const std::int64_t half = n / 2;
  require_shift(e, n, "e");

  const bool merged = residue(2 * e, n) == residue(1 - half, n);
  const std::int64_t peak_a = residue(-e - half, n);
  const std::int64_t peak_b = residue(e - 1 + half, n);
  const std::int64_t trough_a = residue(-e, n);
  const std::int64_t trough_b = residue(e - 1, n);

  CorrelationPrediction out;
  out.values.reserve(static_cast<std::size_t>(2 * n));
  for (std::int64_t tau = 0; tau < 2 * n; ++tau) {
    const std::int64_t t0 = tau / 2;
    if (tau % 2 == 0) {
      if (t0 == 0) push(out, {2 * n, "auto/even/2N"});
      else if (t0 == half) push(out, {2 * c.n1, "auto/even/2N1"});
      else push(out, {2 * c.n2, "auto/even/2N2"});
    } else if (!merged) {
      if (t0 == peak_a || t0 == peak_b) push(out, {-n - c.n2, "auto/odd/-N-N2"});
      else if (t0 == trough_a || t0 == trough_b) push(out, {-c.n1 - c.n2, "auto/odd/-N1-N2"});
      else push(out, {-2 * c.n2, "auto/odd/-2N2"});
    } else {
      if (t0 == trough_a || t0 == trough_b) push(out, {-n - c.n1, "auto/odd-merged/-N-N1"});
      else push(out, {-2 * c.n2, "auto/odd-merged/-2N2"});
    }
  }
  return out;
}

CorrelationPrediction predict_se_autocorrelation(const FieldContext& ctx, std::int64_t e) {
  return predict_se_autocorrelation(correlation_constants(ctx), e);
}

CorrelationPrediction predict_cross_correlation(const CorrelationConstants& c, std::int64_t e1,
                                                std::int64_t e2) {
  const std::int64_t n = c.n;
  const std::int64_t half = n / 2;
  require_shift(e1, n, "e1");
  require_shift(e2, n, "e2");
  if (e1 >= e2) throw ParameterError("cross-correlation prediction needs e1 < e2");

  const bool even_half = residue(e2 - e1, n) == half;
  const bool sum_one = residue(e1 + e2, n) == 1;
  const bool sum_half = residue(e1 + e2, n) == residue(1 - half, n);

  const std::int64_t diff = residue(e1 - e2, n);
  const std::int64_t diff_half = residue(e1 - e2 + half, n);
  const std::int64_t peak_a = residue(-e2 - half, n);
  const std::int64_t peak_b = residue(e1 - 1 + half, n);
  const std::int64_t trough_a = residue(-e2, n);
  const std::int64_t trough_b = residue(e1 - 1, n);

  CorrelationPrediction out;
  out.values.reserve(static_cast<std::size_t>(2 * n));
  for (std::int64_t tau = 0; tau < 2 * n; ++tau) {
    const std::int64_t t0 = tau / 2;
    if (tau % 2 == 0) {
      if (!even_half) {
        if (t0 == 0 || t0 == diff) push(out, {n + c.n2, "cross/even/N+N2"});
        else if (t0 == half || t0 == diff_half) push(out, {c.n1 + c.n2, "cross/even/N1+N2"});
        else push(out, {2 * c.n2, "cross/even/2N2"});
      } else {
        if (t0 == 0 || t0 == half) push(out, {n + c.n1, "cross/even-half/N+N1"});
        else push(out, {2 * c.n2, "cross/even-half/2N2"});
      }
    } else if (sum_one) {
      if (t0 == peak_a) push(out, {-2 * n, "cross/odd-sum1/-2N"});
      else if (t0 == trough_a) push(out, {-2 * c.n1, "cross/odd-sum1/-2N1"});
      else push(out, {-2 * c.n2, "cross/odd-sum1/-2N2"});
    } else if (sum_half) {
      if (t0 == peak_a || t0 == trough_a) push(out, {-n - c.n1, "cross/odd-sumhalf/-N-N1"});
      else push(out, {-2 * c.n2, "cross/odd-sumhalf/-2N2"});
    } else {
      if (t0 == peak_a || t0 == peak_b) push(out, {-n - c.n2, "cross/odd/-N-N2"});
      else if (t0 == trough_a || t0 == trough_b) push(out, {-c.n1 - c.n2, "cross/odd/-N1-N2"});
      else push(out, {-2 * c.n2, "cross/odd/-2N2"});
    }
  }
  return out;
}

CorrelationPrediction predict_cross_correlation(const FieldContext& ctx, std::int64_t e1,
                                                std::int64_t e2) {
  return predict_cross_correlation(correlation_constants(ctx), e1, e2);
}

std::int64_t decompose_correlation(std::span<const std::int64_t> t1_autocorrelation, std::int64_t e1,
                              std::int64_t e2, std::int64_t tau) {
  const auto n = static_cast<std::int64_t>(t1_autocorrelation.size());
  require_shift(e1, n, "e1");
  require_shift(e2, n, "e2");
  if (tau < 0 || tau >= 2 * n) throw ParameterError("tau outside [0, 2N)");
  auto r = [&](std::int64_t k) { return t1_autocorrelation[static_cast<std::size_t>(residue(k, n))]; };
  const std::int64_t t0 = tau / 2;
  const std::int64_t half = n / 2;
  if (tau % 2 == 0) return r(t0) + r(e2 - e1 + t0);
  return -r(e2 + t0 + half) - r(e1 - t0 - 1 + half);
}

std::int64_t decompose_correlation(const FieldContext& ctx, std::int64_t e1, std::int64_t e2,
                              std::int64_t tau) {
  const BinarySequence t1 = gen_t1(ctx);
  const auto r = kernels::correlate_reference(t1.bits(), t1.bits());
  return decompose_correlation(r, e1, e2, tau);
}

const std::vector<std::string>& all_branch_labels() {
  static const std::vector<std::string> labels = {
      "t1/N",
      "t1/N1",
      "t1/N2",
      "auto/even/2N",
      "auto/even/2N1",
      "auto/even/2N2",
      "auto/odd/-N-N2",
      "auto/odd/-N1-N2",
      "auto/odd/-2N2",
      "auto/odd-merged/-N-N1",
      "auto/odd-merged/-2N2",
      "cross/even/N+N2",
      "cross/even/N1+N2",
      "cross/even/2N2",
      "cross/even-half/N+N1",
      "cross/even-half/2N2",
      "cross/odd/-N-N2",
      "cross/odd/-N1-N2",
      "cross/odd/-2N2",
      "cross/odd-sum1/-2N",
      "cross/odd-sum1/-2N1",
      "cross/odd-sum1/-2N2",
      "cross/odd-sumhalf/-N-N1",
      "cross/odd-sumhalf/-2N2",
  };
  return labels;
}

}  // namespace legseq
