#include "legseq/sequence.hpp"

#include <algorithm>
#include <numeric>

#include "legseq/errors.hpp"

namespace legseq {

namespace {

void require_least_period(const BinarySequence& s, std::size_t expected, const char* what) {
  const std::size_t lp = least_period(s);
  if (lp != expected) {
    throw VerificationError(std::string(what) + " has least period " + std::to_string(lp) +
                            ", expected " + std::to_string(expected));
  }
}

// Explicit case tables; type 2 is not derived from type 1.
std::uint8_t type1_bit(int symbol) {
  switch (symbol) {
    case 1: return 0;
    case -1: return 1;
    case 0: return 0;
  }
  throw VerificationError("Legendre symbol outside {-1, 0, 1}");
}

std::uint8_t type2_bit(int symbol) {
  switch (symbol) {
    case 1: return 0;
    case -1: return 1;
    case 0: return 1;
  }
  throw VerificationError("Legendre symbol outside {-1, 0, 1}");
}

BinarySequence map_characters(const std::vector<int>& chars, std::uint8_t (*table)(int)) {
  std::vector<std::uint8_t> bits(chars.size());
  std::transform(chars.begin(), chars.end(), bits.begin(), table);
  return BinarySequence(std::move(bits));
}

}  // namespace

BinarySequence::BinarySequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw ParameterError("a sequence period must be non-empty");
  if (std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; })) {
    throw ParameterError("sequence entries must be 0 or 1");
  }
}

std::size_t BinarySequence::count_ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<std::uint8_t> BinarySequence::unrolled(std::size_t repeats) const {
  std::vector<std::uint8_t> out;
  out.reserve(bits_.size() * repeats);
  for (std::size_t r = 0; r < repeats; ++r) out.insert(out.end(), bits_.begin(), bits_.end());
  return out;
}

std::size_t least_period(const BinarySequence& s) {
  const std::size_t n = s.period();
  const auto bits = s.bits();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = bits[i] == bits[i - d];
    if (periodic) return d;
  }
  return n;
}

BinarySequence left_shift(const BinarySequence& s, std::size_t e) {
  if (e >= s.period()) {
    throw ParameterError("shift " + std::to_string(e) + " outside [0, " +
                         std::to_string(s.period() - 1) + "]");
  }
  std::vector<std::uint8_t> bits(s.bits().begin(), s.bits().end());
  std::rotate(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(e), bits.end());
  return BinarySequence(std::move(bits));
}

BinarySequence interleave(std::span<const BinarySequence> family) {
  if (family.empty()) throw ParameterError("cannot interleave an empty family");
  const std::size_t n = family.front().period();
  for (const auto& member : family) {
    if (member.period() != n) throw ParameterError("interleaved sequences must share one period");
  }
  const std::size_t t = family.size();
  std::vector<std::uint8_t> bits(t * n);
  for (std::size_t i = 0; i < t; ++i) {
    const auto src = family[i].bits();
    for (std::size_t j = 0; j < n; ++j) bits[j * t + i] = src[j];
  }
  return BinarySequence(std::move(bits));
}

std::vector<BinarySequence> deinterleave(const BinarySequence& s, std::size_t count) {
  if (count == 0 || s.period() % count != 0) {
    throw ParameterError("period is not a multiple of the family size");
  }
  const std::size_t n = s.period() / count;
  std::vector<BinarySequence> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::uint8_t> bits(n);
    for (std::size_t j = 0; j < n; ++j) bits[j] = s.bits()[j * count + i];
    out.emplace_back(std::move(bits));
  }
  return out;
}

std::vector<int> trace_characters(const FieldContext& ctx) {
  const std::uint64_t p = ctx.p();
  // Euler's criterion once per residue class.
  std::vector<int> symbol(p);
  for (std::uint64_t a = 0; a < p; ++a) {
    symbol[a] = a == 0 ? 0 : (pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1);
  }

  const auto& field = ctx.field();
  const auto& trace = ctx.trace_form();
  std::vector<int> out(ctx.period());
  ExtFieldElement power = field.one();
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = symbol[trace(power)];
    power = field.mul(power, ctx.omega());
  }
  return out;
}

BinarySequence gen_t1(const FieldContext& ctx) { return geometric_pair(ctx).type1; }

BinarySequence gen_t2(const FieldContext& ctx) { return geometric_pair(ctx).type2; }

GeometricPair geometric_pair(const FieldContext& ctx) {
  const auto chars = trace_characters(ctx);
  GeometricPair pair{map_characters(chars, type1_bit), map_characters(chars, type2_bit)};
  require_least_period(pair.type1, ctx.period(), "T1");
  require_least_period(pair.type2, ctx.period(), "T2");
  return pair;
}

BinarySequence interleaved(const GeometricPair& pair, std::size_t e) {
  const std::size_t n = pair.type1.period();
  if (e >= n) {
    throw ParameterError("shift e = " + std::to_string(e) + " outside [0, " + std::to_string(n - 1) +
                         "]");
  }
  const BinarySequence family[] = {pair.type1, left_shift(pair.type2, e)};
  BinarySequence s = interleave(family);
  require_least_period(s, 2 * n, "S^e");
  return s;
}

BinarySequence gen_se(const FieldContext& ctx, std::size_t e) {
  if (e >= ctx.period()) {
    throw ParameterError("shift e = " + std::to_string(e) + " outside [0, " +
                         std::to_string(ctx.period() - 1) + "]");
  }
  return interleaved(geometric_pair(ctx), e);
}

std::string to_string(const SequenceKind& kind) {
  struct Visitor {
    std::string operator()(Type1) const { return "T1"; }
    std::string operator()(Type2) const { return "T2"; }
    std::string operator()(Interleaved s) const { return "S^" + std::to_string(s.e); }
  };
  return std::visit(Visitor{}, kind);
}

BinarySequence generate(const FieldContext& ctx, const SequenceKind& kind) {
  if (const auto* s = std::get_if<Interleaved>(&kind)) return gen_se(ctx, s->e);
  auto pair = geometric_pair(ctx);
  return std::holds_alternative<Type1>(kind) ? std::move(pair.type1) : std::move(pair.type2);
}

}  // namespace legseq
