#include "legseq/gf2_poly.hpp"

#include <bit>

#include "legseq/errors.hpp"

namespace legseq {

struct Gf2Access {
  static std::vector<std::uint64_t>& words(Gf2Poly& p) { return p.words_; }
  static const std::vector<std::uint64_t>& words(const Gf2Poly& p) { return p.words_; }
  static void trim(Gf2Poly& p) { p.trim(); }
};

namespace {

constexpr std::size_t kWordBits = 64;

// dst ^= src << shift, growing dst as needed.
void xor_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                 std::size_t shift) {
  if (src.empty()) return;
  const std::size_t word_shift = shift / kWordBits;
  const unsigned bit_shift = static_cast<unsigned>(shift % kWordBits);
  const std::size_t needed = src.size() + word_shift + (bit_shift ? 1 : 0);
  if (dst.size() < needed) dst.resize(needed, 0);
  if (bit_shift == 0) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[i + word_shift] ^= src[i];
    return;
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i + word_shift] ^= src[i] << bit_shift;
    dst[i + word_shift + 1] ^= src[i] >> (kWordBits - bit_shift);
  }
}

std::optional<std::size_t> top_bit(const std::vector<std::uint64_t>& w) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] != 0) return i * kWordBits + (kWordBits - 1 - std::countl_zero(w[i]));
  }
  return std::nullopt;
}

bool test_bit(const std::vector<std::uint64_t>& w, std::size_t i) {
  const std::size_t word = i / kWordBits;
  return word < w.size() && ((w[word] >> (i % kWordBits)) & 1u);
}

}  // namespace

Gf2Poly Gf2Poly::from_bits(std::span<const std::uint8_t> bits) {
  Gf2Poly r;
  r.words_.assign((bits.size() + kWordBits - 1) / kWordBits, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] & 1u) r.words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
  }
  r.trim();
  return r;
}

Gf2Poly Gf2Poly::from_exponents(std::initializer_list<std::size_t> exponents) {
  Gf2Poly r;
  for (const std::size_t e : exponents) r += monomial(e);
  return r;
}

Gf2Poly Gf2Poly::monomial(std::size_t k) {
  Gf2Poly r;
  r.set(k);
  return r;
}

Gf2Poly Gf2Poly::from_hex(std::string_view hex) {
  if (hex.empty()) throw ParameterError("empty hex polynomial");
  Gf2Poly r;
  r.words_.assign((hex.size() * 4 + kWordBits - 1) / kWordBits, 0);
  for (std::size_t k = 0; k < hex.size(); ++k) {
    const char c = hex[hex.size() - 1 - k];
    std::uint64_t nibble;
    if (c >= '0' && c <= '9') nibble = static_cast<std::uint64_t>(c - '0');
    else if (c >= 'a' && c <= 'f') nibble = static_cast<std::uint64_t>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') nibble = static_cast<std::uint64_t>(c - 'A' + 10);
    else throw ParameterError("invalid hex digit in polynomial");
    const std::size_t bit = 4 * k;
    r.words_[bit / kWordBits] |= nibble << (bit % kWordBits);
  }
  r.trim();
  return r;
}

std::optional<std::size_t> Gf2Poly::degree() const { return top_bit(words_); }

bool Gf2Poly::coefficient(std::size_t i) const { return test_bit(words_, i); }

std::size_t Gf2Poly::weight() const {
  std::size_t w = 0;
  for (const auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

std::string Gf2Poly::to_hex() const {
  const auto deg = degree();
  if (!deg) return "0";
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t nibbles = *deg / 4 + 1;
  std::string out;
  out.reserve(nibbles);
  for (std::size_t k = nibbles; k-- > 0;) {
    const std::size_t bit = 4 * k;
    out.push_back(kDigits[(words_[bit / kWordBits] >> (bit % kWordBits)) & 0xF]);
  }
  return out;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& other) {
  xor_shifted(words_, other.words_, 0);
  trim();
  return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  Gf2Poly r;
  const Gf2Poly& sparse = a.weight() <= b.weight() ? a : b;
  const Gf2Poly& dense = &sparse == &a ? b : a;
  for (std::size_t w = 0; w < sparse.words_.size(); ++w) {
    std::uint64_t word = sparse.words_[w];
    while (word != 0) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(word));
      xor_shifted(r.words_, dense.words_, w * kWordBits + bit);
      word &= word - 1;
    }
  }
  r.trim();
  return r;
}

void Gf2Poly::set(std::size_t i) {
  const std::size_t word = i / kWordBits;
  if (words_.size() <= word) words_.resize(word + 1, 0);
  words_[word] |= std::uint64_t{1} << (i % kWordBits);
}

void Gf2Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2DivMod divmod(const Gf2Poly& a, const Gf2Poly& b) {
  const auto db = b.degree();
  if (!db) throw ParameterError("division by the zero polynomial");

  Gf2DivMod out;
  out.remainder = a;
  auto& rem = Gf2Access::words(out.remainder);
  auto& quo = Gf2Access::words(out.quotient);
  const auto& divisor = Gf2Access::words(b);

  const auto top = top_bit(rem);
  if (top && *top >= *db) {
    quo.assign((*top - *db) / kWordBits + 1, 0);
    for (std::size_t i = *top + 1; i-- > *db;) {
      if (!test_bit(rem, i)) continue;
      const std::size_t shift = i - *db;
      xor_shifted(rem, divisor, shift);
      quo[shift / kWordBits] |= std::uint64_t{1} << (shift % kWordBits);
    }
  }
  Gf2Access::trim(out.remainder);
  Gf2Access::trim(out.quotient);
  return out;
}

Gf2Poly gcd(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero() && b.is_zero()) throw ParameterError("gcd(0, 0) is undefined");
  Gf2Poly x = a;
  Gf2Poly y = b;
  while (!y.is_zero()) {
    Gf2Poly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Gf2Poly xn_minus_1(std::size_t n) {
  if (n < 1) throw ParameterError("x^n - 1 needs n >= 1");
  return Gf2Poly::from_exponents({0, n});
}

}  // namespace legseq
