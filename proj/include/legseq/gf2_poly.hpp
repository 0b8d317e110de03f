#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace legseq {

/// Dense polynomial over F_2. Bit i is the coefficient of x^i.
///
/// The zero polynomial has no degree: `degree()` returns std::nullopt rather
/// than a sentinel integer, so callers must handle it explicitly.
class Gf2Poly {
 public:
  Gf2Poly() = default;

  static Gf2Poly from_bits(std::span<const std::uint8_t> bits);
  static Gf2Poly from_exponents(std::initializer_list<std::size_t> exponents);
  static Gf2Poly monomial(std::size_t k);
  /// Inverse of to_hex. Throws ParameterError on non-hex input.
  static Gf2Poly from_hex(std::string_view hex);

  bool is_zero() const { return words_.empty(); }
  std::optional<std::size_t> degree() const;
  bool coefficient(std::size_t i) const;
  std::size_t weight() const;

  /// Coefficient vector as a big-endian hex number; the constant term is the
  /// least significant bit. Zero is "0".
  std::string to_hex() const;

  Gf2Poly& operator+=(const Gf2Poly& other);
  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

 private:
  friend struct Gf2Access;
  void set(std::size_t i);
  void trim();

  std::vector<std::uint64_t> words_;  // no trailing zero words
};

struct Gf2DivMod {
  Gf2Poly quotient;
  Gf2Poly remainder;
};

/// a = q*b + r with deg r < deg b. Throws ParameterError when b is zero.
Gf2DivMod divmod(const Gf2Poly& a, const Gf2Poly& b);

/// Euclid. gcd(a, 0) = a. Throws ParameterError when both are zero.
Gf2Poly gcd(const Gf2Poly& a, const Gf2Poly& b);

/// x^n - 1, which over F_2 is x^n + 1. Throws ParameterError for n < 1.
Gf2Poly xn_minus_1(std::size_t n);

}  // namespace legseq
