#pragma once

// Legendre-binarized geometric sequences of the two types, cyclic shifts and
// interleaving. Every sequence is stored as exactly one period; index n means
// n modulo the period.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "legseq/finite_field.hpp"

namespace legseq {

class BinarySequence {
 public:
  /// One period; the period is bits.size(). Throws ParameterError for an
  /// empty vector or a value other than 0/1.
  explicit BinarySequence(std::vector<std::uint8_t> bits);

  std::size_t period() const { return bits_.size(); }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::uint8_t operator[](std::size_t n) const { return bits_[n % bits_.size()]; }

  std::size_t count_ones() const;
  std::size_t count_zeros() const { return period() - count_ones(); }

  /// `repeats` consecutive periods, e.g. for Berlekamp-Massey.
  std::vector<std::uint8_t> unrolled(std::size_t repeats) const;

  friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Smallest d dividing the period with s[i] = s[i mod d] for all i.
std::size_t least_period(const BinarySequence& s);

/// output[n] = s[n + e]. Requires 0 <= e < period.
BinarySequence left_shift(const BinarySequence& s, std::size_t e);

/// output[j*T + i] = family[i][j], T = family.size(). All members must share
/// one period.
BinarySequence interleave(std::span<const BinarySequence> family);

/// Inverse of interleave for a family of `count` sequences.
std::vector<BinarySequence> deinterleave(const BinarySequence& s, std::size_t count);

/// Legendre symbol of Tr(omega^n) for n in [0, N): values in {-1, 0, +1}.
std::vector<int> trace_characters(const FieldContext& ctx);

/// Type 1: residue -> 0, non-residue -> 1, zero trace -> 0.
BinarySequence gen_t1(const FieldContext& ctx);
/// Type 2: residue -> 0, non-residue -> 1, zero trace -> 1.
BinarySequence gen_t2(const FieldContext& ctx);

struct GeometricPair {
  BinarySequence type1;
  BinarySequence type2;
};

/// Both types from one pass over omega^n. Least periods are checked.
GeometricPair geometric_pair(const FieldContext& ctx);

/// S^e = interleave(T1, L^e(T2)). Requires e in [0, N); checks that the least
/// period is exactly 2N.
BinarySequence interleaved(const GeometricPair& pair, std::size_t e);
BinarySequence gen_se(const FieldContext& ctx, std::size_t e);

struct Type1 {};
struct Type2 {};
struct Interleaved {
  std::size_t e;
};
using SequenceKind = std::variant<Type1, Type2, Interleaved>;

/// "T1", "T2" or "S^e".
std::string to_string(const SequenceKind& kind);
BinarySequence generate(const FieldContext& ctx, const SequenceKind& kind);

}  // namespace legseq
