#pragma once

// Exact arithmetic in GF(p) and GF(p^m) for odd p, plus the deterministic
// choice of modulus and primitive element used to drive the sequence
// generators.
//
// Polynomials and field elements are stored constant term first everywhere.

#include <cstdint>
#include <optional>
#include <vector>

namespace legseq {

using Coeff = std::uint64_t;

/// Polynomial over GF(p), constant term first.
using PrimePoly = std::vector<Coeff>;

struct ExtFieldElement {
  std::vector<Coeff> coeffs;  // exactly m entries, each in [0, p)

  friend bool operator==(const ExtFieldElement&, const ExtFieldElement&) = default;
};

struct FieldLimits {
  // Refuse fields with p^m above this; keeps every product below 2^64.
  std::uint64_t max_order = std::uint64_t{1} << 31;
};

// ---- prime-field helpers -------------------------------------------------

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n (trial division), ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Legendre symbol (a/p) by Euler's criterion. Throws ParameterError unless p
/// is an odd prime.
int legendre(std::uint64_t p, std::int64_t a);

/// The representative of a mod n lying in {1, ..., n}. Throws for n <= 1.
std::int64_t underline_mod(std::int64_t a, std::int64_t n);

/// p^m, or ParameterError when it exceeds the limit.
std::uint64_t checked_field_order(std::uint64_t p, unsigned m, const FieldLimits& limits = {});

/// Rabin's test. `f` must be monic with degree >= 1 and coefficients < p.
bool is_irreducible(std::uint64_t p, const PrimePoly& f);

/// Lexicographically smallest (constant term compared first) monic
/// irreducible polynomial of degree m over GF(p).
PrimePoly find_irreducible(std::uint64_t p, unsigned m, const FieldLimits& limits = {});

// ---- extension field -----------------------------------------------------

/// GF(p)[x] / (f). Immutable once built.
class ExtensionField {
 public:
  /// Validates p, m, the magnitude bound and irreducibility of `modulus`.
  static ExtensionField create(std::uint64_t p, unsigned m, PrimePoly modulus,
                               const FieldLimits& limits = {});

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint64_t order() const { return order_; }
  const PrimePoly& modulus() const { return modulus_; }

  ExtFieldElement zero() const;
  ExtFieldElement one() const;
  ExtFieldElement constant(Coeff c) const;
  /// Checks length and range; throws ParameterError otherwise.
  ExtFieldElement element(std::vector<Coeff> coeffs) const;

  bool is_zero(const ExtFieldElement& a) const;
  ExtFieldElement add(const ExtFieldElement& a, const ExtFieldElement& b) const;
  ExtFieldElement sub(const ExtFieldElement& a, const ExtFieldElement& b) const;
  ExtFieldElement mul(const ExtFieldElement& a, const ExtFieldElement& b) const;
  ExtFieldElement pow(ExtFieldElement base, std::uint64_t exp) const;
  /// a^(q-2); throws ParameterError for zero.
  ExtFieldElement inverse(const ExtFieldElement& a) const;
  ExtFieldElement frobenius(const ExtFieldElement& a) const { return pow(a, p_); }

  /// a + a^p + ... + a^(p^(m-1)), evaluated from the conjugates.
  Coeff trace(const ExtFieldElement& a) const;

  /// Element with the given index in lexicographic coefficient order
  /// (coefficient 0 most significant). Index 0 is zero.
  ExtFieldElement from_index(std::uint64_t index) const;

 private:
  ExtensionField(std::uint64_t p, unsigned m, PrimePoly modulus, std::uint64_t order);

  std::uint64_t p_;
  unsigned m_;
  PrimePoly modulus_;
  std::uint64_t order_;
};

/// Trace as a GF(p)-linear form: Tr(a) = sum a_i Tr(alpha^i).
/// Agrees with ExtensionField::trace; used on hot paths.
class TraceForm {
 public:
  explicit TraceForm(const ExtensionField& field);
  Coeff operator()(const ExtFieldElement& a) const;
  const std::vector<Coeff>& basis_traces() const { return basis_traces_; }

 private:
  std::uint64_t p_;
  std::vector<Coeff> basis_traces_;
};

/// True iff w has multiplicative order exactly q - 1.
bool is_primitive(const ExtensionField& field, const ExtFieldElement& w);

/// First primitive element in lexicographic coefficient order.
ExtFieldElement find_primitive(const ExtensionField& field);

/// (p, m, f, omega) together with the sequence period N = 2(p^m - 1)/(p - 1).
class FieldContext {
 public:
  /// Missing modulus / omega are found by the deterministic searches.
  /// Throws ParameterError for bad p, m or malformed overrides and
  /// FieldConstructionError for a reducible modulus or non-primitive omega.
  static FieldContext create(std::uint64_t p, unsigned m,
                             std::optional<PrimePoly> modulus = std::nullopt,
                             std::optional<std::vector<Coeff>> omega = std::nullopt,
                             const FieldLimits& limits = {});

  const ExtensionField& field() const { return field_; }
  std::uint64_t p() const { return field_.characteristic(); }
  unsigned m() const { return field_.degree(); }
  const PrimePoly& modulus() const { return field_.modulus(); }
  const ExtFieldElement& omega() const { return omega_; }
  const TraceForm& trace_form() const { return trace_form_; }
  /// N, the period of both geometric sequences.
  std::size_t period() const { return period_; }

 private:
  FieldContext(ExtensionField field, ExtFieldElement omega);

  ExtensionField field_;
  ExtFieldElement omega_;
  TraceForm trace_form_;
  std::size_t period_;
};

}  // namespace legseq
