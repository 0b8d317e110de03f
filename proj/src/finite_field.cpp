#include "legseq/finite_field.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "legseq/errors.hpp"

namespace legseq {

namespace {

__extension__ using Wide = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % mod);
}

void require_odd_prime(std::uint64_t p) {
  if (p <= 2 || !is_prime(p)) {
    throw ParameterError("p must be an odd prime (got " + std::to_string(p) + ")");
  }
}

// ---- GF(p)[x] scratch arithmetic used by the irreducibility test ----------

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f for monic f.
PrimePoly reduce_monic(PrimePoly a, const PrimePoly& f, std::uint64_t p) {
  const std::size_t df = f.size() - 1;
  for (std::size_t k = a.size(); k-- > df;) {
    const Coeff c = a[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= df; ++i) {
      const std::size_t idx = k - df + i;
      a[idx] = (a[idx] + p - mul_mod(c, f[i], p)) % p;
    }
  }
  if (a.size() > df) a.resize(df);
  trim(a);
  return a;
}

PrimePoly mul_reduce(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
  }
  return reduce_monic(std::move(r), f, p);
}

PrimePoly pow_reduce(PrimePoly base, std::uint64_t exp, const PrimePoly& f, std::uint64_t p) {
  PrimePoly result{1};
  while (exp > 0) {
    if (exp & 1) result = mul_reduce(result, base, f, p);
    base = mul_reduce(base, base, f, p);
    exp >>= 1;
  }
  return result;
}

PrimePoly sub_poly(PrimePoly a, const PrimePoly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// Remainder of a by a nonzero (not necessarily monic) b.
PrimePoly rem_poly(PrimePoly a, const PrimePoly& b, std::uint64_t p) {
  const std::size_t db = b.size() - 1;
  const Coeff lead_inv = pow_mod(b.back(), p - 2, p);
  trim(a);
  while (a.size() > db) {
    const std::size_t k = a.size() - 1;
    const Coeff c = mul_mod(a.back(), lead_inv, p);
    for (std::size_t i = 0; i <= db; ++i) {
      const std::size_t idx = k - db + i;
      a[idx] = (a[idx] + p - mul_mod(c, b[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

PrimePoly gcd_poly(PrimePoly a, PrimePoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = rem_poly(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

// ---- prime-field helpers -------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

int legendre(std::uint64_t p, std::int64_t a) {
  require_odd_prime(p);
  const auto sp = static_cast<std::int64_t>(p);
  const auto r = static_cast<std::uint64_t>(((a % sp) + sp) % sp);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::int64_t underline_mod(std::int64_t a, std::int64_t n) {
  if (n <= 1) throw ParameterError("underline_mod needs a modulus > 1");
  const std::int64_t r = ((a % n) + n) % n;
  return r == 0 ? n : r;
}

std::uint64_t checked_field_order(std::uint64_t p, unsigned m, const FieldLimits& limits) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q > limits.max_order / p) {
      throw ParameterError("p^m = " + std::to_string(p) + "^" + std::to_string(m) +
                           " exceeds the field size limit " + std::to_string(limits.max_order));
    }
    q *= p;
  }
  return q;
}

bool is_irreducible(std::uint64_t p, const PrimePoly& f) {
  if (f.size() < 2 || f.back() != 1) {
    throw ParameterError("irreducibility test needs a monic polynomial of degree >= 1");
  }
  const auto m = static_cast<unsigned>(f.size() - 1);
  if (m == 1) return true;
  if (f[0] == 0) return false;  // divisible by x

  // x^(p^k) mod f for k = 0..m
  std::vector<PrimePoly> frob;
  frob.reserve(m + 1);
  frob.push_back(reduce_monic({0, 1}, f, p));
  for (unsigned k = 1; k <= m; ++k) frob.push_back(pow_reduce(frob.back(), p, f, p));

  if (frob[m] != frob[0]) return false;
  for (const std::uint64_t q : prime_factors(m)) {
    const PrimePoly diff = sub_poly(frob[m / q], frob[0], p);
    if (gcd_poly(f, diff, p).size() > 1) return false;
  }
  return true;
}

PrimePoly find_irreducible(std::uint64_t p, unsigned m, const FieldLimits& limits) {
  require_odd_prime(p);
  if (m <= 1) throw ParameterError("m must be > 1");
  const std::uint64_t q = checked_field_order(p, m, limits);

  PrimePoly f(m + 1, 0);
  f[m] = 1;
  // Enumerate (c0, ..., c_{m-1}) with c0 most significant.
  for (std::uint64_t index = 0; index < q; ++index) {
    std::uint64_t rest = index;
    for (unsigned i = m; i-- > 0;) {
      f[i] = rest % p;
      rest /= p;
    }
    if (f[0] != 0 && is_irreducible(p, f)) return f;
  }
  throw FieldConstructionError("no irreducible polynomial found");  // unreachable
}

// ---- ExtensionField ------------------------------------------------------

ExtensionField::ExtensionField(std::uint64_t p, unsigned m, PrimePoly modulus, std::uint64_t order)
    : p_(p), m_(m), modulus_(std::move(modulus)), order_(order) {}

ExtensionField ExtensionField::create(std::uint64_t p, unsigned m, PrimePoly modulus,
                                      const FieldLimits& limits) {
  require_odd_prime(p);
  if (m <= 1) throw ParameterError("m must be > 1");
  const std::uint64_t q = checked_field_order(p, m, limits);
  if (modulus.size() != m + 1) {
    throw ParameterError("irreducible polynomial must have " + std::to_string(m + 1) +
                         " coefficients (degree m, constant term first)");
  }
  if (modulus.back() != 1) throw ParameterError("irreducible polynomial must be monic");
  if (std::any_of(modulus.begin(), modulus.end(), [p](Coeff c) { return c >= p; })) {
    throw ParameterError("polynomial coefficients must lie in [0, p)");
  }
  if (!is_irreducible(p, modulus)) {
    throw FieldConstructionError("polynomial is reducible over GF(" + std::to_string(p) + ")");
  }
  return ExtensionField(p, m, std::move(modulus), q);
}

ExtFieldElement ExtensionField::zero() const { return {std::vector<Coeff>(m_, 0)}; }

ExtFieldElement ExtensionField::one() const { return constant(1); }

ExtFieldElement ExtensionField::constant(Coeff c) const {
  ExtFieldElement r = zero();
  r.coeffs[0] = c % p_;
  return r;
}

ExtFieldElement ExtensionField::element(std::vector<Coeff> coeffs) const {
  if (coeffs.size() != m_) {
    throw ParameterError("field element must have exactly " + std::to_string(m_) + " coefficients");
  }
  if (std::any_of(coeffs.begin(), coeffs.end(), [this](Coeff c) { return c >= p_; })) {
    throw ParameterError("field element coefficients must lie in [0, p)");
  }
  return {std::move(coeffs)};
}

bool ExtensionField::is_zero(const ExtFieldElement& a) const {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](Coeff c) { return c == 0; });
}

ExtFieldElement ExtensionField::add(const ExtFieldElement& a, const ExtFieldElement& b) const {
  ExtFieldElement r = a;
  for (unsigned i = 0; i < m_; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
  return r;
}

ExtFieldElement ExtensionField::sub(const ExtFieldElement& a, const ExtFieldElement& b) const {
  ExtFieldElement r = a;
  for (unsigned i = 0; i < m_; ++i) r.coeffs[i] = (a.coeffs[i] + p_ - b.coeffs[i]) % p_;
  return r;
}

ExtFieldElement ExtensionField::mul(const ExtFieldElement& a, const ExtFieldElement& b) const {
  std::vector<Coeff> wide(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) {
      wide[i + j] = (wide[i + j] + mul_mod(a.coeffs[i], b.coeffs[j], p_)) % p_;
    }
  }
  // x^m = -(f_0 + ... + f_{m-1} x^{m-1})
  for (std::size_t k = wide.size(); k-- > m_;) {
    const Coeff c = wide[k];
    if (c == 0) continue;
    for (unsigned i = 0; i < m_; ++i) {
      const std::size_t idx = k - m_ + i;
      wide[idx] = (wide[idx] + p_ - mul_mod(c, modulus_[i], p_)) % p_;
    }
  }
  wide.resize(m_);
  return {std::move(wide)};
}

ExtFieldElement ExtensionField::pow(ExtFieldElement base, std::uint64_t exp) const {
  ExtFieldElement result = one();
  while (exp > 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

ExtFieldElement ExtensionField::inverse(const ExtFieldElement& a) const {
  if (is_zero(a)) throw ParameterError("zero has no multiplicative inverse");
  return pow(a, order_ - 2);
}

Coeff ExtensionField::trace(const ExtFieldElement& a) const {
  ExtFieldElement sum = a;
  ExtFieldElement conj = a;
  for (unsigned k = 1; k < m_; ++k) {
    conj = frobenius(conj);
    sum = add(sum, conj);
  }
  for (unsigned i = 1; i < m_; ++i) {
    if (sum.coeffs[i] != 0) throw VerificationError("trace left the prime subfield");
  }
  return sum.coeffs[0];
}

ExtFieldElement ExtensionField::from_index(std::uint64_t index) const {
  ExtFieldElement r = zero();
  for (unsigned i = m_; i-- > 0;) {
    r.coeffs[i] = index % p_;
    index /= p_;
  }
  return r;
}

// ---- TraceForm -----------------------------------------------------------

TraceForm::TraceForm(const ExtensionField& field) : p_(field.characteristic()) {
  basis_traces_.reserve(field.degree());
  ExtFieldElement basis = field.one();
  ExtFieldElement alpha = field.zero();
  alpha.coeffs[1] = 1;
  for (unsigned i = 0; i < field.degree(); ++i) {
    basis_traces_.push_back(field.trace(basis));
    basis = field.mul(basis, alpha);
  }
}

Coeff TraceForm::operator()(const ExtFieldElement& a) const {
  Coeff acc = 0;
  for (std::size_t i = 0; i < basis_traces_.size(); ++i) {
    acc = (acc + mul_mod(a.coeffs[i], basis_traces_[i], p_)) % p_;
  }
  return acc;
}

// ---- primitive elements --------------------------------------------------

bool is_primitive(const ExtensionField& field, const ExtFieldElement& w) {
  if (field.is_zero(w)) return false;
  const std::uint64_t group = field.order() - 1;
  const ExtFieldElement one = field.one();
  for (const std::uint64_t q : prime_factors(group)) {
    if (field.pow(w, group / q) == one) return false;
  }
  return true;
}

ExtFieldElement find_primitive(const ExtensionField& field) {
  for (std::uint64_t index = 1; index < field.order(); ++index) {
    ExtFieldElement w = field.from_index(index);
    if (is_primitive(field, w)) return w;
  }
  throw FieldConstructionError("no primitive element found");  // unreachable
}

// ---- FieldContext --------------------------------------------------------

FieldContext::FieldContext(ExtensionField field, ExtFieldElement omega)
    : field_(std::move(field)),
      omega_(std::move(omega)),
      trace_form_(field_),
      period_(static_cast<std::size_t>(2 * (field_.order() - 1) / (field_.characteristic() - 1))) {}

FieldContext FieldContext::create(std::uint64_t p, unsigned m, std::optional<PrimePoly> modulus,
                                  std::optional<std::vector<Coeff>> omega,
                                  const FieldLimits& limits) {
  require_odd_prime(p);
  if (m <= 1) throw ParameterError("m must be > 1");
  checked_field_order(p, m, limits);

  PrimePoly f = modulus ? std::move(*modulus) : find_irreducible(p, m, limits);
  ExtensionField field = ExtensionField::create(p, m, std::move(f), limits);

  ExtFieldElement w;
  if (omega) {
    w = field.element(std::move(*omega));
    if (!is_primitive(field, w)) {
      throw FieldConstructionError("omega is not a primitive element of GF(" + std::to_string(p) +
                                   "^" + std::to_string(m) + ")");
    }
  } else {
    w = find_primitive(field);
  }
  return FieldContext(std::move(field), std::move(w));
}

}  // namespace legseq
