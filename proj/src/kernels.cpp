#include "legseq/kernels.hpp"

#include <bit>
#include <string>

#include "legseq/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace legseq::kernels {

namespace {

void check_shapes(Bits a, Bits b) {
  if (a.empty()) throw ParameterError("cannot correlate empty sequences");
  if (a.size() != b.size()) {
    throw ParameterError("period mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

std::int64_t correlate_at(Bits a, Bits b, std::size_t tau) {
  const std::size_t n = a.size();
  std::int64_t sum = 0;
  // split at the wrap point so the inner loops carry no modulo
  const std::size_t head = n - tau;
  for (std::size_t i = 0; i < head; ++i) sum += (a[i] ^ b[i + tau]) ? -1 : 1;
  for (std::size_t i = head; i < n; ++i) sum += (a[i] ^ b[i + tau - n]) ? -1 : 1;
  return sum;
}

std::vector<std::uint64_t> pack(Bits bits, std::size_t length) {
  const std::size_t n = bits.size();
  std::vector<std::uint64_t> words((length + 63) / 64 + 1, 0);
  for (std::size_t k = 0; k < length; ++k) {
    if (bits[k % n]) words[k / 64] |= std::uint64_t{1} << (k % 64);
  }
  return words;
}

}  // namespace

std::vector<std::int64_t> correlate_reference(Bits a, Bits b) {
  check_shapes(a, b);
  const std::size_t n = a.size();
  std::vector<std::int64_t> out(n);
  for (std::size_t tau = 0; tau < n; ++tau) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += (a[i] ^ b[(i + tau) % n]) ? -1 : 1;
    out[tau] = sum;
  }
  return out;
}

std::vector<std::int64_t> correlate_parallel(Bits a, Bits b) {
  check_shapes(a, b);
  const auto n = static_cast<std::int64_t>(a.size());
  std::vector<std::int64_t> out(a.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t tau = 0; tau < n; ++tau) {
    out[static_cast<std::size_t>(tau)] = correlate_at(a, b, static_cast<std::size_t>(tau));
  }
  return out;
}

std::vector<std::int64_t> correlate_packed(Bits a, Bits b) {
  check_shapes(a, b);
  const std::size_t n = a.size();
  const std::size_t words = (n + 63) / 64;
  const std::vector<std::uint64_t> lhs = pack(a, n);
  // b repeated so that any window of n bits starting below n is contiguous
  const std::vector<std::uint64_t> rhs = pack(b, 2 * n + 64);
  const std::uint64_t tail_mask =
      n % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n % 64)) - 1;

  std::vector<std::int64_t> out(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(n); ++t) {
    const auto tau = static_cast<std::size_t>(t);
    const std::size_t base = tau / 64;
    const unsigned shift = static_cast<unsigned>(tau % 64);
    std::int64_t disagreements = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t window = rhs[base + w] >> shift;
      if (shift != 0) window |= rhs[base + w + 1] << (64 - shift);
      std::uint64_t diff = lhs[w] ^ window;
      if (w + 1 == words) diff &= tail_mask;
      disagreements += std::popcount(diff);
    }
    out[tau] = static_cast<std::int64_t>(n) - 2 * disagreements;
  }
  return out;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace legseq::kernels
