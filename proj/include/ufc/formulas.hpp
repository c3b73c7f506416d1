#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>

#include "ufc/error.hpp"

// Closed-form state complexities. The "max_*" functions are the tight upper
// bounds for arbitrary regular languages; the witness stream of this
// library is expected to meet them exactly.

namespace ufc::formulas {

namespace detail {

inline std::uint64_t mul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw precondition_error("formula: 64-bit overflow");
  return r;
}

inline std::uint64_t add(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw precondition_error("formula: 64-bit overflow");
  return r;
}

}  // namespace detail

inline std::uint64_t pow2(std::size_t e) {
  if (e >= 64) throw precondition_error("formula: 2^" + std::to_string(e) + " overflows 64 bits");
  return std::uint64_t{1} << e;
}

inline std::uint64_t power(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t j = 0; j < e; ++j) r = detail::mul(r, base);
  return r;
}

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t j = 1; j <= k; ++j) r = detail::mul(r, n - k + j) / j;
  return r;
}

/// Syntactic semigroup size: n^n.
inline std::uint64_t max_semigroup(std::size_t n) { return power(n, n); }

/// Reversal (and number of atoms): 2^n.
inline std::uint64_t max_reversal(std::size_t n) { return pow2(n); }

/// Star: 2^{n-1} + 2^{n-2} for n >= 2; the star of the empty language
/// needs 2 states, so n = 1 gives 2.
inline std::uint64_t max_star(std::size_t n) {
  if (n < 2) return 2;
  return pow2(n - 1) + pow2(n - 2);
}

/// Restricted product: (m-1)2^n + 2^{n-1}.
inline std::uint64_t max_product(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw precondition_error("formula: complexities must be positive");
  return detail::add(detail::mul(m - 1, pow2(n)), pow2(n - 1));
}

/// Unrestricted product: m 2^n + 2^{n-1}.
inline std::uint64_t max_product_unrestricted(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw precondition_error("formula: complexities must be positive");
  return detail::add(detail::mul(m, pow2(n)), pow2(n - 1));
}

/// Restricted boolean operations: mn.
inline std::uint64_t max_boolean(std::size_t m, std::size_t n) { return detail::mul(m, n); }

/// Unrestricted union and symmetric difference: (m+1)(n+1).
inline std::uint64_t max_boolean_unrestricted(std::size_t m, std::size_t n) {
  return detail::mul(m + 1, n + 1);
}

/// Unrestricted difference of the boolean witness pair: mn + n.
inline std::uint64_t witness_difference_unrestricted(std::size_t m, std::size_t n) {
  return detail::add(detail::mul(m, n), n);
}

/// Maximal complexity of the atom A_S with |S| = s of a language of
/// complexity n: 2^n - 1 when S is empty or full, otherwise
/// 1 + sum_{x=1}^{s} sum_{y=1}^{n-s} C(n,x) C(n-x,y).
inline std::uint64_t atom_complexity(std::size_t n, std::size_t s) {
  if (n == 0) throw precondition_error("atom formula: n must be positive");
  if (s > n) throw precondition_error("atom formula: |S| = " + std::to_string(s) + " exceeds n = " + std::to_string(n));
  if (s == 0 || s == n) return pow2(n) - 1;
  std::uint64_t total = 1;
  for (std::size_t x = 1; x <= s; ++x)
    for (std::size_t y = 1; y <= n - s; ++y)
      total = detail::add(total, detail::mul(binomial(n, x), binomial(n - x, y)));
  return total;
}

}  // namespace ufc::formulas
