#pragma once

// Exact integer helpers shared by the quotient and topology code.
//
// Every routine here is integer-only. Intermediate products and sums are
// carried in 128-bit arithmetic and narrowed back to 64 bits with an overflow
// check, so results are either exact or an std::overflow_error is thrown.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace extquot {

__extension__ typedef __int128 int128;

/// Narrow a 128-bit intermediate to 64 bits; throws std::overflow_error.
std::int64_t narrow(int128 value);

/// gcd of a nonempty list of nonnegative integers, not all zero.
std::int64_t gcd_many(std::span<const std::int64_t> values);
std::int64_t gcd_many(std::initializer_list<std::int64_t> values);

/// Pillai's arithmetical function: sum of gcd(a, s) for s = 0 .. a-1.
std::int64_t pillai(std::int64_t a);

/// Same value as pillai(), computed as a * sum_{d | a} phi(d)/d in exact
/// rationals. Throws std::logic_error if the product is not integral.
std::int64_t pillai_via_totient(std::int64_t a);

std::int64_t totient(std::int64_t d);
std::int64_t divisor_sigma(std::int64_t n);

/// Positive divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Exponent v with 2^v exactly dividing n (n != 0).
int two_adic_valuation(std::int64_t n);

/// floor(sqrt(n)) for n >= 0, integer arithmetic only.
std::int64_t isqrt(std::int64_t n);

/// Square integer matrix with determinant exactly +1.
///
/// Instances only come out of unimodular_completion(), which maintains the
/// determinant invariant by construction.
class UnimodularMatrix {
 public:
  std::size_t size() const { return size_; }
  std::int64_t operator()(std::size_t row, std::size_t col) const {
    return entries_[row * size_ + col];
  }
  std::vector<std::int64_t> column(std::size_t col) const;
  std::vector<std::vector<std::int64_t>> rows() const;

  /// Fraction-free (Bareiss) elimination in 128-bit arithmetic.
  int128 determinant() const;

 private:
  friend UnimodularMatrix unimodular_completion(std::span<const std::int64_t>);
  explicit UnimodularMatrix(std::size_t size);
  std::int64_t& at(std::size_t row, std::size_t col) {
    return entries_[row * size_ + col];
  }

  std::size_t size_;
  std::vector<std::int64_t> entries_;
};

/// Integer matrix of determinant 1 whose first column is v / gcd(v).
///
/// Built as a product of 2x2 extended-Euclid blocks that reduce v/gcd(v) to
/// the first unit vector; the inverse of that product is returned. Throws
/// std::domain_error for the zero vector, and for a length-1 vector with a
/// negative entry (SL_1(Z) is trivial).
UnimodularMatrix unimodular_completion(std::span<const std::int64_t> v);

}  // namespace extquot
