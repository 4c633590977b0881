#include "extquot/numtheory.hpp"

#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/rational.hpp>

namespace extquot {

namespace {

void require_positive(std::int64_t value, const char* what) {
  if (value < 1) {
    throw std::domain_error(std::string(what) + ": argument must be positive, got " +
                            std::to_string(value));
  }
}

struct Bezout {
  std::int64_t g, s, t;  // s*x + t*y = g >= 0
};

Bezout extended_gcd(std::int64_t x, std::int64_t y) {
  std::int64_t old_r = x, r = y;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

}  // namespace

std::int64_t narrow(int128 value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer result exceeds 64 bits");
  }
  return static_cast<std::int64_t>(value);
}

std::int64_t gcd_many(std::span<const std::int64_t> values) {
  if (values.empty()) throw std::domain_error("gcd_many: empty list");
  std::int64_t g = 0;
  for (std::int64_t v : values) {
    if (v < 0) throw std::domain_error("gcd_many: negative value");
    g = std::gcd(g, v);
  }
  if (g == 0) throw std::domain_error("gcd_many: all values are zero");
  return g;
}

std::int64_t gcd_many(std::initializer_list<std::int64_t> values) {
  return gcd_many(std::span<const std::int64_t>(values.begin(), values.size()));
}

std::int64_t pillai(std::int64_t a) {
  require_positive(a, "pillai");
  int128 sum = a;  // gcd(a, 0)
  for (std::int64_t s = 1; s < a; ++s) sum += std::gcd(a, s);
  return narrow(sum);
}

std::int64_t pillai_via_totient(std::int64_t a) {
  require_positive(a, "pillai_via_totient");
  boost::rational<std::int64_t> sum(0);
  for (std::int64_t d : divisors(a)) sum += boost::rational<std::int64_t>(totient(d), d);
  const boost::rational<std::int64_t> scaled = sum * a;
  if (scaled.denominator() != 1) {
    throw std::logic_error("pillai_via_totient: non-integral result for a = " +
                           std::to_string(a));
  }
  return scaled.numerator();
}

std::int64_t totient(std::int64_t d) {
  require_positive(d, "totient");
  std::int64_t result = d;
  std::int64_t rest = d;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  require_positive(n, "divisors");
  std::vector<std::int64_t> low, high;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::int64_t divisor_sigma(std::int64_t n) {
  int128 sum = 0;
  for (std::int64_t d : divisors(n)) sum += d;
  return narrow(sum);
}

int two_adic_valuation(std::int64_t n) {
  if (n == 0) throw std::domain_error("two_adic_valuation: zero has no 2-adic valuation");
  return std::countr_zero(static_cast<std::uint64_t>(n < 0 ? -n : n));
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  // Binary search on r*r <= n; r*r computed in 128 bits.
  std::int64_t lo = 0, hi = std::int64_t{1} << 32;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (static_cast<int128>(mid) * mid <= n) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

// ---------------------------------------------------------------------------

UnimodularMatrix::UnimodularMatrix(std::size_t size)
    : size_(size), entries_(size * size, 0) {
  for (std::size_t i = 0; i < size; ++i) at(i, i) = 1;
}

std::vector<std::int64_t> UnimodularMatrix::column(std::size_t col) const {
  std::vector<std::int64_t> out(size_);
  for (std::size_t r = 0; r < size_; ++r) out[r] = (*this)(r, col);
  return out;
}

std::vector<std::vector<std::int64_t>> UnimodularMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(size_);
  for (std::size_t r = 0; r < size_; ++r) {
    out[r].assign(entries_.begin() + static_cast<std::ptrdiff_t>(r * size_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * size_));
  }
  return out;
}

int128 UnimodularMatrix::determinant() const {
  const std::size_t n = size_;
  std::vector<int128> m(entries_.begin(), entries_.end());
  auto cell = [&](std::size_t r, std::size_t c) -> int128& { return m[r * n + c]; };
  int128 sign = 1;
  int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (cell(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && cell(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(cell(k, c), cell(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        cell(i, j) = (cell(i, j) * cell(k, k) - cell(i, k) * cell(k, j)) / prev;
      }
    }
    prev = cell(k, k);
  }
  return n == 0 ? 1 : sign * cell(n - 1, n - 1);
}

UnimodularMatrix unimodular_completion(std::span<const std::int64_t> v) {
  if (v.empty()) throw std::domain_error("unimodular_completion: empty vector");
  std::int64_t content = 0;
  for (std::int64_t x : v) content = std::gcd(content, x);
  if (content == 0) throw std::domain_error("unimodular_completion: zero vector");

  std::vector<std::int64_t> w(v.begin(), v.end());
  for (auto& x : w) x /= content;
  const std::size_t b = w.size();
  if (b == 1 && w[0] != 1) {
    throw std::domain_error("unimodular_completion: SL_1(Z) has no matrix with first entry -1");
  }

  // Sweep from the bottom: the block [[s, t], [-y/g, x/g]] (det 1) sends
  // (x, y) to (g, 0). After the sweep w = e_1, and the accumulated inverse
  // blocks form a matrix whose first column is the original w.
  UnimodularMatrix inverse(b);
  for (std::size_t i = b - 1; i >= 1; --i) {
    const std::int64_t x = w[i - 1], y = w[i];
    if (y != 0) {
      const Bezout e = extended_gcd(x, y);
      const std::int64_t xg = x / e.g, yg = y / e.g;
      // inverse <- inverse * [[x/g, -t], [y/g, s]] on columns (i-1, i).
      for (std::size_t r = 0; r < b; ++r) {
        const int128 left = inverse.at(r, i - 1), right = inverse.at(r, i);
        inverse.at(r, i - 1) = narrow(left * xg + right * yg);
        inverse.at(r, i) = narrow(-left * e.t + right * e.s);
      }
      w[i - 1] = e.g;
      w[i] = 0;
    }
  }
  // w[0] is now gcd(w) = 1 unless every entry but the first was zero and the
  // first is -1; a sign flip of two columns keeps det = 1 in that case.
  if (w[0] == -1) {
    for (std::size_t r = 0; r < b; ++r) {
      inverse.at(r, 0) = -inverse.at(r, 0);
      inverse.at(r, 1) = -inverse.at(r, 1);
    }
  }
  return inverse;
}

}  // namespace extquot
