#include "rule150/counting.hpp"

#include "rule150/eca.hpp"
#include "rule150/errors.hpp"

namespace rule150 {

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
           a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
}

Mat2 Mat2::pow(unsigned long k) const {
  Mat2 result = identity(), base = *this;
  while (k != 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

Row2 Row2::operator*(const Mat2& m) const {
  return {x * m.e[0] + y * m.e[2], x * m.e[1] + y * m.e[3]};
}

namespace matrices {
Mat2 cumulative() { return {{2, 4, 1, 0}}; }
Mat2 digit(bool b) { return b ? Mat2{{1, 2, 1, 0}} : Mat2{{1, 0, 1, 0}}; }
}  // namespace matrices

std::vector<Nat> num_direct_table(std::size_t n) {
  std::vector<Nat> out;
  out.reserve(n + 1);
  auto row = single_site_seed();
  for (std::size_t t = 0; t <= n; ++t) {
    out.emplace_back(static_cast<unsigned long>(row.popcount()));
    if (t < n) row = step_rule150(row);
  }
  return out;
}

std::vector<Nat> cum_direct_table(std::size_t n) {
  auto out = num_direct_table(n);
  for (std::size_t t = 1; t < out.size(); ++t) out[t] += out[t - 1];
  return out;
}

Nat num_direct(std::int64_t n) {
  if (n < -1) throw DomainError("num is defined for n >= -1");
  if (n == -1) return 0;
  return num_direct_table(static_cast<std::size_t>(n)).back();
}

Nat cum_direct(std::int64_t n) {
  if (n < -1) throw DomainError("cum is defined for n >= -1");
  if (n == -1) return 0;
  return cum_direct_table(static_cast<std::size_t>(n)).back();
}

namespace {

std::vector<std::uint8_t> digits_msb_first(const Nat& n) {
  if (sgn(n) < 0) throw DomainError("expected a nonnegative integer");
  if (sgn(n) == 0) return {};
  const std::size_t len = mpz_sizeinbase(n.get_mpz_t(), 2);
  std::vector<std::uint8_t> d(len);
  for (std::size_t j = 0; j < len; ++j) d[j] = mpz_tstbit(n.get_mpz_t(), len - 1 - j);
  return d;
}

}  // namespace

Nat num_of_word(const std::vector<std::uint8_t>& word) {
  const Mat2 m0 = matrices::digit(false), m1 = matrices::digit(true);
  Row2 row = matrices::start();
  for (auto b : word) row = row * (b ? m1 : m0);
  return row.dot(1, 1);
}

Nat num_matrix(const Nat& n) { return num_of_word(digits_msb_first(n)); }

Nat cluster_value(unsigned long run_length) {
  Nat v = pow2(run_length + 2);
  if (run_length % 2 == 0) v -= 1; else v += 1;
  return v / 3;
}

Nat num_cluster(const Nat& n) {
  if (sgn(n) < 0) throw DomainError("expected a nonnegative integer");
  Nat product = 1;
  const std::size_t len = sgn(n) == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
  unsigned long run = 0;
  for (std::size_t j = 0; j <= len; ++j) {
    const bool bit = j < len && mpz_tstbit(n.get_mpz_t(), j);
    if (bit) {
      ++run;
    } else if (run != 0) {
      product *= cluster_value(run);
      run = 0;
    }
  }
  return product;
}

Nat cum_pow2(unsigned long k) {
  if (k == 0) return 1;
  const Row2 r = matrices::start() * matrices::cumulative().pow(k - 1);
  return r.dot(4, 1);
}

QSqrt5 cum_pow2_closed(unsigned long k) {
  if (k < 1) throw DomainError("closed form holds for k >= 1");
  const QSqrt5 plus(1, 1, 1), minus(1, -1, 1);
  const QSqrt5 coeff(0, 1, 20);  // sqrt5 / 20
  return coeff * (plus.pow(k + 2) - minus.pow(k + 2));
}

namespace {

// Shared digit walk for the decomposition; `cum_block(j)` must return cum(2^j - 1).
template <typename CumBlock, typename NumPrefix>
Nat decompose(const Nat& m, CumBlock cum_block, NumPrefix num_prefix) {
  if (sgn(m) <= 0) throw DomainError("cum_decompose needs m >= 1");
  const auto digits = digits_msb_first(m);
  const std::size_t k = digits.size();
  Nat total = 0;
  for (std::size_t i = 1; i <= k; ++i) {
    if (!digits[i - 1]) continue;
    const std::vector<std::uint8_t> prefix(digits.begin(), digits.begin() + (i - 1));
    total += num_prefix(prefix) * cum_block(k - i);
  }
  return total;
}

}  // namespace

Nat cum_decompose(const Nat& m) {
  if (sgn(m) <= 0) throw DomainError("cum_decompose needs m >= 1");
  // Streamed form: the prefix row vector is extended one digit at a time and
  // the block counts a M^{j-1} v_0 are tabulated once.
  const auto digits = digits_msb_first(m);
  const std::size_t k = digits.size();
  std::vector<Nat> block(k);
  block[0] = 1;
  if (k > 1) {
    Row2 r = matrices::start();
    const Mat2 big = matrices::cumulative();
    for (std::size_t j = 1; j < k; ++j) {
      block[j] = r.dot(4, 1);
      r = r * big;
    }
  }
  const Mat2 m0 = matrices::digit(false), m1 = matrices::digit(true);
  Row2 prefix = matrices::start();
  Nat total = 0;
  for (std::size_t i = 1; i <= k; ++i) {
    if (digits[i - 1]) total += prefix.dot(1, 1) * block[k - i];
    prefix = prefix * (digits[i - 1] ? m1 : m0);
  }
  return total;
}

Nat cum_matrix(const Nat& n) {
  if (n < -1) throw DomainError("cum is defined for n >= -1");
  if (n == -1) return 0;
  return cum_decompose(n + 1);
}

Nat cum_closed(const Nat& n) {
  if (n < -1) throw DomainError("cum is defined for n >= -1");
  if (n == -1) return 0;
  return decompose(
      n + 1,
      [](std::size_t j) -> Nat {
        if (j == 0) return 1;
        return cum_pow2_closed(j).rational().get_num();
      },
      [](const std::vector<std::uint8_t>& prefix) {
        Nat value = 0;
        for (auto b : prefix) {
          value <<= 1;
          if (b) value += 1;
        }
        return num_cluster(value);
      });
}

}  // namespace rule150
