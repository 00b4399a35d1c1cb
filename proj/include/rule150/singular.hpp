#pragma once

#include <cstdint>
#include <vector>

#include "rule150/bigint.hpp"
#include "rule150/counting.hpp"
#include "rule150/quadratic.hpp"

namespace rule150 {

/// Streaming state for the coefficients r(x)_i of the series
/// F(x) = sum_i x_i r(x)_i alpha^i.
///
/// Holds the row vector a M_{x_1} ... M_{x_{i-1}}; r(x)_i is its inner
/// product with u_0 = (1, 1). Starts at i = 1 with r = 1.
class RunState {
 public:
  RunState() = default;

  /// Consumes x_i and advances to position i + 1.
  void push(bool bit);

  /// r(x)_i at the current position.
  Nat r() const { return row_.x + row_.y; }
  std::size_t position() const noexcept { return position_; }
  /// Length of the run of 1s ending at the last consumed bit.
  unsigned long run_length() const noexcept { return run_; }
  const Row2& row() const noexcept { return row_; }

 private:
  Row2 row_ = matrices::start();
  std::size_t position_ = 1;
  unsigned long run_ = 0;
};

/// r(x)_1 .. r(x)_k.
std::vector<Nat> r_sequence(const BitStream& x, std::size_t k);

/// r for a digit prefix via the cluster product over its maximal 1-runs.
Nat r_from_clusters(const std::vector<std::uint8_t>& prefix);

/// Exact finite series over the terminating expansion; F(1) = 1.
QSqrt5 eval_dyadic_exact(const Dyadic& x);

/// cum(x 2^k - 1) / cum(2^k - 1). Throws DomainError if x needs more than k digits.
Rational eval_fk(const Dyadic& x, unsigned long k);

/// F from the three functional equations alone, with F(0) = 0.
QSqrt5 eval_recursive_dyadic(const Dyadic& x);

/// Exact series for the eventually periodic expansion 0.head(period)(period)...
QSqrt5 eval_periodic_exact(const std::vector<std::uint8_t>& head,
                           const std::vector<std::uint8_t>& period);

/// F at a rational point of [0, 1]: the finite series at dyadics, the
/// periodic closed form otherwise.
QSqrt5 eval_rational(const Rational& x);

/// Rigorous bracket of F(x).
struct Enclosure {
  QSqrt5 lo, hi;
  /// Number of digits summed before the tail bound met the tolerance.
  std::size_t depth = 0;

  QSqrt5 width() const { return hi - lo; }
  bool contains(const QSqrt5& v) const { return lo <= v && v <= hi; }
};

/// Sums digits until the tail bound r_{K+1} alpha^{K+1} / (1 - 3 alpha) is at
/// most eps. A Zeros tail ends the sum exactly. Throws DomainError if eps <= 0.
Enclosure eval_stream_enclosure(const BitStream& x, const Rational& eps);

/// True iff both binary expansions of x in (0, 1) give the same exact value.
bool check_dual_representation(const Dyadic& x);

/// (sqrt5 + 2) (3 alpha)^k: bound on |F(y) - F(x)| when x, y share k leading digits.
QSqrt5 modulus_bound(unsigned long k);

}  // namespace rule150
