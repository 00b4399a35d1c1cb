#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rule150/bigint.hpp"
#include "rule150/quadratic.hpp"

namespace rule150 {

/// 2x2 matrix over the integers, row-major.
struct Mat2 {
  std::array<Integer, 4> e;

  static Mat2 identity() { return {{1, 0, 0, 1}}; }
  const Integer& operator()(int r, int c) const { return e[2 * r + c]; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend bool operator==(const Mat2&, const Mat2&) = default;
  Mat2 pow(unsigned long k) const;
};

/// 1x2 row vector.
struct Row2 {
  Integer x, y;

  Row2 operator*(const Mat2& m) const;
  /// Inner product with the column (c0, c1).
  Integer dot(const Integer& c0, const Integer& c1) const { return x * c0 + y * c1; }
  friend bool operator==(const Row2&, const Row2&) = default;
};

/// Transition matrices of the counting recurrences.
namespace matrices {
Mat2 cumulative();   // M   = [[2,4],[1,0]]
Mat2 digit(bool b);  // M_0 = [[1,0],[1,0]], M_1 = [[1,2],[1,0]]
inline Row2 start() { return {1, 0}; }  // a = (1 0)
}  // namespace matrices

/// Number of 1s in row n of the Rule 150 orbit of the seed; 0 for n = -1.
Nat num_direct(std::int64_t n);
/// Sum of num_direct(m) over m = 0..n; 0 for n = -1.
Nat cum_direct(std::int64_t n);
/// num_direct(0..n) from a single simulation.
std::vector<Nat> num_direct_table(std::size_t n);
/// cum_direct(0..n) from a single simulation.
std::vector<Nat> cum_direct_table(std::size_t n);

/// a M_{n_{l-1}} ... M_{n_0} u_0 over the binary digits of n.
Nat num_matrix(const Nat& n);
/// Digit-indexed product a M_{w_1} ... M_{w_k} u_0 for an arbitrary word.
Nat num_of_word(const std::vector<std::uint8_t>& word);

/// Product over maximal runs of r ones of (2^{r+2} + (-1)^{r+1}) / 3.
Nat num_cluster(const Nat& n);
/// Cluster value b_{r+1} = a M_1^r u_0 = (2^{r+2} + (-1)^{r+1}) / 3.
Nat cluster_value(unsigned long run_length);

/// cum(2^k - 1) = a M^{k-1} v_0, by repeated squaring. k = 0 gives cum(0) = 1.
Nat cum_pow2(unsigned long k);
/// cum(2^k - 1) from the closed form in Q(sqrt5). Throws DomainError for k < 1.
QSqrt5 cum_pow2_closed(unsigned long k);

/// cum(m - 1) as a sum over the 1 digits of m of num(prefix) * cum(2^{rest} - 1).
/// Throws DomainError if m <= 0.
Nat cum_decompose(const Nat& m);

/// cum(n) for any n >= -1 through the digit decomposition.
Nat cum_matrix(const Nat& n);
/// cum(n) for n >= -1 using the cluster formula and the Q(sqrt5) closed form.
Nat cum_closed(const Nat& n);

}  // namespace rule150
