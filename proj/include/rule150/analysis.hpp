#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rule150/bigint.hpp"
#include "rule150/quadratic.hpp"

namespace rule150 {

enum class Side { Left, Right };

/// One difference quotient of F at a point.
struct QuotientReport {
  std::string point;
  Side side;
  unsigned long m;
  QSqrt5 quotient;
};

/// (F(x) - F(y_m)) / (x - y_m) with y_m = x - 2^{-m}, from the closed form
/// 2^m r(x)_k alpha^k sum_{i > m-k} b_i alpha^i. x must be a dyadic in (0, 1)
/// with k digits and m > k; otherwise DomainError.
QSqrt5 left_quotient(const Dyadic& x, unsigned long m);
/// The same quotient from two evaluations of F.
QSqrt5 left_quotient_literal(const Dyadic& x, unsigned long m);

/// (F(z_m) - F(x)) / (z_m - x) with z_m = x + 2^{1-m}, from the closed form
/// r(x)_{k+1} (2 alpha)^{m-1}. Requires m >= k + 2.
QSqrt5 right_quotient(const Dyadic& x, unsigned long m);
/// The same quotient, z_m evaluated as the finite dyadic.
QSqrt5 right_quotient_literal(const Dyadic& x, unsigned long m);
/// The same quotient, z_m evaluated through its ones-tail expansion.
QSqrt5 right_quotient_literal_ones(const Dyadic& x, unsigned long m);

/// sum_{i >= n} b_i alpha^i in closed form, n >= 1.
QSqrt5 ones_tail_sum(unsigned long n);

/// Bracketing difference quotient 2^k r(x)_k alpha^k at depth k >= 1.
QSqrt5 dyadic_quotient_statistic(const BitStream& x, unsigned long k);

/// Successive ratios statistic(j+1) / statistic(j) for j = 1..k-1.
std::vector<QSqrt5> statistic_ratios(const BitStream& x, unsigned long k);

enum class RatioKind { Zero, NewRun, RunExtension, Other };
/// 2 alpha, 6 alpha, within [10 alpha / 3, 22 alpha / 5], or none of these.
RatioKind classify_ratio(const QSqrt5& ratio);

/// D_l = 2 alpha (2^{l+2} + (-1)^{l+1}) / (2^{l+1} + (-1)^l), l >= 2.
QSqrt5 run_extension_ratio(unsigned long l);

struct SampleResult {
  std::size_t below = 0;
  std::size_t count = 0;
  Rational fraction() const { return Rational(static_cast<unsigned long>(below),
                                              static_cast<unsigned long>(count)); }
};

/// Seed of the j-th stream of a sampling run.
std::uint64_t stream_seed(std::uint64_t seed, std::size_t j);

/// Counts how many of `count` seeded random streams have statistic at
/// depth k below `threshold`.
SampleResult derivative_zero_sample(std::uint64_t seed, std::size_t count,
                                    unsigned long k,
                                    const Rational& threshold = Rational(1, 1000));

/// Quotient reports for m = m_min..m_max on the requested sides.
std::vector<QuotientReport> quotient_sequence(const Dyadic& x, unsigned long m_max,
                                              bool left, bool right);

}  // namespace rule150
