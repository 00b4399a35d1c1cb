#include "rule150/analysis.hpp"

#include <random>

#include "rule150/errors.hpp"
#include "rule150/singular.hpp"

namespace rule150 {
namespace {

void require_interior(const Dyadic& x) {
  if (x == Dyadic::zero() || x == Dyadic::one())
    throw DomainError("quotient probes need a dyadic strictly inside (0, 1)");
}

// r(x)_j for the terminating expansion of x.
Nat r_at(const Dyadic& x, unsigned long j) {
  return r_sequence(bits_of(x), j).back();
}

}  // namespace

QSqrt5 ones_tail_sum(unsigned long n) {
  if (n < 1) throw DomainError("tail index starts at 1");
  const QSqrt5 a = QSqrt5::alpha();
  const QSqrt5 two_a = QSqrt5(2) * a;
  const QSqrt5 first = QSqrt5(2) * two_a.pow(n) / (QSqrt5(1) - two_a);
  const QSqrt5 second = (-a).pow(n) / (QSqrt5(1) + a);
  return (first + second) / QSqrt5(3);
}

QSqrt5 left_quotient(const Dyadic& x, unsigned long m) {
  require_interior(x);
  const unsigned long k = x.exponent();
  if (m <= k) throw DomainError("left probe needs m > k");
  return QSqrt5(Integer(pow2(m) * r_at(x, k))) * QSqrt5::alpha().pow(k) * ones_tail_sum(m - k + 1);
}

QSqrt5 left_quotient_literal(const Dyadic& x, unsigned long m) {
  require_interior(x);
  if (m <= x.exponent()) throw DomainError("left probe needs m > k");
  const Dyadic y = x - Dyadic::unit(m);
  return (eval_dyadic_exact(x) - eval_dyadic_exact(y)) * pow2(m);
}

QSqrt5 right_quotient(const Dyadic& x, unsigned long m) {
  require_interior(x);
  const unsigned long k = x.exponent();
  if (m < k + 2) throw DomainError("right probe needs m >= k + 2");
  return QSqrt5(r_at(x, k + 1)) * (QSqrt5(2) * QSqrt5::alpha()).pow(m - 1);
}

QSqrt5 right_quotient_literal(const Dyadic& x, unsigned long m) {
  require_interior(x);
  if (m < x.exponent() + 2) throw DomainError("right probe needs m >= k + 2");
  const Dyadic z = x + Dyadic::unit(m - 1);
  return (eval_dyadic_exact(z) - eval_dyadic_exact(x)) * pow2(m - 1);
}

QSqrt5 right_quotient_literal_ones(const Dyadic& x, unsigned long m) {
  require_interior(x);
  const unsigned long k = x.exponent();
  if (m < k + 2) throw DomainError("right probe needs m >= k + 2");
  // z_m = x_1 .. x_k 0 ... 0 1 1 1 ..., ones from digit m on.
  auto head = bits_of(x).head();
  head.resize(m - 1, 0);
  return (eval_periodic_exact(head, {1}) - eval_dyadic_exact(x)) * pow2(m - 1);
}

QSqrt5 dyadic_quotient_statistic(const BitStream& x, unsigned long k) {
  if (k < 1) throw DomainError("depth must be positive");
  const Nat r = r_sequence(x, k).back();
  return QSqrt5(r) * (QSqrt5(2) * QSqrt5::alpha()).pow(k);
}

std::vector<QSqrt5> statistic_ratios(const BitStream& x, unsigned long k) {
  if (k < 1) throw DomainError("depth must be positive");
  const auto r = r_sequence(x, k);
  const QSqrt5 two_a = QSqrt5(2) * QSqrt5::alpha();
  std::vector<QSqrt5> out;
  out.reserve(k - 1);
  for (std::size_t j = 0; j + 1 < r.size(); ++j) {
    Rational growth(r[j + 1], r[j]);
    growth.canonicalize();
    out.push_back(two_a * QSqrt5(growth));
  }
  return out;
}

QSqrt5 run_extension_ratio(unsigned long l) {
  if (l < 2) throw DomainError("run-extension ratios start at l = 2");
  Rational growth(cluster_value(l), cluster_value(l - 1));
  growth.canonicalize();
  return QSqrt5(2) * QSqrt5::alpha() * QSqrt5(growth);
}

RatioKind classify_ratio(const QSqrt5& ratio) {
  const QSqrt5 a = QSqrt5::alpha();
  if (ratio == QSqrt5(2) * a) return RatioKind::Zero;
  if (ratio == QSqrt5(6) * a) return RatioKind::NewRun;
  const QSqrt5 lo = QSqrt5(Rational(10, 3)) * a;
  const QSqrt5 hi = QSqrt5(Rational(22, 5)) * a;
  if (lo <= ratio && ratio <= hi) return RatioKind::RunExtension;
  return RatioKind::Other;
}

std::uint64_t stream_seed(std::uint64_t seed, std::size_t j) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(j >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

SampleResult derivative_zero_sample(std::uint64_t seed, std::size_t count,
                                    unsigned long k, const Rational& threshold) {
  if (count < 1 || k < 1) throw DomainError("need count >= 1 and k >= 1");
  const QSqrt5 scale = (QSqrt5(2) * QSqrt5::alpha()).pow(k);
  const QSqrt5 limit(threshold);
  SampleResult res;
  res.count = count;
  for (std::size_t j = 0; j < count; ++j) {
    const auto stream = BitStream::random(stream_seed(seed, j));
    const QSqrt5 stat = QSqrt5(r_sequence(stream, k).back()) * scale;
    if (stat < limit) ++res.below;
  }
  return res;
}

std::vector<QuotientReport> quotient_sequence(const Dyadic& x, unsigned long m_max,
                                              bool left, bool right) {
  require_interior(x);
  const unsigned long k = x.exponent();
  std::vector<QuotientReport> out;
  if (left)
    for (unsigned long m = k + 1; m <= m_max; ++m)
      out.push_back({x.str(), Side::Left, m, left_quotient(x, m)});
  if (right)
    for (unsigned long m = k + 2; m <= m_max; ++m)
      out.push_back({x.str(), Side::Right, m, right_quotient(x, m)});
  return out;
}

}  // namespace rule150
