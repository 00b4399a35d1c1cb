#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "rule150/bigint.hpp"

namespace rule150 {

/// Exact element (p + q*sqrt5)/d of the field Q(sqrt5).
///
/// Always canonical: d > 0 and gcd(p, q, d) = 1, so equality is structural.
class QSqrt5 {
 public:
  QSqrt5() : p_(0), q_(0), d_(1) {}
  QSqrt5(long v) : p_(v), q_(0), d_(1) {}  // NOLINT(google-explicit-constructor)
  explicit QSqrt5(const Integer& v) : p_(v), q_(0), d_(1) {}
  explicit QSqrt5(const Rational& v);
  QSqrt5(Integer p, Integer q, Integer d);

  /// (sqrt5 - 1) / 4, the contraction ratio of F.
  static QSqrt5 alpha();
  static QSqrt5 sqrt5();

  const Integer& p() const noexcept { return p_; }
  const Integer& q() const noexcept { return q_; }
  const Integer& d() const noexcept { return d_; }

  bool is_zero() const noexcept { return sgn(p_) == 0 && sgn(q_) == 0; }
  bool is_rational() const noexcept { return sgn(q_) == 0; }
  /// Value as a fraction; requires is_rational().
  Rational rational() const;

  /// -1, 0 or +1, computed exactly.
  int sign() const;

  QSqrt5 inverse() const;  // throws DivisionByZero on 0
  QSqrt5 pow(unsigned long e) const;

  QSqrt5& operator+=(const QSqrt5& o);
  QSqrt5& operator-=(const QSqrt5& o);
  QSqrt5& operator*=(const QSqrt5& o);
  QSqrt5& operator/=(const QSqrt5& o);

  friend QSqrt5 operator+(QSqrt5 a, const QSqrt5& b) { return a += b; }
  friend QSqrt5 operator-(QSqrt5 a, const QSqrt5& b) { return a -= b; }
  friend QSqrt5 operator*(QSqrt5 a, const QSqrt5& b) { return a *= b; }
  friend QSqrt5 operator/(QSqrt5 a, const QSqrt5& b) { return a /= b; }
  QSqrt5 operator-() const { return QSqrt5(-p_, -q_, d_); }

  friend bool operator==(const QSqrt5& a, const QSqrt5& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_;
  }
  friend std::strong_ordering operator<=>(const QSqrt5& a, const QSqrt5& b);

  /// Decimal rendering with exactly `digits` fractional digits, rounded
  /// half-to-even. Uses integer square roots only.
  std::string to_decimal(unsigned digits) const;

  /// Floor of the value, exact.
  Integer floor() const;

  /// Nearest double; for display and plotting only.
  double approx() const;

 private:
  void normalize();

  Integer p_, q_, d_;
};

QSqrt5 operator*(const QSqrt5& a, const Integer& k);
inline QSqrt5 operator*(const Integer& k, const QSqrt5& a) { return a * k; }

/// Exact-order comparison helpers.
std::strong_ordering compare(const QSqrt5& a, const QSqrt5& b);
inline QSqrt5 abs(const QSqrt5& a) { return a.sign() < 0 ? -a : a; }

/// Dyadic rational m / 2^i in [0, 1], canonical (m odd or i = 0).
class Dyadic {
 public:
  Dyadic() : m_(0), i_(0) {}
  /// Throws DomainError when outside [0, 1].
  Dyadic(Integer m, unsigned long i);

  static Dyadic zero() { return {}; }
  static Dyadic one() { return Dyadic(1, 0); }
  /// 1 / 2^k.
  static Dyadic unit(unsigned long k) { return Dyadic(1, k); }

  const Integer& numerator() const noexcept { return m_; }
  /// Exponent of the canonical denominator; the expansion depth.
  unsigned long exponent() const noexcept { return i_; }

  /// Binary digit x_j (j >= 1) of the terminating expansion.
  bool bit(unsigned long j) const;

  Rational to_rational() const;
  /// Returns nullopt when r is not a dyadic in [0, 1].
  static std::optional<Dyadic> from_rational(const Rational& r);

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  std::string str() const;

  /// Exact sum and difference; throw DomainError if the result leaves [0, 1].
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  /// 2x; requires x <= 1/2.
  Dyadic twice() const;
  /// x/2.
  Dyadic half() const { return Dyadic(m_, i_ + 1); }

 private:
  Integer m_;
  unsigned long i_;
};

/// Binary expansion x = sum x_j / 2^j of a point in [0, 1]: a finite head
/// followed by a tail descriptor.
class BitStream {
 public:
  struct Zeros {};
  struct Ones {};
  struct Periodic {
    std::vector<std::uint8_t> word;  // nonempty
  };
  /// Uniform random bits from a seeded mt19937_64; replayable.
  struct RandomBits {
    std::uint64_t seed;
  };
  using Tail = std::variant<Zeros, Ones, Periodic, RandomBits>;

  BitStream() = default;
  BitStream(std::vector<std::uint8_t> head, Tail tail);

  static BitStream zeros() { return {}; }
  static BitStream ones() { return BitStream({}, Ones{}); }
  static BitStream periodic(std::vector<std::uint8_t> head,
                            std::vector<std::uint8_t> period);
  static BitStream random(std::uint64_t seed) { return BitStream({}, RandomBits{seed}); }

  const std::vector<std::uint8_t>& head() const noexcept { return head_; }
  const Tail& tail() const noexcept { return tail_; }

  /// True when every bit past the head is 0.
  bool terminates() const noexcept { return std::holds_alternative<Zeros>(tail_); }

  /// Independent reader positioned at x_1. Each cursor owns its generator
  /// state, so cursors never share progress.
  class Cursor {
   public:
    explicit Cursor(const BitStream& s);
    bool next();
    /// Index of the next bit to be returned (1-based).
    std::size_t position() const noexcept { return pos_ + 1; }

   private:
    const BitStream* stream_;
    std::size_t pos_ = 0;
    std::optional<std::mt19937_64> rng_;
    std::uint64_t buffer_ = 0;
    unsigned buffered_ = 0;
  };

  Cursor cursor() const { return Cursor(*this); }

  /// First k bits x_1..x_k.
  std::vector<std::uint8_t> prefix(std::size_t k) const;

 private:
  std::vector<std::uint8_t> head_;
  Tail tail_ = Zeros{};
};

/// Terminating expansion of x (tail Zeros). x = 1 has only the all-ones
/// expansion and yields tail Ones.
BitStream bits_of(const Dyadic& x);

/// Alternate expansion ending in ones for a dyadic in (0, 1).
/// Throws DomainError for 0, 1.
BitStream alternate_bits_of(const Dyadic& x);

/// Value of the finite word 0.w_1 w_2 ... w_n.
Dyadic dyadic_of(const std::vector<std::uint8_t>& head);

/// Eventually periodic expansion (head, period) of a rational in [0, 1].
/// Dyadics come back with the period {0}, and 1 as period {1}.
std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>> periodic_expansion(
    const Rational& x);

}  // namespace rule150
