#include "rule150/quadratic.hpp"

#include <algorithm>
#include <map>

#include "rule150/errors.hpp"

namespace rule150 {

// ---------------------------------------------------------------- QSqrt5

QSqrt5::QSqrt5(const Rational& v) : p_(v.get_num()), q_(0), d_(v.get_den()) {}

QSqrt5::QSqrt5(Integer p, Integer q, Integer d)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
  if (sgn(d_) == 0) throw DivisionByZero();
  normalize();
}

QSqrt5 QSqrt5::alpha() { return QSqrt5(-1, 1, 4); }
QSqrt5 QSqrt5::sqrt5() { return QSqrt5(0, 1, 1); }

void QSqrt5::normalize() {
  if (sgn(d_) < 0) {
    p_ = -p_;
    q_ = -q_;
    d_ = -d_;
  }
  if (sgn(p_) == 0 && sgn(q_) == 0) {
    d_ = 1;
    return;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(p_.get_mpz_t(), p_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(q_.get_mpz_t(), q_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(d_.get_mpz_t(), d_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational QSqrt5::rational() const {
  if (!is_rational()) throw DomainError("value is irrational");
  Rational r(p_, d_);
  r.canonicalize();
  return r;
}

int QSqrt5::sign() const {
  const int sp = sgn(p_), sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: the larger of p^2 and 5q^2 wins. Never equal, sqrt5 is irrational.
  const Integer pp = p_ * p_;
  const Integer qq = 5 * q_ * q_;
  return pp > qq ? sp : sq;
}

QSqrt5 QSqrt5::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Integer norm = p_ * p_ - 5 * q_ * q_;
  return QSqrt5(d_ * p_, -(d_ * q_), std::move(norm));
}

QSqrt5 QSqrt5::pow(unsigned long e) const {
  QSqrt5 result(1), base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

QSqrt5& QSqrt5::operator+=(const QSqrt5& o) {
  if (d_ == o.d_) {
    p_ += o.p_;
    q_ += o.q_;
  } else {
    p_ = p_ * o.d_ + o.p_ * d_;
    q_ = q_ * o.d_ + o.q_ * d_;
    d_ *= o.d_;
  }
  normalize();
  return *this;
}

QSqrt5& QSqrt5::operator-=(const QSqrt5& o) { return *this += -o; }

QSqrt5& QSqrt5::operator*=(const QSqrt5& o) {
  Integer p = p_ * o.p_ + 5 * q_ * o.q_;
  Integer q = p_ * o.q_ + q_ * o.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  d_ *= o.d_;
  normalize();
  return *this;
}

QSqrt5& QSqrt5::operator/=(const QSqrt5& o) { return *this *= o.inverse(); }

QSqrt5 operator*(const QSqrt5& a, const Integer& k) {
  return QSqrt5(a.p() * k, a.q() * k, a.d());
}

std::strong_ordering operator<=>(const QSqrt5& a, const QSqrt5& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const QSqrt5& a, const QSqrt5& b) { return a <=> b; }

Integer QSqrt5::floor() const {
  // floor(p + q sqrt5) first, then floor division by d.
  Integer s;
  const Integer five_qq = 5 * q_ * q_;
  mpz_sqrt(s.get_mpz_t(), five_qq.get_mpz_t());
  Integer t = p_;
  if (sgn(q_) > 0)
    t += s;
  else if (sgn(q_) < 0)
    t -= s + 1;
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), t.get_mpz_t(), d_.get_mpz_t());
  return out;
}

std::string QSqrt5::to_decimal(unsigned digits) const {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const QSqrt5 scaled = *this * scale;
  Integer rounded = scaled.floor();
  const auto half = compare(scaled - QSqrt5(rounded), QSqrt5(Rational(1, 2)));
  if (half == std::strong_ordering::greater ||
      (half == std::strong_ordering::equal && mpz_odd_p(rounded.get_mpz_t())))
    rounded += 1;

  const bool negative = sgn(rounded) < 0;
  std::string s = Integer(abs(rounded)).get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, 1, '.');
  return negative ? "-" + s : s;
}

double QSqrt5::approx() const {
  const auto bits = std::max({mpz_sizeinbase(p_.get_mpz_t(), 2),
                              mpz_sizeinbase(q_.get_mpz_t(), 2),
                              mpz_sizeinbase(d_.get_mpz_t(), 2)});
  const mp_bitcnt_t prec = bits + 128;
  mpf_class root(5, prec), p(p_, prec), q(q_, prec), d(d_, prec);
  root = sqrt(root);
  mpf_class v(0, prec);
  v = (p + q * root) / d;
  return v.get_d();
}

// ---------------------------------------------------------------- Dyadic

Dyadic::Dyadic(Integer m, unsigned long i) : m_(std::move(m)), i_(i) {
  if (sgn(m_) < 0 || m_ > pow2(i_)) throw DomainError("dyadic outside [0, 1]");
  if (sgn(m_) == 0) {
    i_ = 0;
    return;
  }
  const unsigned long tz = mpz_scan1(m_.get_mpz_t(), 0);
  const unsigned long shift = std::min(tz, i_);
  if (shift != 0) {
    mpz_fdiv_q_2exp(m_.get_mpz_t(), m_.get_mpz_t(), shift);
    i_ -= shift;
  }
}

bool Dyadic::bit(unsigned long j) const {
  if (j == 0 || j > i_) return false;
  return mpz_tstbit(m_.get_mpz_t(), i_ - j) != 0;
}

Rational Dyadic::to_rational() const {
  Rational r(m_, pow2(i_));
  r.canonicalize();
  return r;
}

std::optional<Dyadic> Dyadic::from_rational(const Rational& r) {
  const Integer& den = r.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1) return std::nullopt;
  if (sgn(r) < 0 || r > 1) return std::nullopt;
  return Dyadic(r.get_num(), mpz_sizeinbase(den.get_mpz_t(), 2) - 1);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const auto e = std::max(a.i_, b.i_);
  const Integer lhs = a.m_ * pow2(e - a.i_);
  const Integer rhs = b.m_ * pow2(e - b.i_);
  const int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const auto e = std::max(a.i_, b.i_);
  return Dyadic(a.m_ * pow2(e - a.i_) + b.m_ * pow2(e - b.i_), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  const auto e = std::max(a.i_, b.i_);
  return Dyadic(a.m_ * pow2(e - a.i_) - b.m_ * pow2(e - b.i_), e);
}

Dyadic Dyadic::twice() const {
  if (i_ == 0) return Dyadic(2 * m_, 0);  // throws unless m = 0
  return Dyadic(m_, i_ - 1);
}

std::string Dyadic::str() const {
  return m_.get_str() + "/" + pow2(i_).get_str();
}

// ---------------------------------------------------------------- BitStream

BitStream::BitStream(std::vector<std::uint8_t> head, Tail tail)
    : head_(std::move(head)), tail_(std::move(tail)) {
  if (const auto* p = std::get_if<Periodic>(&tail_); p && p->word.empty())
    throw DomainError("periodic tail needs a nonempty word");
  for (auto& b : head_) b = b ? 1 : 0;
}

BitStream BitStream::periodic(std::vector<std::uint8_t> head,
                              std::vector<std::uint8_t> period) {
  if (period.empty()) throw DomainError("periodic tail needs a nonempty word");
  const bool all0 = std::all_of(period.begin(), period.end(), [](auto b) { return b == 0; });
  const bool all1 = std::all_of(period.begin(), period.end(), [](auto b) { return b != 0; });
  if (all0) return BitStream(std::move(head), Zeros{});
  if (all1) return BitStream(std::move(head), Ones{});
  for (auto& b : period) b = b ? 1 : 0;
  return BitStream(std::move(head), Periodic{std::move(period)});
}

BitStream::Cursor::Cursor(const BitStream& s) : stream_(&s) {}

bool BitStream::Cursor::next() {
  const auto& head = stream_->head_;
  if (pos_ < head.size()) return head[pos_++] != 0;
  const std::size_t idx = pos_++ - head.size();
  return std::visit(
      [&](const auto& t) -> bool {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, Zeros>) {
          return false;
        } else if constexpr (std::is_same_v<T, Ones>) {
          return true;
        } else if constexpr (std::is_same_v<T, Periodic>) {
          return t.word[idx % t.word.size()] != 0;
        } else {
          if (!rng_) rng_.emplace(t.seed);
          if (buffered_ == 0) {
            buffer_ = (*rng_)();
            buffered_ = 64;
          }
          const bool b = buffer_ & 1u;
          buffer_ >>= 1;
          --buffered_;
          return b;
        }
      },
      stream_->tail_);
}

std::vector<std::uint8_t> BitStream::prefix(std::size_t k) const {
  std::vector<std::uint8_t> out(k);
  auto c = cursor();
  for (auto& b : out) b = c.next();
  return out;
}

BitStream bits_of(const Dyadic& x) {
  if (x == Dyadic::one()) return BitStream::ones();
  std::vector<std::uint8_t> head(x.exponent());
  for (unsigned long j = 1; j <= x.exponent(); ++j) head[j - 1] = x.bit(j);
  return BitStream(std::move(head), BitStream::Zeros{});
}

BitStream alternate_bits_of(const Dyadic& x) {
  if (x == Dyadic::zero() || x == Dyadic::one())
    throw DomainError("only dyadics strictly inside (0, 1) have two expansions");
  auto head = bits_of(x).head();
  head.back() = 0;
  return BitStream(std::move(head), BitStream::Ones{});
}

Dyadic dyadic_of(const std::vector<std::uint8_t>& head) {
  Integer m = 0;
  for (auto b : head) {
    m <<= 1;
    if (b) m += 1;
  }
  return Dyadic(m, head.size());
}

std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>> periodic_expansion(
    const Rational& x) {
  if (sgn(x) < 0 || x > 1) throw DomainError("expansion requested outside [0, 1]");
  if (x == 1) return {{}, {1}};
  const Integer& den = x.get_den();
  Integer rem = x.get_num();
  std::vector<std::uint8_t> digits;
  std::map<Integer, std::size_t> seen;
  while (true) {
    if (sgn(rem) == 0) return {digits, {0}};
    if (auto it = seen.find(rem); it != seen.end()) {
      std::vector<std::uint8_t> head(digits.begin(), digits.begin() + it->second);
      std::vector<std::uint8_t> period(digits.begin() + it->second, digits.end());
      return {head, period};
    }
    seen.emplace(rem, digits.size());
    rem *= 2;
    if (rem >= den) {
      digits.push_back(1);
      rem -= den;
    } else {
      digits.push_back(0);
    }
  }
}

}  // namespace rule150
