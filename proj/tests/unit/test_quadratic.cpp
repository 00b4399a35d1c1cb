#include <doctest.h>

#include <random>

#include "rule150/errors.hpp"
#include "rule150/quadratic.hpp"

using namespace rule150;

namespace {
const QSqrt5 kAlpha = QSqrt5::alpha();

QSqrt5 random_element(std::mt19937_64& rng) {
  auto pick = [&] { return static_cast<long>(rng() % 2001) - 1000; };
  long d = 0;
  while (d == 0) d = pick();
  return QSqrt5(pick(), pick(), d);
}
}  // namespace

TEST_CASE("canonical form") {
  const QSqrt5 v(6, -4, -8);
  CHECK(v.p() == -3);
  CHECK(v.q() == 2);
  CHECK(v.d() == 4);
  CHECK(QSqrt5(0, 0, -7) == QSqrt5(0));
  CHECK_THROWS_AS(QSqrt5(1, 1, 0), DivisionByZero);
}

TEST_CASE("field operations on alpha") {
  CHECK(kAlpha + kAlpha == QSqrt5(-1, 1, 2));
  CHECK(kAlpha * kAlpha == QSqrt5(3, -1, 8));
  CHECK(kAlpha.inverse() == QSqrt5(1, 1, 1));
  CHECK_THROWS_AS(QSqrt5(0).inverse(), DivisionByZero);
  CHECK((QSqrt5(4) * kAlpha * kAlpha + QSqrt5(2) * kAlpha - QSqrt5(1)).is_zero());
  // alpha / (1 - 3 alpha) = sqrt5 + 2
  CHECK(kAlpha / (QSqrt5(1) - QSqrt5(3) * kAlpha) == QSqrt5(2, 1, 1));
}

TEST_CASE("exact ordering") {
  CHECK(kAlpha > QSqrt5(Rational(1, 4)));
  CHECK(compare(kAlpha, kAlpha) == std::strong_ordering::equal);
  CHECK(QSqrt5(4) * kAlpha * kAlpha + QSqrt5(2) * kAlpha == QSqrt5(1));
  CHECK(QSqrt5(0) < kAlpha);
  CHECK(kAlpha < QSqrt5(Rational(1, 3)));
  CHECK(QSqrt5(3) * kAlpha < QSqrt5(1));
  CHECK(QSqrt5(2) * kAlpha < QSqrt5(1));
  // Mixed-sign components: 2.236 - 2.2 > 0, 2.2 - 2.236 < 0.
  CHECK(QSqrt5(-22, 10, 10).sign() == 1);
  CHECK(QSqrt5(22, -10, 10).sign() == -1);
  // Ordering agrees with floating point away from ties.
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    const auto a = random_element(rng), b = random_element(rng);
    const double da = a.approx(), db = b.approx();
    if (std::abs(da - db) < 1e-9) continue;
    REQUIRE((a < b) == (da < db));
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 500; ++t) {
    const auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    if (!a.is_zero()) REQUIRE(a * a.inverse() == QSqrt5(1));
    REQUIRE((a - a).is_zero());
  }
}

TEST_CASE("decimal rendering") {
  CHECK(kAlpha.to_decimal(10) == "0.3090169944");
  CHECK(QSqrt5(2, 1, 1).to_decimal(5) == "4.23607");
  CHECK(QSqrt5(0).to_decimal(3) == "0.000");
  CHECK(QSqrt5(-3, 2, 11).to_decimal(6) == "0.133831");
  CHECK((-kAlpha).to_decimal(4) == "-0.3090");
  // Half-to-even on exact ties.
  CHECK(QSqrt5(Rational(1, 8)).to_decimal(2) == "0.12");
  CHECK(QSqrt5(Rational(3, 8)).to_decimal(2) == "0.38");
  CHECK(QSqrt5(Rational(-1, 8)).to_decimal(2) == "-0.12");
  CHECK(QSqrt5(Rational(-1, 1000)).to_decimal(2) == "0.00");
  CHECK(QSqrt5(Rational(5, 2)).to_decimal(1) == "2.5");
  CHECK(QSqrt5(0, 1, 1).to_decimal(30) == "2.236067977499789696409173668731");
}

TEST_CASE("floor") {
  CHECK(QSqrt5(0, 1, 1).floor() == 2);
  CHECK(QSqrt5(0, -1, 1).floor() == -3);
  CHECK(QSqrt5(Rational(-7, 2)).floor() == -4);
  CHECK(kAlpha.floor() == 0);
}

TEST_CASE("dyadics") {
  const Dyadic x(6, 3);
  CHECK(x.numerator() == 3);
  CHECK(x.exponent() == 2);
  CHECK(Dyadic(0, 9) == Dyadic::zero());
  CHECK(Dyadic(8, 3) == Dyadic::one());
  CHECK_THROWS_AS(Dyadic(5, 2), DomainError);
  CHECK_THROWS_AS(Dyadic(-1, 2), DomainError);
  CHECK(Dyadic(1, 1) < Dyadic(3, 2));
  CHECK(Dyadic(3, 2) - Dyadic(1, 1) == Dyadic(1, 2));
  CHECK(Dyadic(1, 2) + Dyadic(1, 2) == Dyadic(1, 1));
  CHECK_THROWS_AS(Dyadic(3, 2) + Dyadic(1, 1), DomainError);
  CHECK(Dyadic(3, 3).twice() == Dyadic(3, 2));
  CHECK(Dyadic::from_rational(Rational(3, 4)) == Dyadic(3, 2));
  CHECK_FALSE(Dyadic::from_rational(Rational(1, 3)));
}

TEST_CASE("bit streams") {
  const auto b = bits_of(Dyadic(3, 2));
  CHECK(b.head() == std::vector<std::uint8_t>{1, 1});
  CHECK(b.terminates());

  const auto alt = alternate_bits_of(Dyadic(1, 1));
  CHECK(alt.head() == std::vector<std::uint8_t>{0});
  CHECK(std::holds_alternative<BitStream::Ones>(alt.tail()));
  CHECK(alt.prefix(4) == std::vector<std::uint8_t>{0, 1, 1, 1});
  CHECK_THROWS_AS(alternate_bits_of(Dyadic::zero()), DomainError);

  CHECK(bits_of(Dyadic::zero()).head().empty());
  CHECK(bits_of(Dyadic::zero()).terminates());

  const auto p = BitStream::periodic({1}, {0, 1, 1});
  CHECK(p.prefix(7) == std::vector<std::uint8_t>{1, 0, 1, 1, 0, 1, 1});
  CHECK(BitStream::periodic({}, {0, 0}).terminates());
  CHECK_THROWS_AS(BitStream::periodic({}, {}), DomainError);

  // Random tails replay identically per cursor and differ across seeds.
  const auto r = BitStream::random(42);
  CHECK(r.prefix(200) == r.prefix(200));
  CHECK(r.prefix(200) != BitStream::random(43).prefix(200));
}

TEST_CASE("dyadic round trip") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const unsigned long i = rng() % 65;
    Integer m;
    m = Integer(static_cast<unsigned long>(rng())) % (pow2(i) + 1);
    const Dyadic x(m, i);
    if (x == Dyadic::one()) continue;
    REQUIRE(dyadic_of(bits_of(x).head()) == x);
  }
  CHECK(dyadic_of({1, 1}) == Dyadic(3, 2));
  CHECK(dyadic_of({}) == Dyadic::zero());
}

TEST_CASE("periodic expansions") {
  using Word = std::vector<std::uint8_t>;
  CHECK(periodic_expansion(Rational(1, 3)) == std::pair<Word, Word>{{}, {0, 1}});
  CHECK(periodic_expansion(Rational(1, 2)) == std::pair<Word, Word>{{1}, {0}});
  CHECK(periodic_expansion(Rational(1)) == std::pair<Word, Word>{{}, {1}});
  CHECK(periodic_expansion(Rational(5, 6)) == std::pair<Word, Word>{{1}, {1, 0}});
  CHECK_THROWS_AS(periodic_expansion(Rational(3, 2)), DomainError);
}
