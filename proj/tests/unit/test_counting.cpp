#include <doctest.h>

#include <algorithm>

#include "oracle/oracles.hpp"
#include "rule150/counting.hpp"
#include "rule150/errors.hpp"

using namespace rule150;

TEST_CASE("direct counts") {
  CHECK(num_direct(-1) == 0);
  CHECK(cum_direct(-1) == 0);
  CHECK(num_direct(0) == 1);
  CHECK(num_direct(3) == 5);
  CHECK(cum_direct(1) == 4);
  CHECK(cum_direct(3) == 12);
  CHECK(cum_direct(7) == 40);
  CHECK_THROWS_AS(num_direct(-2), DomainError);

  const auto ref = oracle::cum_table(600);
  const auto got = cum_direct_table(600);
  for (std::size_t n = 0; n <= 600; ++n) REQUIRE(got[n] == ref[n]);
}

TEST_CASE("matrix and cluster counts") {
  CHECK(num_matrix(3) == 5);
  CHECK(num_matrix(5) == 9);
  CHECK(num_matrix(0) == 1);
  CHECK(num_cluster(7) == 11);
  CHECK(num_cluster(6) == 5);
  CHECK(num_cluster(0) == 1);
  for (unsigned long r = 0; r < 20; ++r)
    CHECK(cluster_value(r) == num_of_word(std::vector<std::uint8_t>(r, 1)));

  const auto table = num_direct_table(4096);
  for (unsigned long n = 0; n <= 4096; ++n) {
    REQUIRE(num_matrix(n) == table[n]);
    REQUIRE(num_cluster(n) == table[n]);
  }
}

TEST_CASE("reversal invariance of digit products") {
  for (unsigned len = 0; len <= 16; ++len)
    for (unsigned long w = 0; w < (1ul << len); ++w) {
      std::vector<std::uint8_t> word(len);
      for (unsigned j = 0; j < len; ++j) word[j] = (w >> j) & 1u;
      auto rev = word;
      std::reverse(rev.begin(), rev.end());
      REQUIRE(num_of_word(word) == num_of_word(rev));
    }
}

TEST_CASE("powers of two") {
  CHECK(cum_pow2(1) == 4);
  CHECK(cum_pow2(2) == 12);
  CHECK(cum_pow2(3) == 40);
  CHECK(cum_pow2(4) == 128);
  CHECK(cum_pow2(0) == 1);
  CHECK(matrices::cumulative().pow(5) ==
        matrices::cumulative() * matrices::cumulative() * matrices::cumulative() *
            matrices::cumulative() * matrices::cumulative());

  const auto cum = cum_direct_table(4095);
  for (unsigned long k = 1; k <= 12; ++k) REQUIRE(cum_pow2(k) == cum[(1ul << k) - 1]);
}

TEST_CASE("closed form") {
  CHECK(cum_pow2_closed(1) == QSqrt5(4));
  CHECK(cum_pow2_closed(3) == QSqrt5(40));
  CHECK(cum_pow2_closed(10) == QSqrt5(cum_pow2(10)));
  CHECK_THROWS_AS(cum_pow2_closed(0), DomainError);
  for (unsigned long k = 1; k <= 64; ++k) {
    const QSqrt5 c = cum_pow2_closed(k);
    REQUIRE(c.is_rational());
    REQUIRE(c.d() == 1);
    REQUIRE(c.p() == cum_pow2(k));
  }
}

TEST_CASE("cumulative decomposition") {
  CHECK(cum_decompose(6) == 24);
  CHECK(cum_decompose(1) == 1);
  CHECK(cum_decompose(5) == 15);
  for (unsigned long k = 1; k <= 40; ++k) CHECK(cum_decompose(pow2(k)) == cum_pow2(k));
  CHECK_THROWS_AS(cum_decompose(0), DomainError);
  CHECK_THROWS_AS(cum_decompose(-3), DomainError);

  const auto cum = cum_direct_table(4096);
  for (unsigned long m = 1; m <= 4096; ++m) REQUIRE(cum_decompose(m) == cum[m - 1]);
}

TEST_CASE("cum through matrix and closed routes") {
  CHECK(cum_matrix(-1) == 0);
  CHECK(cum_closed(-1) == 0);
  const auto cum = cum_direct_table(2000);
  for (long n = 0; n <= 2000; ++n) {
    REQUIRE(cum_matrix(n) == cum[n]);
    REQUIRE(cum_closed(n) == cum[n]);
  }
}
