#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "rule150/counting.hpp"
#include "rule150/errors.hpp"
#include "rule150/fractal.hpp"

using namespace rule150;

namespace {
std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}
}  // namespace

TEST_CASE("small prefractals") {
  const Bitmap b = prefractal(1);
  CHECK(b.width() == 3);
  CHECK(b.height() == 2);
  CHECK(b.to_pbm_ascii() == "P1\n3 2\n010\n111\n");
  CHECK_THROWS_AS(prefractal(0), DomainError);
  CHECK_THROWS_AS(prefractal(15), ResourceLimit);
}

TEST_CASE("32-row diagram matches the reference bitmap") {
  CHECK(prefractal(5).to_pbm_ascii() == read_file(RULE150_TEST_DATA "/rule150_steps31.pbm"));
}

TEST_CASE("binary PBM packing") {
  Bitmap b(10, 2);
  b.set(0, 0);
  b.set(9, 0);
  b.set(8, 1);
  const std::string p4 = b.to_pbm_binary();
  const std::string header = "P4\n10 2\n";
  REQUIRE(p4.size() == header.size() + 4);
  CHECK(p4.substr(0, header.size()) == header);
  CHECK(static_cast<unsigned char>(p4[header.size() + 0]) == 0x80);
  CHECK(static_cast<unsigned char>(p4[header.size() + 1]) == 0x40);
  CHECK(static_cast<unsigned char>(p4[header.size() + 2]) == 0x00);
  CHECK(static_cast<unsigned char>(p4[header.size() + 3]) == 0x80);
}

TEST_CASE("popcount equals cumulative counts") {
  for (unsigned k = 1; k <= 12; ++k)
    REQUIRE(Nat(static_cast<unsigned long>(prefractal(k).popcount())) == cum_pow2(k));
}

TEST_CASE("prefractals nest") {
  for (unsigned k = 2; k <= 12; ++k) REQUIRE(selfsim_check(k));
  CHECK_THROWS_AS(selfsim_check(1), DomainError);
}

TEST_CASE("box-counting slope") {
  const double target = 1.694242;
  CHECK(std::abs(limit_set_dimension() - 1.6942419136) < 1e-9);
  CHECK(std::abs(boxcount_slope(8, 24) - target) <= 0.01);
  CHECK(std::abs(boxcount_slope(2, 4) - target) <= 0.15);
  CHECK(std::abs(boxcount_slope(40, 64) - target) <= 0.001);
  CHECK(std::abs(boxcount_slope(16, 32) - target) < std::abs(boxcount_slope(4, 12) - target));
  CHECK_THROWS_AS(boxcount_slope(1, 10), DomainError);
  CHECK_THROWS_AS(boxcount_slope(10, 10), DomainError);
  CHECK_THROWS_AS(boxcount_slope(10, 65), DomainError);
}
