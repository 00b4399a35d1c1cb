#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "rule150/cli.hpp"
#include "rule150/counting.hpp"
#include "rule150/errors.hpp"

using namespace rule150;
using namespace rule150::cli;

namespace {

template <typename Opt, typename Fn>
std::string run(Fn fn, const Opt& opt) {
  std::ostringstream out;
  REQUIRE(fn(opt, out) == kOk);
  return out.str();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::size_t p1_popcount(const std::string& pbm) {
  const auto ls = lines(pbm);
  std::size_t n = 0;
  for (std::size_t i = 2; i < ls.size(); ++i)
    for (char c : ls[i]) n += c == '1';
  return n;
}

}  // namespace

TEST_CASE("point parsing") {
  CHECK(std::get<Rational>(parse_point("3/2^2")) == Rational(3, 4));
  CHECK(std::get<Rational>(parse_point("2/6")) == Rational(1, 3));
  CHECK(std::get<Rational>(parse_point("1")) == Rational(1));
  const auto s = std::get<BitStream>(parse_point("bits=1(01)"));
  CHECK(s.prefix(5) == std::vector<std::uint8_t>{1, 0, 1, 0, 1});
  CHECK(std::get<BitStream>(parse_point("bits=011")).terminates());
  CHECK(std::holds_alternative<BitStream::RandomBits>(std::get<BitStream>(parse_point("random:9")).tail()));
  CHECK_THROWS_AS(parse_point("3/2"), UsageError);
  CHECK_THROWS_AS(parse_point("1/0"), UsageError);
  CHECK_THROWS_AS(parse_point("bits=12"), UsageError);
  CHECK_THROWS_AS(parse_point("bits=1()"), UsageError);
  CHECK_THROWS_AS(parse_point("half"), UsageError);
}

TEST_CASE("tolerance parsing") {
  CHECK(parse_tolerance("1e-6") == Rational(1, 1000000));
  CHECK(parse_tolerance("0.001") == Rational(1, 1000));
  CHECK(parse_tolerance("1/1000") == Rational(1, 1000));
  CHECK(parse_tolerance("2.5E-1") == Rational(1, 4));
  CHECK_THROWS_AS(parse_tolerance("0"), UsageError);
  CHECK_THROWS_AS(parse_tolerance("-1e-3"), UsageError);
  CHECK_THROWS_AS(parse_tolerance("abc"), UsageError);
}

TEST_CASE("simulate") {
  SimulateOptions opt;
  opt.steps = 0;
  CHECK(run(cmd_simulate, opt) == "P1\n1 1\n1\n");

  opt.steps = 31;
  const std::string fig1 = run(cmd_simulate, opt);
  CHECK(fig1 == read_file(RULE150_TEST_DATA "/rule150_steps31.pbm"));
  CHECK(fig1 == run(cmd_simulate, opt));
  CHECK(p1_popcount(fig1) == cum_pow2(5).get_ui());

  opt.format = "csv";
  opt.steps = 1;
  CHECK(run(cmd_simulate, opt) == "t,i\n0,0\n1,-1\n1,0\n1,1\n");

  opt.rule = 151;
  opt.format = "pbm";
  std::ostringstream out, err;
  CHECK_THROWS_AS(cmd_simulate(opt, out), OddCode);
  CHECK(run_guarded([&] { return cmd_simulate(opt, out); }, err) == kUsage);
  CHECK(err.str().find("OddCode") != std::string::npos);
}

TEST_CASE("counts") {
  CountsOptions opt;
  opt.mode = "cum";
  opt.upto = 7;
  opt.method = "direct";
  CHECK(run(cmd_counts, opt) == "n,value\n0,1\n1,4\n2,7\n3,12\n4,15\n5,24\n6,29\n7,40\n");

  opt.mode = "num";
  opt.upto = 3;
  opt.method = "matrix";
  CHECK(run(cmd_counts, opt) == "n,value\n0,1\n1,3\n2,3\n3,5\n");

  opt.mode = "cum";
  opt.upto = 255;
  for (const char* method : {"direct", "matrix", "closed"}) {
    opt.method = method;
    CHECK(run(cmd_counts, opt) == read_file(RULE150_TEST_DATA "/cum150_0_255.csv"));
  }

  for (const char* mode : {"num", "cum"}) {
    opt.mode = mode;
    opt.upto = 4095;
    opt.method = "direct";
    const auto direct = run(cmd_counts, opt);
    opt.method = "matrix";
    CHECK(run(cmd_counts, opt) == direct);
    opt.method = "closed";
    CHECK(run(cmd_counts, opt) == direct);
  }

  opt.method = "direct";
  opt.upto = kMaxDirectCount + 1;
  std::ostringstream out;
  CHECK_THROWS_AS(cmd_counts(opt, out), ResourceLimit);
}

TEST_CASE("eval") {
  EvalOptions opt;
  opt.x = "1/2";
  opt.digits = 10;
  auto text = run(cmd_eval, opt);
  CHECK(text.find("F(x) = 0.3090169944\n") != std::string::npos);
  CHECK(text.find("exact (p,q,d) = (-1,1,4)\n") != std::string::npos);

  opt.x = "1/3";
  opt.digits = 6;
  text = run(cmd_eval, opt);
  CHECK(text.find("F(x) = 0.133831\n") != std::string::npos);
  CHECK(text.find("(-3,2,11)") != std::string::npos);
  CHECK(text.find("method = periodic") != std::string::npos);

  opt.x = "0/1";
  opt.digits = 12;
  CHECK(run(cmd_eval, opt).find("F(x) = 0.000000000000\n") != std::string::npos);

  opt.x = "bits=(01)";
  CHECK(run(cmd_eval, opt).find("(-3,2,11)") != std::string::npos);

  opt.x = "3/2^2";
  opt.method = "recursive";
  opt.json = true;
  auto j = nlohmann::json::parse(run(cmd_eval, opt));
  CHECK(j["value_decimal"] == "0.595491502813");
  CHECK(j["exact_p"] == "7");
  CHECK(j["exact_q"] == "-1");
  CHECK(j["exact_d"] == "8");

  opt.method = "fk";
  opt.x = "1/2";
  opt.k = 3;
  j = nlohmann::json::parse(run(cmd_eval, opt));
  CHECK(j["value_decimal"] == "0.300000000000");

  opt.method = "auto";
  opt.x = "random:7";
  opt.eps = "1e-8";
  j = nlohmann::json::parse(run(cmd_eval, opt));
  CHECK(j["method"] == "enclosure");
  CHECK(j.contains("lo_decimal"));
  CHECK_FALSE(j.contains("exact_p"));

  opt.x = "1/3";
  opt.method = "series";
  std::ostringstream out;
  CHECK_THROWS_AS(cmd_eval(opt, out), UsageError);
}

TEST_CASE("plot-f") {
  PlotOptions opt;
  opt.depth = 2;
  const auto csv = run(cmd_plot_f, opt);
  CHECK(csv ==
        "x,F\n"
        "0.000000000000,0.000000000000\n"
        "0.250000000000,0.095491502813\n"
        "0.500000000000,0.309016994375\n"
        "0.750000000000,0.595491502813\n"
        "1.000000000000,1.000000000000\n");
  CHECK(csv == run(cmd_plot_f, opt));
  opt.depth = 1;
  CHECK(lines(run(cmd_plot_f, opt)).size() == 4);

  opt.depth = 4;
  opt.format = "svg";
  const auto svg = run(cmd_plot_f, opt);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("<rect") != std::string::npos);

  opt.depth = kMaxPlotDepth + 1;
  std::ostringstream out;
  CHECK_THROWS_AS(cmd_plot_f(opt, out), ResourceLimit);
}

TEST_CASE("limitset and dimension") {
  LimitsetOptions opt;
  opt.k = 8;
  const auto pbm = run(cmd_limitset, opt);
  CHECK(lines(pbm).size() == 2 + 256);
  CHECK(p1_popcount(pbm) == cum_pow2(8).get_ui());

  std::ostringstream out;
  REQUIRE(cmd_dimension(8, 24, out) == kOk);
  const auto j = nlohmann::ordered_json::parse(out.str());
  CHECK(std::abs(j["slope"].get<double>() - 1.694242) <= 0.01);
  CHECK(j["target"].get<double>() == 1.694242);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"jmin", "jmax", "slope", "target"});
}

TEST_CASE("quotients report") {
  QuotientsOptions opt;
  opt.x = "1/2";
  opt.mmax = 5;
  const auto j = nlohmann::ordered_json::parse(run(cmd_quotients, opt));
  REQUIRE(j.size() == 4 + 3);
  std::vector<std::string> keys;
  for (auto it = j[0].begin(); it != j[0].end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"point", "side", "m", "value_decimal", "exact_p",
                                         "exact_q", "exact_d"});
  CHECK(j[0]["side"] == "left");
  CHECK(j.back()["side"] == "right");

  opt.x = "1/3";
  std::ostringstream out;
  CHECK_THROWS_AS(cmd_quotients(opt, out), UsageError);
}

TEST_CASE("check reports") {
  std::ostringstream out;
  CHECK(cmd_check("eca", out) == kOk);
  const auto j = nlohmann::ordered_json::parse(out.str());
  CHECK(j["suite"] == "eca");
  CHECK(j["exit_code"] == 0);
  CHECK(j["summary"]["failed"] == 0);

  std::ostringstream err;
  CHECK(run_guarded([&] { return cmd_check("nope", out); }, err) == kUsage);
}
