#include "rule150/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>

#include "rule150/analysis.hpp"
#include "rule150/counting.hpp"
#include "rule150/eca.hpp"
#include "rule150/errors.hpp"
#include "rule150/fractal.hpp"
#include "rule150/singular.hpp"

namespace rule150::cli {
namespace {

using Json = nlohmann::ordered_json;

Integer parse_integer(const std::string& s, const std::string& what) {
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0) throw UsageError("bad " + what + ": '" + s + "'");
  return v;
}

std::vector<std::uint8_t> parse_word(const std::string& s) {
  std::vector<std::uint8_t> w;
  for (char c : s) {
    if (c != '0' && c != '1') throw UsageError("bit words use only 0 and 1: '" + s + "'");
    w.push_back(c == '1');
  }
  return w;
}

Rational checked_unit(Rational r) {
  r.canonicalize();
  if (sgn(r) < 0 || r > 1) throw UsageError("point must lie in [0, 1]");
  return r;
}

// Head and period of a non-random stream.
std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>> split_stream(const BitStream& s) {
  return std::visit(
      [&](const auto& t) -> std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>> {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, BitStream::Zeros>) return {s.head(), {0}};
        else if constexpr (std::is_same_v<T, BitStream::Ones>) return {s.head(), {1}};
        else if constexpr (std::is_same_v<T, BitStream::Periodic>) return {s.head(), t.word};
        else throw UsageError("random streams have no exact value; use --method enclosure");
      },
      s.tail());
}

void put_exact(Json& j, const QSqrt5& v) {
  j["exact_p"] = v.p().get_str();
  j["exact_q"] = v.q().get_str();
  j["exact_d"] = v.d().get_str();
}

std::string triple(const QSqrt5& v) {
  return "(" + v.p().get_str() + "," + v.q().get_str() + "," + v.d().get_str() + ")";
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace

Point parse_point(const std::string& text) {
  if (text.rfind("bits=", 0) == 0) {
    const std::string body = text.substr(5);
    const auto open = body.find('(');
    if (open == std::string::npos) return BitStream(parse_word(body), BitStream::Zeros{});
    if (body.back() != ')' || open + 2 > body.size() - 1)
      throw UsageError("expected bits=<word>(<period>) with a nonempty period");
    return BitStream::periodic(parse_word(body.substr(0, open)),
                               parse_word(body.substr(open + 1, body.size() - open - 2)));
  }
  if (text.rfind("random:", 0) == 0) {
    const Integer seed = parse_integer(text.substr(7), "seed");
    if (sgn(seed) < 0 || !seed.fits_ulong_p()) throw UsageError("seed must fit in 64 bits");
    return BitStream::random(seed.get_ui());
  }
  if (const auto pos = text.find("/2^"); pos != std::string::npos) {
    const Integer m = parse_integer(text.substr(0, pos), "numerator");
    const Integer e = parse_integer(text.substr(pos + 3), "exponent");
    if (sgn(e) < 0 || e > 100000) throw UsageError("exponent out of range");
    return checked_unit(Rational(m, pow2(e.get_ui())));
  }
  if (const auto pos = text.find('/'); pos != std::string::npos) {
    const Integer p = parse_integer(text.substr(0, pos), "numerator");
    const Integer q = parse_integer(text.substr(pos + 1), "denominator");
    if (sgn(q) == 0) throw UsageError("zero denominator");
    return checked_unit(Rational(p, q));
  }
  return checked_unit(Rational(parse_integer(text, "point")));
}

Rational parse_tolerance(const std::string& text) {
  Rational r;
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const Integer q = parse_integer(text.substr(slash + 1), "tolerance");
    if (sgn(q) == 0) throw UsageError("zero denominator");
    r = Rational(parse_integer(text.substr(0, slash), "tolerance"), q);
  } else {
    const auto epos = text.find_first_of("eE");
    const std::string mant = text.substr(0, epos);
    long exp10 = 0;
    if (epos != std::string::npos) exp10 = parse_integer(text.substr(epos + 1), "exponent").get_si();
    const auto dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
      digits = mant.substr(0, dot) + mant.substr(dot + 1);
      exp10 -= static_cast<long>(mant.size() - dot - 1);
    }
    const Integer m = parse_integer(digits, "tolerance");
    Integer p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    r = exp10 < 0 ? Rational(m, p10) : Rational(m * p10);
  }
  r.canonicalize();
  if (sgn(r) <= 0) throw UsageError("tolerance must be positive");
  return r;
}

int cmd_simulate(const SimulateOptions& opt, std::ostream& out) {
  if (opt.steps > kMaxSimulateSteps)
    throw ResourceLimit("at most " + std::to_string(kMaxSimulateSteps) + " steps");
  if (opt.format != "pbm" && opt.format != "pbm4" && opt.format != "csv")
    throw UsageError("format must be pbm, pbm4 or csv");
  const auto rows = evolve(single_site_seed(), opt.steps, opt.rule);
  if (opt.format == "csv") {
    out << "t,i\n";
    for (std::size_t t = 0; t < rows.size(); ++t) {
      const auto cells = rows[t].cells();
      for (std::size_t j = 0; j < cells.size(); ++j)
        if (cells[j]) out << t << ',' << rows[t].offset() + static_cast<std::int64_t>(j) << '\n';
    }
    return kOk;
  }
  const Bitmap bmp = render_rows(rows, opt.steps);
  out << (opt.format == "pbm" ? bmp.to_pbm_ascii() : bmp.to_pbm_binary());
  return kOk;
}

int cmd_counts(const CountsOptions& opt, std::ostream& out) {
  if (opt.mode != "num" && opt.mode != "cum") throw UsageError("mode must be num or cum");
  if (opt.method != "direct" && opt.method != "matrix" && opt.method != "closed")
    throw UsageError("method must be direct, matrix or closed");
  if (opt.method == "direct" && opt.upto > kMaxDirectCount)
    throw ResourceLimit("direct counts are limited to n <= " + std::to_string(kMaxDirectCount));
  if (opt.upto > kMaxCountRows) throw ResourceLimit("too many rows requested");

  const bool cum = opt.mode == "cum";
  out << "n,value\n";
  if (opt.method == "direct") {
    const auto table = cum ? cum_direct_table(opt.upto) : num_direct_table(opt.upto);
    for (std::size_t n = 0; n < table.size(); ++n) out << n << ',' << table[n].get_str() << '\n';
    return kOk;
  }
  for (std::size_t n = 0; n <= opt.upto; ++n) {
    const Nat nn(static_cast<unsigned long>(n));
    Nat v;
    if (opt.method == "matrix")
      v = cum ? cum_matrix(nn) : num_matrix(nn);
    else
      v = cum ? cum_closed(nn) : num_cluster(nn);
    out << n << ',' << v.get_str() << '\n';
  }
  return kOk;
}

int cmd_eval(const EvalOptions& opt, std::ostream& out) {
  const Point point = parse_point(opt.x);
  const std::optional<Rational> eps =
      opt.eps ? std::optional<Rational>(parse_tolerance(*opt.eps)) : std::nullopt;

  std::string method = opt.method;
  const auto* rational = std::get_if<Rational>(&point);
  const auto* stream = std::get_if<BitStream>(&point);
  if (method == "auto") {
    if (rational)
      method = Dyadic::from_rational(*rational) ? "series" : "periodic";
    else
      method = std::holds_alternative<BitStream::RandomBits>(stream->tail()) ? "enclosure"
                                                                             : "periodic";
  }

  auto as_dyadic = [&]() -> Dyadic {
    if (!rational) throw UsageError(method + " needs a dyadic point m/2^i");
    auto d = Dyadic::from_rational(*rational);
    if (!d) throw UsageError(method + " needs a dyadic point m/2^i");
    return *d;
  };
  auto as_stream = [&]() -> BitStream {
    if (stream) return *stream;
    const auto [head, period] = periodic_expansion(*rational);
    return BitStream::periodic(head, period);
  };

  Json j;
  j["x"] = opt.x;
  j["method"] = method;
  std::optional<QSqrt5> exact;
  std::optional<Enclosure> enclosure;

  if (method == "series") {
    exact = eval_dyadic_exact(as_dyadic());
  } else if (method == "recursive") {
    exact = eval_recursive_dyadic(as_dyadic());
  } else if (method == "periodic") {
    if (rational) {
      exact = eval_rational(*rational);
    } else {
      const auto [head, period] = split_stream(*stream);
      exact = eval_periodic_exact(head, period);
    }
  } else if (method == "fk") {
    exact = QSqrt5(eval_fk(as_dyadic(), opt.k));
    j["k"] = opt.k;
  } else if (method != "enclosure") {
    throw UsageError("unknown method '" + method + "'");
  }
  if (method == "enclosure" || eps)
    enclosure = eval_stream_enclosure(as_stream(), eps.value_or(Rational(1, 1000000000000)));

  if (exact) {
    j["value_decimal"] = exact->to_decimal(opt.digits);
    put_exact(j, *exact);
  }
  if (enclosure) {
    j["lo_decimal"] = enclosure->lo.to_decimal(opt.digits);
    j["hi_decimal"] = enclosure->hi.to_decimal(opt.digits);
    j["depth"] = enclosure->depth;
  }

  if (opt.json) {
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "x = " << opt.x << '\n';
  out << "method = " << method << '\n';
  if (exact) {
    out << "F(x) = " << exact->to_decimal(opt.digits) << '\n';
    out << "exact (p,q,d) = " << triple(*exact) << '\n';
  }
  if (enclosure) {
    out << "lo = " << enclosure->lo.to_decimal(opt.digits) << '\n';
    out << "hi = " << enclosure->hi.to_decimal(opt.digits) << '\n';
    out << "depth = " << enclosure->depth << '\n';
  }
  return kOk;
}

int cmd_plot_f(const PlotOptions& opt, std::ostream& out) {
  if (opt.depth > kMaxPlotDepth)
    throw ResourceLimit("plot depth is limited to " + std::to_string(kMaxPlotDepth));
  if (opt.format != "csv" && opt.format != "svg") throw UsageError("format must be csv or svg");
  const unsigned long n = 1ul << opt.depth;
  std::vector<QSqrt5> values;
  values.reserve(n + 1);
  for (unsigned long m = 0; m <= n; ++m) values.push_back(eval_dyadic_exact(Dyadic(m, opt.depth)));

  if (opt.format == "csv") {
    out << "x,F\n";
    for (unsigned long m = 0; m <= n; ++m) {
      Rational x(m, n);
      x.canonicalize();
      out << QSqrt5(x).to_decimal(12) << ',' << values[m].to_decimal(12) << '\n';
    }
    return kOk;
  }

  // Horizontal axis: normalized time t / 2^k (and x for F); vertical axis:
  // normalized space (i + 2^k) / 2^{k+1} for the limit set, F(x) for the curve.
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 1 1\">\n";
  out << "<g transform=\"translate(0,1) scale(1,-1)\">\n";
  if (opt.depth >= 1) {
    const unsigned k = std::min(opt.depth, 12u);
    const Bitmap bmp = prefractal(k);
    const double cell_w = 1.0 / static_cast<double>(bmp.height());
    const double cell_h = 1.0 / static_cast<double>(bmp.width() + 1);
    out << "<g fill=\"#999999\" shape-rendering=\"crispEdges\">\n";
    for (std::size_t t = 0; t < bmp.height(); ++t) {
      std::size_t c = 0;
      while (c < bmp.width()) {
        if (!bmp.get(c, t)) {
          ++c;
          continue;
        }
        const std::size_t start = c;
        while (c < bmp.width() && bmp.get(c, t)) ++c;
        out << "<rect x=\"" << fixed(t * cell_w, 8) << "\" y=\"" << fixed((start + 1) * cell_h, 8)
            << "\" width=\"" << fixed(cell_w, 8) << "\" height=\""
            << fixed((c - start) * cell_h, 8) << "\"/>\n";
      }
    }
    out << "</g>\n";
  }
  out << "<polyline fill=\"none\" stroke=\"#c00000\" stroke-width=\"0.003\" points=\"";
  for (unsigned long m = 0; m <= n; ++m) {
    if (m != 0) out << ' ';
    out << fixed(static_cast<double>(m) / static_cast<double>(n), 8) << ','
        << values[m].to_decimal(8);
  }
  out << "\"/>\n</g>\n</svg>\n";
  return kOk;
}

int cmd_limitset(const LimitsetOptions& opt, std::ostream& out) {
  if (opt.format != "pbm" && opt.format != "pbm4") throw UsageError("format must be pbm or pbm4");
  const Bitmap bmp = prefractal(opt.k);
  out << (opt.format == "pbm" ? bmp.to_pbm_ascii() : bmp.to_pbm_binary());
  return kOk;
}

int cmd_dimension(int jmin, int jmax, std::ostream& out) {
  Json j;
  j["jmin"] = jmin;
  j["jmax"] = jmax;
  j["slope"] = boxcount_slope(jmin, jmax);
  j["target"] = std::round(limit_set_dimension() * 1e6) / 1e6;
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_quotients(const QuotientsOptions& opt, std::ostream& out) {
  const Point point = parse_point(opt.x);
  const auto* rational = std::get_if<Rational>(&point);
  const auto x = rational ? Dyadic::from_rational(*rational) : std::nullopt;
  if (!x) throw UsageError("quotients need a dyadic point m/2^i in (0, 1)");
  if (opt.side != "left" && opt.side != "right" && opt.side != "both")
    throw UsageError("side must be left, right or both");
  const bool left = opt.side != "right", right = opt.side != "left";

  Json rows = Json::array();
  for (const auto& r : quotient_sequence(*x, opt.mmax, left, right)) {
    Json row;
    row["point"] = r.point;
    row["side"] = r.side == Side::Left ? "left" : "right";
    row["m"] = r.m;
    row["value_decimal"] = r.quotient.to_decimal(opt.digits);
    put_exact(row, r.quotient);
    rows.push_back(std::move(row));
  }
  out << rows.dump(2) << '\n';
  return kOk;
}

std::string report_json(const CheckReport& report) {
  Json j;
  j["suite"] = report.suite;
  Json cases = Json::array();
  for (const auto& c : report.cases) {
    Json row;
    row["id"] = c.id;
    row["status"] = c.pass ? "pass" : "fail";
    row["detail"] = c.detail;
    cases.push_back(std::move(row));
  }
  j["cases"] = std::move(cases);
  j["summary"] = {{"passed", report.passed()}, {"failed", report.failed()}};
  j["exit_code"] = report.exit_code();
  return j.dump(2);
}

int cmd_check(const std::string& suite, std::ostream& out) {
  const CheckReport report = run_suite(suite);
  out << report_json(report) << '\n';
  return report.exit_code();
}

int run_guarded(const std::function<int()>& command, std::ostream& err) {
  try {
    return command();
  } catch (const OddCode& e) {
    err << "error: OddCode: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DivisionByZero& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace rule150::cli
