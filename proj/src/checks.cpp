#include "rule150/checks.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "rule150/analysis.hpp"
#include "rule150/counting.hpp"
#include "rule150/eca.hpp"
#include "rule150/errors.hpp"
#include "rule150/fractal.hpp"
#include "rule150/singular.hpp"

namespace rule150 {

std::size_t CheckReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CheckCase& c) { return c.pass; }));
}

namespace {

using Case = std::function<CheckCase()>;

CheckCase outcome(std::string id, bool pass, std::string detail) {
  return {std::move(id), pass, std::move(detail)};
}

std::vector<Case> eca_cases() {
  return {
      [] {
        const auto rows = evolve(single_site_seed(), 512);
        for (std::size_t n = 0; n < rows.size(); ++n)
          for (std::int64_t i = 0; i <= static_cast<std::int64_t>(n); ++i)
            if (rows[n].at(i) != rows[n].at(-i))
              return outcome("eca.symmetry", false, "row " + std::to_string(n));
        return outcome("eca.symmetry", true, "rows 0..512 mirror-symmetric");
      },
      [] {
        const auto rows = evolve(single_site_seed(), 512);
        for (std::size_t n = 0; n <= 256; ++n)
          for (std::int64_t i = -static_cast<std::int64_t>(n); i <= static_cast<std::int64_t>(n); ++i)
            if (rows[2 * n].at(2 * i) != rows[n].at(i))
              return outcome("eca.coarse_relation", false, "n = " + std::to_string(n));
        return outcome("eca.coarse_relation", true, "(T^{2n} x)_{2i} = (T^n x)_i for n <= 256");
      },
      [] {
        const auto rows = evolve(single_site_seed(), 512);
        for (std::size_t n = 0; n <= 512; n += 2)
          for (std::int64_t i = -static_cast<std::int64_t>(n) - 1;
               i <= static_cast<std::int64_t>(n) + 1; i += 2)
            if (rows[n].at(i)) return outcome("eca.vanishing", false, "n = " + std::to_string(n));
        return outcome("eca.vanishing", true, "odd cells vanish on even rows <= 512");
      },
      [] {
        const auto rows = evolve(single_site_seed(), 512);
        for (std::size_t n = 0; n < rows.size(); ++n) {
          const auto w = static_cast<std::int64_t>(n);
          if (rows[n].offset() != -w || rows[n].size() != 2 * n + 1)
            return outcome("eca.support_width", false, "row " + std::to_string(n));
        }
        return outcome("eca.support_width", true, "row n spans [-n, n]");
      },
  };
}

std::vector<Case> counting_cases() {
  return {
      [] {
        const auto table = num_direct_table(4096);
        for (unsigned long n = 0; n <= 4096; ++n) {
          const Nat nn(n);
          if (num_matrix(nn) != table[n] || num_cluster(nn) != table[n])
            return outcome("counting.num_methods", false, "n = " + std::to_string(n));
        }
        return outcome("counting.num_methods", true, "direct = matrix = cluster on [0, 4096]");
      },
      [] {
        const auto cum = cum_direct_table(4096);
        for (unsigned long m = 1; m <= 4096; ++m)
          if (cum_decompose(Nat(m)) != cum[m - 1])
            return outcome("counting.decompose", false, "m = " + std::to_string(m));
        return outcome("counting.decompose", true, "cum_decompose(m) = cum(m-1) on [1, 4096]");
      },
      [] {
        const auto cum = cum_direct_table(4095);
        for (unsigned long k = 1; k <= 12; ++k)
          if (cum_pow2(k) != cum[(1ul << k) - 1])
            return outcome("counting.pow2", false, "k = " + std::to_string(k));
        return outcome("counting.pow2", true, "a M^{k-1} v_0 = cum(2^k - 1) for k <= 12");
      },
      [] {
        for (unsigned long k = 1; k <= 64; ++k) {
          const QSqrt5 c = cum_pow2_closed(k);
          if (!c.is_rational() || c.rational() != Rational(cum_pow2(k)))
            return outcome("counting.closed_form", false, "k = " + std::to_string(k));
        }
        return outcome("counting.closed_form", true, "closed form integral and equal for k <= 64");
      },
      [] {
        for (unsigned len = 0; len <= 16; ++len)
          for (unsigned long w = 0; w < (1ul << len); ++w) {
            std::vector<std::uint8_t> word(len);
            for (unsigned j = 0; j < len; ++j) word[j] = (w >> j) & 1u;
            auto rev = word;
            std::reverse(rev.begin(), rev.end());
            if (num_of_word(word) != num_of_word(rev))
              return outcome("counting.reversal", false, "length " + std::to_string(len));
          }
        return outcome("counting.reversal", true, "digit products reversal-invariant, |w| <= 16");
      },
  };
}

std::vector<Case> singular_cases() {
  return {
      [] {
        for (unsigned long i = 0; i <= 10; ++i)
          for (unsigned long m = 0; m <= (1ul << i); ++m) {
            const Dyadic x(m, i);
            if (eval_dyadic_exact(x) != eval_recursive_dyadic(x))
              return outcome("singular.evaluators", false, x.str());
          }
        return outcome("singular.evaluators", true, "series = recursion for depth <= 10");
      },
      [] {
        std::mt19937_64 rng(7);
        const QSqrt5 a = QSqrt5::alpha();
        const Dyadic half(1, 1), three_q(3, 2);
        for (int t = 0; t < 300; ++t) {
          const unsigned long depth = 1 + rng() % 20;
          const Dyadic x(Integer(static_cast<unsigned long>(rng() % ((1ul << depth) + 1))), depth);
          QSqrt5 residual;
          if (x < half)
            residual = eval_dyadic_exact(x) - a * eval_dyadic_exact(x.twice());
          else if (x < three_q)
            residual = eval_dyadic_exact(x) - QSqrt5(3) * eval_dyadic_exact(x - half) - a;
          else
            residual = eval_dyadic_exact(x) - eval_dyadic_exact(x - half) -
                       QSqrt5(2) * eval_dyadic_exact(x - three_q) - a - QSqrt5(2) * a * a;
          if (!residual.is_zero()) return outcome("singular.functional_equations", false, x.str());
        }
        return outcome("singular.functional_equations", true, "300 random dyadics, zero residual");
      },
      [] {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 1000; ++t) {
          const unsigned long a = rng() % 65537, b = rng() % 65537;
          if (a == b) continue;
          const Dyadic x(std::min(a, b), 16), y(std::max(a, b), 16);
          if (!(eval_dyadic_exact(x) < eval_dyadic_exact(y)))
            return outcome("singular.monotone", false, x.str() + " vs " + y.str());
        }
        return outcome("singular.monotone", true, "1000 random pairs strictly increasing");
      },
      [] {
        for (unsigned long i = 1; i <= 12; ++i)
          for (unsigned long m = 1; m < (1ul << i); m += 2)
            if (!check_dual_representation(Dyadic(m, i)))
              return outcome("singular.dual_expansion", false, Dyadic(m, i).str());
        return outcome("singular.dual_expansion", true, "both expansions agree, depth <= 12");
      },
      [] {
        const bool ok = eval_periodic_exact({}, {1}) == QSqrt5(1) &&
                        eval_periodic_exact({}, {0, 1}) == QSqrt5(-3, 2, 11);
        return outcome("singular.periodic", ok, "F(1) = 1, F(1/3) = (2 sqrt5 - 3)/11");
      },
  };
}

std::vector<Case> analysis_cases() {
  return {
      [] {
        for (const auto& x : {Dyadic(1, 1), Dyadic(3, 2), Dyadic(5, 3), Dyadic(13, 4)}) {
          for (unsigned long m = x.exponent() + 1; m <= 30; ++m)
            if (left_quotient(x, m) != left_quotient_literal(x, m))
              return outcome("analysis.left_closed_form", false, x.str());
          for (unsigned long m = x.exponent() + 2; m <= 30; ++m)
            if (right_quotient(x, m) != right_quotient_literal(x, m))
              return outcome("analysis.right_closed_form", false, x.str());
        }
        return outcome("analysis.closed_forms", true, "closed forms match literal quotients");
      },
      [] {
        const Dyadic half(1, 1);
        bool exceeded = false;
        for (unsigned long m = 4; m <= 80; ++m) {
          if (!(left_quotient(half, m) < left_quotient(half, m + 1)))
            return outcome("analysis.left_diverges", false, "m = " + std::to_string(m));
          exceeded = exceeded || left_quotient(half, m) > QSqrt5(1000000);
        }
        return outcome("analysis.left_diverges", exceeded, "increasing from m = 4, exceeds 1e6");
      },
      [] {
        const QSqrt5 tiny(Rational(1, 1000000));
        for (unsigned long m = 35; m <= 80; ++m)
          if (!(right_quotient(Dyadic(1, 1), m) < tiny))
            return outcome("analysis.right_vanishes", false, "m = " + std::to_string(m));
        return outcome("analysis.right_vanishes", true, "below 1e-6 for m >= 35");
      },
      [] {
        for (std::uint64_t s = 0; s < 20; ++s)
          for (const auto& r : statistic_ratios(BitStream::random(s), 200))
            if (classify_ratio(r) == RatioKind::Other)
              return outcome("analysis.ratio_trichotomy", false, "seed " + std::to_string(s));
        return outcome("analysis.ratio_trichotomy", true, "ratios are 2a, 6a or in [10a/3, 22a/5]");
      },
  };
}

std::vector<Case> fractal_cases() {
  return {
      [] {
        for (unsigned k = 1; k <= 10; ++k)
          if (Nat(static_cast<unsigned long>(prefractal(k).popcount())) != cum_pow2(k))
            return outcome("fractal.popcount", false, "k = " + std::to_string(k));
        return outcome("fractal.popcount", true, "popcount = cum(2^k - 1) for k <= 10");
      },
      [] {
        for (unsigned k = 2; k <= 10; ++k)
          if (!selfsim_check(k)) return outcome("fractal.self_similar", false, "k = " + std::to_string(k));
        return outcome("fractal.self_similar", true, "nested prefractals for 2 <= k <= 10");
      },
      [] {
        const double target = limit_set_dimension();
        const double s1 = boxcount_slope(8, 24), s2 = boxcount_slope(40, 64);
        const bool ok = std::abs(s1 - target) <= 0.01 && std::abs(s2 - target) <= 0.001;
        return outcome("fractal.dimension", ok,
                       "slopes " + std::to_string(s1) + ", " + std::to_string(s2));
      },
  };
}

std::vector<Case> cases_for(std::string_view name) {
  if (name == "eca") return eca_cases();
  if (name == "counting") return counting_cases();
  if (name == "singular") return singular_cases();
  if (name == "analysis") return analysis_cases();
  if (name == "fractal") return fractal_cases();
  if (name == "all") {
    std::vector<Case> all;
    for (auto part : {"eca", "counting", "singular", "analysis", "fractal"}) {
      auto c = cases_for(part);
      all.insert(all.end(), c.begin(), c.end());
    }
    return all;
  }
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"eca", "counting", "singular", "analysis",
                                              "fractal", "all"};
  return names;
}

CheckReport run_suite(std::string_view name) {
  CheckReport report{std::string(name), {}};
  for (const auto& c : cases_for(name)) {
    try {
      report.cases.push_back(c());
    } catch (const std::exception& e) {
      report.cases.push_back({"exception", false, e.what()});
    }
  }
  return report;
}

}  // namespace rule150
