#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rule150 {

struct CheckCase {
  std::string id;
  bool pass = false;
  std::string detail;
};

/// Outcome of one invariant suite. Exit code 0 iff every case passed.
struct CheckReport {
  std::string suite;
  std::vector<CheckCase> cases;

  std::size_t passed() const;
  std::size_t failed() const { return cases.size() - passed(); }
  int exit_code() const { return failed() == 0 ? 0 : 1; }
};

/// eca, counting, singular, analysis, fractal, all.
const std::vector<std::string>& suite_names();

/// Runs a named suite. Throws DomainError for an unknown name.
CheckReport run_suite(std::string_view name);

}  // namespace rule150
