#pragma once

#include <stdexcept>
#include <string>

namespace rule150 {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Wolfram code whose local rule maps 000 to 1.
class OddCode : public DomainError {
 public:
  explicit OddCode(int code)
      : DomainError("rule " + std::to_string(code) +
                    " maps 000 to 1; finite support is not preserved"),
        code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in Q(sqrt5)") {}
};

/// Request exceeds a memory or time guard.
class ResourceLimit : public std::length_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::length_error(what) {}
};

}  // namespace rule150
