#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rfot {

// Enumeration caps. Every exponential routine checks one of these and
// refuses with CapExceeded instead of running away.
struct Limits {
  std::uint64_t max_paths = 1'000'000;
  std::uint64_t max_scenarios = 10'000'000;
  std::uint64_t max_lp_nonzeros = 50'000;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace rfot
