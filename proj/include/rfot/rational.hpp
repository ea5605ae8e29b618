#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace rfot {

// Exact rationals, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

Rational make_rational(std::int64_t numerator, std::int64_t denominator = 1);

// Accepts "p/q" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "p/q", or "p" for integers.
std::string to_string(const Rational& value);

// Truncated-toward-nearest decimal rendering for human readers only.
std::string to_decimal(const Rational& value, int digits);

// A value of T or the distinguished symbol "infinite". Arithmetic on the
// infinite case is never implicit: callers must branch on is_infinite().
template <typename T>
class MaybeInfinite {
 public:
  MaybeInfinite(T value) : value_(std::move(value)), infinite_(false) {}  // NOLINT

  static MaybeInfinite infinite() {
    MaybeInfinite result{T{}};
    result.infinite_ = true;
    return result;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  const T& value() const {
    if (infinite_) throw std::logic_error("value() of an infinite quantity");
    return value_;
  }

  friend bool operator==(const MaybeInfinite& a, const MaybeInfinite& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

 private:
  T value_;
  bool infinite_;
};

}  // namespace rfot
