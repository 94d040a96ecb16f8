#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dpm {

enum class LengthMode { exact, approximate };

const char* to_string(LengthMode mode);

/// Non-negative edge length. Exact lengths are arbitrary-precision rationals;
/// approximate lengths are doubles. Arithmetic between the two modes throws.
class Length {
 public:
  Length() = default;

  static Length exact(mpq_class value);
  static Length exact(long numerator, unsigned long denominator = 1);
  static Length approximate(double value);
  static Length zero(LengthMode mode);

  /// Accepts integers, decimals ("2.25") and fractions ("7/4"). In exact mode
  /// decimals are converted without rounding.
  static Length parse(std::string_view text, LengthMode mode);

  LengthMode mode() const { return exact_ ? LengthMode::exact : LengthMode::approximate; }
  bool is_exact() const { return exact_; }
  const mpq_class& rational() const;
  double to_double() const;

  Length& operator+=(const Length& other);
  friend Length operator+(Length a, const Length& b) { return a += b; }

  friend bool operator==(const Length& a, const Length& b);
  friend std::strong_ordering operator<=>(const Length& a, const Length& b);

  /// Integer or "a/b" in exact mode, shortest round-tripping decimal otherwise.
  std::string str() const;

 private:
  bool exact_ = true;
  mpq_class q_{0};
  double d_ = 0.0;
};

/// Relative comparison used for approximate-mode verification.
bool approximately_equal(const Length& a, const Length& b, double rel_tol);

}  // namespace dpm
