#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace kothedim {

// Weight values live in log domain: a positive value v is carried as ln v,
// the value 0 as -infinity.  -infinity absorbs under addition (products of
// weights) and is dominated by every log value.
inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_log_zero(double ln_v) { return ln_v == kLogZero; }

/// ln(a*b) with the bottom element absorbing.
inline double log_product(double ln_a, double ln_b) {
  if (is_log_zero(ln_a) || is_log_zero(ln_b)) return kLogZero;
  return ln_a + ln_b;
}

/// ln(a^e), e > 0; 0^e = 0.
inline double log_power(double ln_a, double exponent) {
  if (is_log_zero(ln_a)) return kLogZero;
  return exponent * ln_a;
}

/// ln(min(a, 1)) = min(ln a, 0); exact on the bottom element.
inline double log_bar(double ln_a) { return ln_a < 0.0 ? ln_a : 0.0; }

/// ln p - ln q as a domination defect: -inf means "no constraint" (p = 0),
/// +inf means "unsatisfiable" (p > 0, q = 0).
inline double log_ratio(double ln_p, double ln_q) {
  if (is_log_zero(ln_p)) return -kInf;
  if (is_log_zero(ln_q)) return kInf;
  return ln_p - ln_q;
}

/// Kahan compensated accumulator for plain-domain sums.  Saturates cleanly
/// at +-infinity instead of poisoning the compensation with NaN.
class KahanSum {
 public:
  void add(double x) {
    double y = x - compensation_;
    double t = sum_ + y;
    if (!std::isfinite(t)) {
      sum_ = t;
      compensation_ = 0.0;
      return;
    }
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

struct NotAnAlgebraError : std::runtime_error {
  explicit NotAnAlgebraError(const std::string& what) : std::runtime_error(what) {}
};

// A certificate or bound produced by the library failed its own re-check;
// indicates unsound input or a bug, never a property of the family.
struct InternalConsistencyError : std::runtime_error {
  explicit InternalConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

struct SpecValidationError : std::runtime_error {
  SpecValidationError(const std::string& field, const std::string& what)
      : std::runtime_error(field.empty() ? what : field + ": " + what), field_path(field) {}
  std::string field_path;
};

}  // namespace kothedim
