#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lawvere {

/// A value in [0, infinity]: an exact nonnegative rational, or infinity.
///
/// Addition absorbs into infinity. The truncated difference `hom` follows
/// the conventions inf - inf = 0, a - inf = -inf (truncated to 0), and
/// inf - a = inf for finite a. These are not limits of finite arithmetic,
/// so infinity is a distinct state rather than a sentinel rational.
class ExtNN {
 public:
  ExtNN() : q_(0), inf_(false) {}

  /// Finite value from an exact rational; throws Error("negative-value")
  /// if q < 0. The stored fraction is canonical (gcd 1, positive
  /// denominator).
  explicit ExtNN(mpq_class q);

  static ExtNN infinity();
  static ExtNN from_int(unsigned long n) { return ExtNN(mpq_class(n)); }

  /// num/den in lowest terms; throws on den == 0 or negative inputs.
  static ExtNN fraction(long num, long den);

  /// Accepts "p", "p/q", or "inf". Rejects signs, whitespace, zero
  /// denominators, and trailing junk.
  static std::optional<ExtNN> parse(std::string_view text);

  bool is_infinite() const { return inf_; }
  bool is_zero() const { return !inf_ && q_ == 0; }

  /// Only meaningful when finite.
  const mpq_class& finite_value() const { return q_; }

  /// "p/q", "p" (denominator 1), or "inf".
  std::string str() const;

  friend bool operator==(const ExtNN& a, const ExtNN& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.q_ == b.q_);
  }
  friend bool operator<(const ExtNN& a, const ExtNN& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.q_ < b.q_;
  }
  friend bool operator<=(const ExtNN& a, const ExtNN& b) { return !(b < a); }
  friend bool operator>(const ExtNN& a, const ExtNN& b) { return b < a; }
  friend bool operator>=(const ExtNN& a, const ExtNN& b) { return !(a < b); }

  friend ExtNN operator+(const ExtNN& a, const ExtNN& b);

 private:
  mpq_class q_;
  bool inf_;
};

/// Internal hom of the value category: max(b - a, 0) under the stated
/// infinity conventions. Satisfies the adjunction a + b >= c iff
/// a >= hom(b, c).
ExtNN hom(const ExtNN& a, const ExtNN& b);

/// max(hom(a,b), hom(b,a)); the symmetric extended distance |a - b|.
ExtNN absdiff(const ExtNN& a, const ExtNN& b);

inline const ExtNN& min(const ExtNN& a, const ExtNN& b) { return b < a ? b : a; }
inline const ExtNN& max(const ExtNN& a, const ExtNN& b) { return a < b ? b : a; }

}  // namespace lawvere
