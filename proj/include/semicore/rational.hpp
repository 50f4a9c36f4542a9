#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "semicore/errors.hpp"

namespace semicore {

/// Exact rational in lowest terms with a positive denominator.
///
/// Products are formed in 128-bit arithmetic and must fit back into 64 bits
/// after reduction; the quantities in this library (d(d+1)/(2n) and friends)
/// stay far below that.
class BoundValue {
 public:
  constexpr BoundValue() = default;
  BoundValue(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(implicit)
  BoundValue(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw Error(ErrorKind::DomainError, "zero denominator");
    assign(numerator, denominator);
  }

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend BoundValue operator+(const BoundValue& a, const BoundValue& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend BoundValue operator-(const BoundValue& a, const BoundValue& b) { return a + BoundValue(-b.num_, b.den_); }
  friend BoundValue operator*(const BoundValue& a, const BoundValue& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend BoundValue operator/(const BoundValue& a, const BoundValue& b) {
    if (b.num_ == 0) throw Error(ErrorKind::DomainError, "division by zero");
    return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }

  friend bool operator==(const BoundValue& a, const BoundValue& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const BoundValue& a, const BoundValue& b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  friend std::ostream& operator<<(std::ostream& os, const BoundValue& v) { return os << v.str(); }

 private:
  static __int128 gcd_wide(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static BoundValue from_wide(__int128 n, __int128 d) {
    if (d == 0) throw Error(ErrorKind::DomainError, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd_wide(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lim = INT64_MAX;
    if (n > lim || n < -lim || d > lim) throw Error(ErrorKind::DomainError, "rational overflow");
    BoundValue out;
    out.num_ = static_cast<std::int64_t>(n);
    out.den_ = static_cast<std::int64_t>(d);
    return out;
  }

  void assign(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace semicore
