#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "fgc/arith.hpp"
#include "fgc/error.hpp"

namespace fgc {

// Exact rational on 64-bit parts. All products go through 128-bit
// intermediates and overflow past 64 bits is rejected; the quantities in
// this artifact stay far below that.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(i64 num, i64 den = 1) : num_(num), den_(den) { normalize(); }

  static Rational parse(const std::string& text);

  i64 num() const { return num_; }
  i64 den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator+(const Rational& o) const {
    return from128(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return from128(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return from128(i128(num_) * o.num_, i128(den_) * o.den_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  Rational reciprocal() const {
    if (num_ == 0) fail(ErrorCode::InvalidArgument, "rational: reciprocal of zero");
    return Rational(den_, num_);
  }

  std::strong_ordering operator<=>(const Rational& o) const {
    i128 lhs = i128(num_) * o.den_;
    i128 rhs = i128(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

  double to_double() const { return double(num_) / double(den_); }

  /// "p" when integral, else "p/q".
  std::string str() const;
  /// Always "p/q".
  std::string str_slash() const;

 private:
  using i128 = __int128;

  void normalize() {
    if (den_ == 0) fail(ErrorCode::InvalidArgument, "rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    i64 g = gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  static Rational from128(i128 num, i128 den) {
    if (den == 0) fail(ErrorCode::InvalidArgument, "rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 a = num < 0 ? -num : num;
    i128 b = den;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    const i128 lo = INT64_MIN, hi = INT64_MAX;
    if (num < lo || num > hi || den > hi)
      fail(ErrorCode::Internal, "rational: 64-bit overflow");
    Rational r;
    r.num_ = i64(num);
    r.den_ = i64(den == 0 ? 1 : den);
    if (r.num_ == 0) r.den_ = 1;
    return r;
  }

  i64 num_;
  i64 den_;
};

}  // namespace fgc
