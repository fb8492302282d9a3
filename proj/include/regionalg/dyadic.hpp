#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace regionalg {

using Int = boost::multiprecision::cpp_int;

inline Int pow2(unsigned e) { return Int(1) << e; }

/// Exact dyadic rational m / 2^e.  Canonical form: e == 0 or m odd.
/// All arithmetic is exact; there is no rounding path anywhere.
class Dyadic {
public:
  Dyadic() : mant_(0), exp_(0) {}
  Dyadic(long v) : mant_(v), exp_(0) {}
  Dyadic(Int mant, unsigned exp = 0) : mant_(std::move(mant)), exp_(exp) {
    normalize();
  }

  const Int &mantissa() const { return mant_; }
  unsigned exponent() const { return exp_; }

  bool is_zero() const { return mant_ == 0; }
  int sign() const { return mant_ == 0 ? 0 : (mant_ < 0 ? -1 : 1); }

  Dyadic operator-() const { return Dyadic(-mant_, exp_); }

  friend Dyadic operator+(const Dyadic &a, const Dyadic &b) {
    unsigned e = std::max(a.exp_, b.exp_);
    return Dyadic((a.mant_ << (e - a.exp_)) + (b.mant_ << (e - b.exp_)), e);
  }
  friend Dyadic operator-(const Dyadic &a, const Dyadic &b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic &a, const Dyadic &b) {
    return Dyadic(a.mant_ * b.mant_, a.exp_ + b.exp_);
  }

  /// Exact division by 2^k.
  Dyadic div_pow2(unsigned k) const { return Dyadic(mant_, exp_ + k); }
  Dyadic mul_pow2(unsigned k) const { return Dyadic(mant_ << k, exp_); }

  static Dyadic mid(const Dyadic &a, const Dyadic &b) {
    return (a + b).div_pow2(1);
  }

  friend bool operator==(const Dyadic &a, const Dyadic &b) {
    return a.exp_ == b.exp_ && a.mant_ == b.mant_;
  }
  friend std::strong_ordering operator<=>(const Dyadic &a, const Dyadic &b) {
    unsigned e = std::max(a.exp_, b.exp_);
    Int l = a.mant_ << (e - a.exp_);
    Int r = b.mant_ << (e - b.exp_);
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "0", "1", "-3", "7/16": reduced fraction with a power-of-two denominator.
  std::string str() const {
    std::string s = mant_.str();
    if (exp_ == 0) return s;
    return s + "/" + pow2(exp_).str();
  }

  /// Accepts "m", "m/d" with d a power of two, and "m/2^e".
  static std::optional<Dyadic> parse(const std::string &text);

private:
  void normalize() {
    if (mant_ == 0) {
      exp_ = 0;
      return;
    }
    while (exp_ > 0 && (mant_ & 1) == 0) {
      mant_ >>= 1;
      --exp_;
    }
  }

  Int mant_;
  unsigned exp_;
};

} // namespace regionalg
