#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace vex {

using BigInt = boost::multiprecision::cpp_int;

/// A dyadic rational num / 2^log2den.
///
/// Canonical form: num is odd, or num == 0 and log2den == 0. A negative
/// log2den never survives normalization; integers with even numerators are
/// stored with log2den == 0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long v) : num_(v) { normalize(); }  // NOLINT(google-explicit-constructor)
  explicit Dyadic(BigInt num, int log2den = 0);

  /// 2^e for any integer e.
  static Dyadic pow2(int e);

  const BigInt& num() const { return num_; }
  int log2den() const { return log2den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return log2den_ == 0; }
  int sign() const { return num_.sign(); }
  bool is_one() const { return log2den_ == 0 && num_ == 1; }

  /// Integer value; throws NotDivisible when the denominator is nontrivial.
  BigInt to_integer() const;

  /// this * 2^e.
  Dyadic scaled_pow2(int e) const;

  /// this / d, throwing NotDivisible unless the quotient is dyadic.
  Dyadic divide_exact(const Dyadic& d) const;

  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& o);
  Dyadic& operator-=(const Dyadic& o);
  Dyadic& operator*=(const Dyadic& o);

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.log2den_ == b.log2den_ && a.num_ == b.num_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend bool operator<(const Dyadic& a, const Dyadic& b);

  /// "3", "-5/4".
  std::string to_string() const;

  std::size_t hash() const;

 private:
  void normalize();

  BigInt num_{0};
  int log2den_ = 0;
};

}  // namespace vex
