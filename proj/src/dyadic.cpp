#include "vex/dyadic.hpp"

#include <boost/functional/hash.hpp>

#include "vex/errors.hpp"

namespace vex {

Dyadic::Dyadic(BigInt num, int log2den) : num_(std::move(num)), log2den_(log2den) {
  normalize();
}

void Dyadic::normalize() {
  if (num_.is_zero()) {
    log2den_ = 0;
    return;
  }
  if (log2den_ < 0) {
    num_ <<= -log2den_;
    log2den_ = 0;
    return;
  }
  if (log2den_ == 0) return;
  const unsigned tz = boost::multiprecision::lsb(boost::multiprecision::abs(num_));
  const int shift = std::min<int>(static_cast<int>(tz), log2den_);
  if (shift > 0) {
    num_ >>= shift;
    log2den_ -= shift;
  }
}

Dyadic Dyadic::pow2(int e) {
  if (e >= 0) return Dyadic(BigInt(1) << e, 0);
  return Dyadic(BigInt(1), -e);
}

BigInt Dyadic::to_integer() const {
  if (log2den_ != 0) throw NotDivisible("dyadic " + to_string() + " is not an integer");
  return num_;
}

Dyadic Dyadic::scaled_pow2(int e) const {
  Dyadic r = *this;
  if (r.is_zero()) return r;
  r.log2den_ -= e;
  r.normalize();
  return r;
}

Dyadic Dyadic::divide_exact(const Dyadic& d) const {
  if (d.is_zero()) throw NotDivisible("division by zero");
  if (is_zero()) return {};
  // Split d = odd * 2^k (times 2^-log2den).
  BigInt dn = d.num_;
  const unsigned tz = boost::multiprecision::lsb(boost::multiprecision::abs(dn));
  dn >>= tz;
  BigInt q, rem;
  boost::multiprecision::divide_qr(num_, dn, q, rem);
  if (!rem.is_zero()) {
    throw NotDivisible(to_string() + " / " + d.to_string() + " is not dyadic");
  }
  return Dyadic(std::move(q), log2den_ - d.log2den_ + static_cast<int>(tz));
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.num_ = -r.num_;
  return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (log2den_ == o.log2den_) {
    num_ += o.num_;
  } else if (log2den_ > o.log2den_) {
    num_ += o.num_ << (log2den_ - o.log2den_);
  } else {
    num_ = (num_ << (o.log2den_ - log2den_)) + o.num_;
    log2den_ = o.log2den_;
  }
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& o) { return *this += -o; }

Dyadic& Dyadic::operator*=(const Dyadic& o) {
  num_ *= o.num_;
  log2den_ += o.log2den_;
  normalize();
  return *this;
}

bool operator<(const Dyadic& a, const Dyadic& b) {
  const int e = std::max(a.log2den_, b.log2den_);
  return (a.num_ << (e - a.log2den_)) < (b.num_ << (e - b.log2den_));
}

std::string Dyadic::to_string() const {
  std::string s = num_.str();
  if (log2den_ == 0) return s;
  return s + "/" + (BigInt(1) << log2den_).str();
}

std::size_t Dyadic::hash() const {
  using boost::multiprecision::hash_value;
  std::size_t h = hash_value(num_);
  boost::hash_combine(h, log2den_);
  return h;
}

}  // namespace vex
