#pragma once

// Exact arithmetic over the Gaussian rationals Q(i).
//
// Rational keeps an int64 numerator/denominator pair and only falls back to
// GMP when a result does not fit. Almost every structure constant met in the
// catalog is a small integer, so the fast path carries the axiom checkers.

#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace manin {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class Rational {
 public:
  Rational() = default;
  Rational(int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int64_t n, int64_t d);
  explicit Rational(const mpq_class& q);

  /// Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  int sign() const;
  bool is_small() const { return !big_; }

  mpq_class to_mpq() const;
  /// Canonical reduced form: "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 n, __int128 d);
  static Rational from_mpq(mpq_class q);

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

/// Element a + b i of Q(i).
class Scalar {
 public:
  Scalar() = default;
  Scalar(int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return {Rational(0), Rational(1)}; }
  /// Accepts "a", "a/b", "i", "-i", "a+bi", "a/b-c/di", "3i/4" style input.
  static Scalar parse(const std::string& text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Scalar conj() const { return {re_, -im_}; }
  Scalar inverse() const;
  std::string str() const;

  Scalar operator-() const { return {-re_, -im_}; }
  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Rational re_;
  Rational im_;
};

/// (-1)^k as a Scalar.
inline Scalar sign_of(int k) { return (k & 1) ? Scalar(-1) : Scalar(1); }

std::ostream& operator<<(std::ostream& os, const Rational& r);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace manin
