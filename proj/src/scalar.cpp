#include "manin/scalar.hpp"

#include <limits>
#include <sstream>

namespace manin {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? u128(-(v + 1)) + 1 : u128(v); }

bool fits64(i128 v) {
  return v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max();
}

mpz_class mpz_from(i128 v) {
  const bool neg = v < 0;
  u128 mag = abs128(v);
  mpz_class hi(static_cast<unsigned long>(mag >> 64));
  mpz_class lo(static_cast<unsigned long>(mag & ~uint64_t(0)));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

}  // namespace

Rational::Rational(int64_t n, int64_t d) {
  if (d == 0) throw DivisionByZero();
  *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::from_wide(i128 n, i128 d) {
  if (d == 0) throw DivisionByZero();
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  u128 g = gcd128(abs128(n), u128(d));
  if (g > 1) {
    n /= i128(g);
    d /= i128(g);
  }
  Rational r;
  if (fits64(n) && fits64(d)) {
    r.num_ = static_cast<int64_t>(n);
    r.den_ = static_cast<int64_t>(d);
    return r;
  }
  mpq_class q(mpz_from(n), mpz_from(d));
  r.num_ = 0;
  r.den_ = 1;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  Rational r;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
    return r;
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (q.get_den() == 0) throw DivisionByZero();
  return from_mpq(q);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  return from_wide(-i128(num_), den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    if (a.den_ == 1 && b.den_ == 1) {
      int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rational(s);
    }
    return Rational::from_wide(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                               i128(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (b.num_ == 0) return a;
    if (a.den_ == 1 && b.den_ == 1) {
      int64_t s;
      if (!__builtin_sub_overflow(a.num_, b.num_, &s)) return Rational(s);
    }
    return Rational::from_wide(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                               i128(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() - b.to_mpq());
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      int64_t p;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p)) return Rational(p);
    }
    return Rational::from_wide(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (!a.big_ && !b.big_) {
    return Rational::from_wide(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  // Canonical form: a big value never equals a small one.
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  return a.to_mpq() < b.to_mpq();
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return {a.re_ * b.re_};
  if (a.im_.is_zero()) return {a.re_ * b.re_, a.re_ * b.im_};
  if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

Scalar& Scalar::operator+=(const Scalar& b) {
  if (!b.re_.is_zero()) re_ += b.re_;
  if (!b.im_.is_zero()) im_ += b.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  if (!b.re_.is_zero()) re_ -= b.re_;
  if (!b.im_.is_zero()) im_ -= b.im_;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (im_.is_zero()) return {Rational(1) / re_};
  Rational norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

std::string Scalar::str() const {
  if (im_.is_zero()) return re_.str();
  std::string im_part;
  if (im_.is_one()) {
    im_part = "i";
  } else if (im_ == Rational(-1)) {
    im_part = "-i";
  } else {
    im_part = im_.str() + "i";
  }
  if (re_.is_zero()) return im_part;
  if (im_part[0] == '-') return re_.str() + im_part;
  return re_.str() + "+" + im_part;
}

Scalar Scalar::parse(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (c != ' ') text += c;
  }
  if (text.empty()) throw std::invalid_argument("empty scalar");
  // "3i/4" -> "3/4i"
  if (auto p = text.find("i/"); p != std::string::npos) {
    text.erase(p, 1);
    text += 'i';
  }
  if (text.back() != 'i') return {Rational::parse(text[0] == '+' ? text.substr(1) : text)};
  // Split at the last sign that is not the leading one and not after '/'.
  std::string body = text.substr(0, text.size() - 1);
  size_t split = std::string::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
      split = k;
      break;
    }
  }
  std::string re_text = split == std::string::npos ? "0" : body.substr(0, split);
  std::string im_text = split == std::string::npos ? body : body.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  if (im_text[0] == '+') im_text = im_text.substr(1);
  if (re_text.size() > 0 && re_text[0] == '+') re_text = re_text.substr(1);
  return {Rational::parse(re_text), Rational::parse(im_text)};
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace manin
