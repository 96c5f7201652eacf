#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qconf {

class DivisionByZero : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
public:
  Rational() = default;
  Rational(long n) : v_(n) {}
  Rational(long n, long d);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p" or "p/q" with optional sign; non-reduced input is normalized.
  static Rational parse(const std::string& text);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational inverse() const;
  std::string str() const;

private:
  mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element of Q(i, sqrt2): re + im*i + rt*sqrt2 + imrt*i*sqrt2.
class Scalar {
public:
  Scalar() = default;
  Scalar(long n) : c_{Rational(n), {}, {}, {}} {}
  Scalar(Rational r) : c_{std::move(r), {}, {}, {}} {}
  Scalar(Rational re, Rational im, Rational rt, Rational imrt)
      : c_{std::move(re), std::move(im), std::move(rt), std::move(imrt)} {}

  static Scalar i() { return Scalar(0, 1, 0, 0); }
  static Scalar sqrt2() { return Scalar(0, 0, 1, 0); }
  static Scalar rational(long n, long d) { return Scalar(Rational(n, d)); }

  const Rational& re() const { return c_[0]; }
  const Rational& im() const { return c_[1]; }
  const Rational& rt() const { return c_[2]; }
  const Rational& imrt() const { return c_[3]; }
  const std::array<Rational, 4>& components() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
  /// Invariant under complex conjugation (lies in Q(sqrt2)).
  bool is_real() const { return c_[1].is_zero() && c_[3].is_zero(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }

  Scalar inverse() const;
  /// Complex conjugation: i -> -i, sqrt2 fixed.
  Scalar conj() const;
  /// Galois conjugation sqrt2 -> -sqrt2, i fixed.
  Scalar sqrt2_conj() const;

  /// Text form accepted back by parse_scalar, e.g. "3/4 - 1/2*i*sqrt2".
  std::string str() const;

private:
  std::array<Rational, 4> c_{};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace qconf
