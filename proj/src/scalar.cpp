#include "qconf/scalar.hpp"

#include <cctype>
#include <sstream>

namespace qconf {

Rational::Rational(long n, long d) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  auto valid_int = [](const std::string& s) {
    std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
  };
  auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  mpz_class n(strip_plus(num)), d(den);
  if (d == 0) throw DivisionByZero("rational literal with zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational");
  return Rational(mpq_class(1 / v_));
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool Scalar::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

Scalar Scalar::operator-() const { return Scalar(-c_[0], -c_[1], -c_[2], -c_[3]); }

Scalar& Scalar::operator+=(const Scalar& o) {
  for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

// Basis {1, i, s, is} with i^2 = -1, s^2 = 2, (is)^2 = -2.
Scalar& Scalar::operator*=(const Scalar& o) {
  // Most coefficients are plain rationals; skip the full product for those.
  if (o.c_[1].is_zero() && o.c_[2].is_zero() && o.c_[3].is_zero()) {
    for (auto& comp : c_) if (!comp.is_zero()) comp *= o.c_[0];
    return *this;
  }
  if (c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero()) {
    const Rational a = c_[0];
    for (int k = 0; k < 4; ++k) c_[k] = o.c_[k].is_zero() ? Rational() : a * o.c_[k];
    return *this;
  }
  const auto& [a, b, c, d] = c_;
  const auto& [e, f, g, h] = o.c_;
  Rational re = a * e - b * f + Rational(2) * (c * g) - Rational(2) * (d * h);
  Rational im = a * f + b * e + Rational(2) * (c * h) + Rational(2) * (d * g);
  Rational rt = a * g + c * e - b * h - d * f;
  Rational imrt = a * h + d * e + b * g + c * f;
  c_ = {std::move(re), std::move(im), std::move(rt), std::move(imrt)};
  return *this;
}

Scalar Scalar::conj() const { return Scalar(c_[0], -c_[1], c_[2], -c_[3]); }

Scalar Scalar::sqrt2_conj() const { return Scalar(c_[0], c_[1], -c_[2], -c_[3]); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  // x * conj(x) lies in Q(sqrt2); multiplying by its Galois conjugate gives a rational norm.
  Scalar xc = conj();
  Scalar y = *this * xc;
  Scalar z = y.sqrt2_conj();
  Rational norm = (y * z).re();
  Scalar out = xc * z;
  Rational inv = norm.inverse();
  for (auto& comp : out.c_) comp *= inv;
  return out;
}

std::string Scalar::str() const {
  static const char* units[4] = {"", "i", "sqrt2", "i*sqrt2"};
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    const Rational& q = c_[k];
    if (q.is_zero()) continue;
    Rational mag = q.sign() < 0 ? -q : q;
    if (first) {
      if (q.sign() < 0) os << "-";
    } else {
      os << (q.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.str();
    } else if (mag == Rational(1)) {
      os << units[k];
    } else {
      os << mag.str() << "*" << units[k];
    }
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace qconf
