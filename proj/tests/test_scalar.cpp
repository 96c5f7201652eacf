#include "qconf/parse.hpp"
#include "qconf/scalar.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace qconf;

namespace {

// Embedding of Q(i, sqrt2) into C, used only as an approximate oracle.
std::complex<double> embed(const Scalar& x) {
  const double r2 = std::sqrt(2.0);
  auto d = [](const Rational& q) { return q.value().get_d(); };
  return {d(x.re()) + r2 * d(x.rt()), d(x.im()) + r2 * d(x.imrt())};
}

}  // namespace

TEST_SUITE("scalar") {

TEST_CASE("rational literals are normalized") {
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7").is_integer());
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("generators of the field") {
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(Scalar::sqrt2() * Scalar::sqrt2() == Scalar(2));
  const Scalar is = Scalar::i() * Scalar::sqrt2();
  CHECK(is * is == Scalar(-2));
  CHECK(Scalar(0, 0, 0, 1) == is);
}

TEST_CASE("field axioms on seeded random elements") {
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    const Scalar a = testing::random_scalar(rng), b = testing::random_scalar(rng), c = testing::random_scalar(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar());
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
  }
}

TEST_CASE("multiplication agrees with the complex embedding") {
  std::mt19937 rng(11);
  for (int k = 0; k < 200; ++k) {
    const Scalar a = testing::random_scalar(rng), b = testing::random_scalar(rng);
    CHECK(std::abs(embed(a * b) - embed(a) * embed(b)) < 1e-9);
    if (!b.is_zero()) CHECK(std::abs(embed(a / b) - embed(a) / embed(b)) < 1e-9);
  }
}

TEST_CASE("conjugations are field automorphisms") {
  std::mt19937 rng(13);
  for (int k = 0; k < 100; ++k) {
    const Scalar a = testing::random_scalar(rng), b = testing::random_scalar(rng);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a * b).sqrt2_conj() == a.sqrt2_conj() * b.sqrt2_conj());
    CHECK(a.conj().conj() == a);
    CHECK((a * a.conj()).is_real());
  }
}

TEST_CASE("inverse of zero throws") {
  CHECK_THROWS_AS(Scalar().inverse(), DivisionByZero);
  CHECK_THROWS_AS(Scalar(1) / Scalar(), DivisionByZero);
}

TEST_CASE("text form round-trips through the parser") {
  std::mt19937 rng(17);
  for (int k = 0; k < 100; ++k) {
    const Scalar a = testing::random_scalar(rng);
    CHECK(parse_scalar(a.str()) == a);
  }
  CHECK(Scalar(Rational(3, 4), 0, 0, Rational(-1, 2)).str() == "3/4 - 1/2*i*sqrt2");
  CHECK(parse_scalar("-1/2*i*sqrt2 + 3/4") == parse_scalar(" 3/4-1/2 * i * sqrt2 "));
  CHECK(parse_scalar("2/4*sqrt2") == Scalar(0, 0, Rational(1, 2), 0));
  CHECK(Scalar().str() == "0");
}

}
