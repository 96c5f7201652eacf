#include "qconf/physmaps.hpp"
#include "qconf/star.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace qconf;

TEST_SUITE("star") {

TEST_CASE("so5 involutions are anti-automorphisms for every sign choice") {
  for (int lambda : {1, -1})
    for (int eps : {1, -1}) {
      for (const auto& c : check_antiautomorphism(so5_star(lambda, eps), "so5.star"))
        CHECK_MESSAGE(c.status == Status::Pass, c.id << ": " << c.witness);
    }
}

TEST_CASE("sl4 involutions are anti-automorphisms") {
  for (int eta : {1, -1})
    for (int eps : {1, -1}) {
      for (const auto& c : check_antiautomorphism(sl4_star(eta, eps), "sl4.star"))
        CHECK_MESSAGE(c.status == Status::Pass, c.id << ": " << c.witness);
    }
}

TEST_CASE("so5.reality.sign") {
  // h -> -h, e1 -> lambda e1, e3 -> -lambda eps e3, e4 -> eps e4 sends both
  // h^e4 and e1^e3 to -eps times themselves.
  std::mt19937 rng(31);
  for (int k = 0; k < 5; ++k) {
    const Scalar c1 = testing::random_rational(rng), c2 = testing::random_rational(rng);
    const TwoTensor r = so5_rmatrix(c1, c2);
    for (int lambda : {1, -1})
      for (int eps : {1, -1}) {
        CHECK(so5_star(lambda, eps).apply(r) == Scalar(-eps) * r);
        CHECK(reality_residual(r, so5_star(lambda, eps)).is_zero() == (eps == -1));
      }
  }
}

TEST_CASE("so5.reality.complex_parameters") {
  const TwoTensor r = so5_rmatrix(Scalar::i(), Scalar(1));
  CHECK_FALSE(reality_residual(r, so5_star(1, -1)).is_zero());
}

TEST_CASE("sl4.reality.c2_equals_2c1") {
  std::mt19937 rng(37);
  for (int k = 0; k < 5; ++k) {
    const Scalar c = testing::random_rational(rng);
    if (c.is_zero()) continue;
    for (int eps : {1, -1}) {
      CHECK(reality_residual(sl4_rmatrix(c, Scalar(2) * c), sl4_star(-1, eps)).is_zero());
      CHECK_FALSE(reality_residual(sl4_rmatrix(c, c), sl4_star(-1, eps)).is_zero());
    }
  }
}

TEST_CASE("involution applied twice is the identity") {
  std::mt19937 rng(41);
  const Involution s = so5_star(-1, -1);
  for (int k = 0; k < 10; ++k) {
    const Element x = testing::random_element(s.algebra(), rng) + Scalar::i() * testing::random_element(s.algebra(), rng);
    CHECK(s.apply(s.apply(x)) == x);
  }
}

TEST_CASE("star specifications") {
  CHECK(star_by_spec("so32:lambda=1,eps=-1").apply(so5_rmatrix(1, 1)) == so5_star(1, -1).apply(so5_rmatrix(1, 1)));
  CHECK(star_by_spec("sp4:lambda=-1,eps=1").algebra() == so5_star(1, 1).algebra());
  CHECK_NOTHROW(star_by_spec("so42:eta=-1,eps=1"));
  CHECK_THROWS_AS(star_by_spec("so32:lambda=2,eps=1"), std::invalid_argument);
  CHECK_THROWS_AS(star_by_spec("so32:lambda"), std::invalid_argument);
  CHECK_THROWS_AS(star_by_spec("e8:lambda=1"), std::invalid_argument);
}

}
