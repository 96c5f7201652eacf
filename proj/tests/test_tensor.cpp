#include "qconf/catalog.hpp"
#include "qconf/parse.hpp"
#include "qconf/physmaps.hpp"
#include "qconf/tensor.hpp"
#include "support.hpp"

#include <doctest.h>

#include <vector>

using namespace qconf;

namespace {

// Dense CYBE residual computed from basis brackets, independent of cybe_residual.
std::vector<Scalar> dense_cybe(const TwoTensor& r) {
  const auto& g = *r.algebra();
  const std::size_t n = g.dim();
  std::vector<Scalar> out(n * n * n);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& { return out[(i * n + j) * n + k]; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Scalar rab = r.coeff(a, b);
      if (rab.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const Scalar rcd = r.coeff(c, d);
          if (rcd.is_zero()) continue;
          const Scalar w = rab * rcd;
          const Element ac = bracket(g.basis(a), g.basis(c)), bc = bracket(g.basis(b), g.basis(c)),
                        bd = bracket(g.basis(b), g.basis(d));
          for (const auto& [e, f] : ac.terms()) at(e, b, d) += w * f;
          for (const auto& [e, f] : bc.terms()) at(a, e, d) += w * f;
          for (const auto& [e, f] : bd.terms()) at(a, c, e) += w * f;
        }
    }
  return out;
}

std::vector<Scalar> densify(const ThreeTensor& t) {
  const std::size_t n = t.algebra()->dim();
  std::vector<Scalar> out(n * n * n);
  for (const auto& [k, v] : t.terms()) out[(k[0] * n + k[1]) * n + k[2]] = v;
  return out;
}

ThreeTensor scaled(ThreeTensor t, const Scalar& s) { return t *= s; }

}  // namespace

TEST_SUITE("tensoralg") {

TEST_CASE("sl2.jordanian.cybe") {
  const auto g = sl2().chevalley.algebra;
  CHECK(cybe_residual(wedge((*g)["h"], (*g)["e_plus"])).is_zero());
  CHECK_FALSE(cybe_residual(wedge((*g)["e_plus"], (*g)["e_minus"])).is_zero());
}

TEST_CASE("cybe residual matches the dense oracle") {
  std::mt19937 rng(5);
  for (const auto& name : {"sl2", "so32", "so5"}) {
    const auto g = algebra_by_name(name);
    for (int k = 0; k < 5; ++k) {
      const TwoTensor r = testing::random_antisymmetric(g, rng);
      CHECK(densify(cybe_residual(r)) == dense_cybe(r));
    }
  }
  CHECK(densify(cybe_residual(so5_rmatrix(1, 1))) == dense_cybe(so5_rmatrix(1, 1)));
  CHECK(densify(cybe_residual(sl4_rmatrix(1, 2))) == dense_cybe(sl4_rmatrix(1, 2)));
}

TEST_CASE("cybe residual is quadratic in the family parameters") {
  std::mt19937 rng(19);
  for (int k = 0; k < 3; ++k) {
    const Scalar a = testing::random_rational(rng), b = testing::random_rational(rng);
    for (auto family : {&so5_rmatrix, &sl4_rmatrix}) {
      const ThreeTensor r10 = cybe_residual(family(1, 0)), r01 = cybe_residual(family(0, 1)),
                        r11 = cybe_residual(family(1, 1));
      const ThreeTensor mixed = r11 - r10 - r01;
      CHECK(cybe_residual(family(a, b)) == scaled(r10, a * a) + scaled(r01, b * b) + scaled(mixed, a * b));
    }
  }
}

TEST_CASE("sl4.rmatrix.cybe") {
  for (const auto& [c1, c2] : std::vector<std::pair<int, int>>{{1, 2}, {1, 0}, {0, 1}, {3, -7}})
    CHECK(cybe_residual(sl4_rmatrix(c1, c2)).is_zero());
}

TEST_CASE("coboundary cocycle identity on random data") {
  std::mt19937 rng(23);
  for (const auto& name : {"sl2", "so32", "so42"}) {
    const auto g = algebra_by_name(name);
    for (int k = 0; k < 10; ++k) {
      const Element x = testing::random_element(g, rng), y = testing::random_element(g, rng);
      const TwoTensor r = testing::random_antisymmetric(g, rng);
      CHECK(cocommutator(bracket(x, y), r) == ad_action(x, cocommutator(y, r)) - ad_action(y, cocommutator(x, r)));
    }
  }
}

TEST_CASE("ad-invariance of the residual of an invariant tensor") {
  // The standard sl2 r-matrix solves the modified CYBE.
  const auto g = algebra_by_name("sl2");
  const auto rep = ad_invariance_residual(ThreeTensor(g), {g->basis(0), g->basis(1), g->basis(2)});
  CHECK(rep.invariant());
  const ThreeTensor res = cybe_residual(wedge((*g)["e_plus"], (*g)["e_minus"]));
  CHECK(ad_invariance_residual(res, {g->basis(0), g->basis(1), g->basis(2)}).invariant());
}

TEST_CASE("wedge is antisymmetric and text round-trips") {
  std::mt19937 rng(29);
  const auto g = algebra_by_name("so42");
  const Element x = testing::random_element(g, rng), y = testing::random_element(g, rng);
  CHECK(wedge(x, y) == -wedge(y, x));
  CHECK(wedge(x, y).is_antisymmetric());
  CHECK(wedge(x, x).is_zero());
  const TwoTensor r = testing::random_antisymmetric(g, rng);
  CHECK(parse_wedge_sum(r.str(), g) == r);
  const TwoTensor c = Scalar(1, 1, 0, 0) * wedge((*g)["P0"], (*g)["D"]);
  CHECK(parse_wedge_sum(c.str(), g) == c);
}

TEST_CASE("tensors of different algebras do not mix") {
  const auto a = algebra_by_name("sl2"), b = algebra_by_name("so32");
  TwoTensor r = wedge(a->basis(0), a->basis(1));
  CHECK_THROWS_AS(r += wedge(b->basis(0), b->basis(1)), ContextError);
}

}
