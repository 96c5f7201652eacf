#include "qconf/catalog.hpp"
#include "qconf/lie_algebra.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace qconf;

namespace {

// Plain triple-loop matrix product; deliberately independent of Matrix::operator*.
Matrix naive_product(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar s;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

Matrix naive_commutator(const Matrix& a, const Matrix& b) { return naive_product(a, b) - naive_product(b, a); }

void check_against_matrices(const RealizedAlgebra& ra) {
  const auto& g = *ra.algebra;
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = 0; b < g.dim(); ++b) {
      INFO(g.name() << ": [" << g.label(a) << "," << g.label(b) << "]");
      CHECK(ra.image(bracket(g.basis(a), g.basis(b))) == naive_commutator(ra.images[a], ra.images[b]));
    }
}

}  // namespace

TEST_SUITE("liealg") {

TEST_CASE("sl2.chevalley.brackets") {
  const auto g = sl2().chevalley.algebra;
  CHECK(bracket((*g)["h"], (*g)["e_plus"]) == Scalar(2) * (*g)["e_plus"]);
  CHECK(bracket((*g)["h"], (*g)["e_minus"]) == Scalar(-2) * (*g)["e_minus"]);
  CHECK(bracket((*g)["e_plus"], (*g)["e_minus"]) == (*g)["h"]);
}

TEST_CASE("sl2.physical.brackets") {
  const auto g = sl2().physical.algebra;
  CHECK(bracket((*g)["D"], (*g)["P"]) == (*g)["P"]);
  CHECK(bracket((*g)["D"], (*g)["K"]) == -(*g)["K"]);
  CHECK(bracket((*g)["P"], (*g)["K"]) == Scalar(2) * (*g)["D"]);
}

TEST_CASE("structure constants reproduce matrix commutators") {
  check_against_matrices(sl2().chevalley);
  check_against_matrices(sl2().physical);
  check_against_matrices(so32().m_basis);
  check_against_matrices(so32().cw);
  check_against_matrices(so32().physical);
  check_against_matrices(sl4().elementary);
  check_against_matrices(so42().m_basis);
  check_against_matrices(so42().physical);
}

TEST_CASE("bracket is antisymmetric, bilinear and satisfies Jacobi on random elements") {
  std::mt19937 rng(3);
  for (const auto& name : {"sl2", "so32", "so5", "so42", "sl4"}) {
    const auto g = algebra_by_name(name);
    for (int k = 0; k < 20; ++k) {
      const Element x = testing::random_element(g, rng), y = testing::random_element(g, rng),
                    z = testing::random_element(g, rng);
      const Scalar c = testing::random_scalar(rng);
      CHECK(bracket(x, y) == -bracket(y, x));
      CHECK(bracket(c * x + y, z) == c * bracket(x, z) + bracket(y, z));
      CHECK((bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y)).is_zero());
    }
  }
}

TEST_CASE("jacobi residual over all basis triples") {
  for (const auto& name : algebra_names()) {
    const auto rep = jacobi_residual(algebra_by_name(name));
    CHECK_MESSAGE(rep.zero, name);
  }
}

TEST_CASE("jacobi residual detects a corrupted table") {
  // [a,b] = c, [b,c] = a, [c,a] = c is not a Lie algebra.
  StructureTable t;
  t[{0, 1}] = {{2, Scalar(1)}};
  t[{1, 2}] = {{0, Scalar(1)}};
  t[{0, 2}] = {{2, Scalar(-1)}};
  const auto g = LieAlgebra::create("broken", {"a", "b", "c"}, t);
  const auto rep = jacobi_residual(g);
  CHECK_FALSE(rep.zero);
  REQUIRE(rep.triple.has_value());
  CHECK_FALSE(rep.residual.is_zero());
}

TEST_CASE("from_matrices rejects dependent or non-closed sets") {
  const Matrix e12 = Matrix::unit(2, 0, 1), e21 = Matrix::unit(2, 1, 0);
  CHECK_THROWS_AS(from_matrices("dep", {"a", "b"}, {e12, e12 * Scalar(2)}), RankError);
  CHECK_THROWS_AS(from_matrices("open", {"a", "b"}, {e12, e21}), ClosureError);
}

TEST_CASE("elements of different algebras do not mix") {
  const auto a = sl2().chevalley.algebra, b = sl2().physical.algebra;
  CHECK_THROWS_AS(bracket(a->basis(0), b->basis(0)), ContextError);
  CHECK_THROWS_AS((*a)["nope"], UnknownLabel);
}

TEST_CASE("sl4.serre.e3_e4") {
  // e6 = [e1,[e2,e3]] = [[e1,e2],e3] = [e4,e3], so [e3,e4] = -e6 whatever the table says.
  const auto g = sl4().elementary.algebra;
  CHECK(bracket((*g)["e1"], bracket((*g)["e2"], (*g)["e3"])) == (*g)["e6"]);
  CHECK(bracket((*g)["e3"], (*g)["e4"]) == -(*g)["e6"]);
}

TEST_CASE("sl4.extended_cartan") {
  const int alpha[6][6] = {{2, -1, 0, 1, -1, 1}, {-1, 2, -1, 1, 1, 0}, {0, -1, 2, -1, 1, 1},
                           {1, 1, -1, 2, 0, 1},  {-1, 1, 1, 0, 2, 1},  {1, 0, 1, 1, 1, 2}};
  const auto& cw = sl4().cw;
  for (std::size_t a = 1; a <= 6; ++a)
    for (std::size_t b = 1; b <= 6; ++b) {
      INFO("h" << a << ", e" << b);
      CHECK(bracket(cw.h(a), cw.e(b)) == Scalar(alpha[a - 1][b - 1]) * cw.e(b));
    }
}

TEST_CASE("sl4.cw.diagonal") {
  const auto& cw = sl4().cw;
  for (std::size_t a = 1; a <= 6; ++a) CHECK(bracket(cw.e(a), cw.f(a)) == cw.h(a));
}

TEST_CASE("subalgebra closure and rank") {
  const auto g = sl2().chevalley.algebra;
  const auto borel = subalgebra_closure({(*g)["h"], (*g)["e_plus"]});
  CHECK(borel.input_closed);
  CHECK(borel.dimension == 2);
  const auto full = subalgebra_closure({(*g)["e_plus"], (*g)["e_minus"]});
  CHECK_FALSE(full.input_closed);
  CHECK(full.dimension == 3);
  CHECK(element_rank({(*g)["h"], Scalar(2) * (*g)["h"]}) == 1);
}

}
