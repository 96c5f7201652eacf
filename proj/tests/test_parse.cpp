#include "qconf/catalog.hpp"
#include "qconf/parse.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace qconf;

namespace {

void check_error(const std::string& text, std::size_t line, std::size_t column, const AlgebraPtr& fallback = nullptr) {
  INFO(text);
  try {
    parse_definitions(text, fallback);
    FAIL("no error raised");
  } catch (const ParseError& e) {
    CHECK(e.line == line);
    CHECK(e.column == column);
  }
}

bool same_brackets(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->labels() != b->labels()) return false;
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < a->dim(); ++j)
      if (a->structure(i, j) != b->structure(i, j)) return false;
  return true;
}

}  // namespace

TEST_SUITE("parse") {

TEST_CASE("r-matrix statement over a catalog algebra") {
  const auto d = parse_definitions("algebra sl2\nr = 1 * h ^ e_plus\n");
  const auto g = sl2().chevalley.algebra;
  CHECK(d.algebra == g);
  REQUIRE(d.r.has_value());
  CHECK(*d.r == wedge((*g)["h"], (*g)["e_plus"]));
}

TEST_CASE("fallback algebra when there is no header") {
  const auto g = sl2().chevalley.algebra;
  const auto d = parse_definitions("r = h^e_plus - 1/2*e_plus^e_minus", g);
  REQUIRE(d.r.has_value());
  CHECK(*d.r == wedge((*g)["h"], (*g)["e_plus"]) - Scalar::rational(1, 2) * wedge((*g)["e_plus"], (*g)["e_minus"]));
}

TEST_CASE("bracket table reproduces catalog sl2") {
  const auto d = parse_definitions(
      "algebra my_sl2\n"
      "basis: h, e_plus, e_minus\n"
      "# Chevalley relations\n"
      "[h,e_plus] = 2*e_plus\n"
      "[h,e_minus] = -2*e_minus\n"
      "[e_plus,e_minus] = h\n");
  CHECK(same_brackets(d.algebra, sl2().chevalley.algebra));
  CHECK_FALSE(d.r.has_value());
}

TEST_CASE("reversed and consistent duplicate brackets are accepted") {
  const auto d = parse_definitions("basis: a, b\n[b,a] = -a\n[a,b] = a\n[a,a] = 0\n");
  CHECK(bracket((*d.algebra)["a"], (*d.algebra)["b"]) == (*d.algebra)["a"]);
}

TEST_CASE("continuation lines") {
  const auto g = so42().physical.algebra;
  const auto d = parse_definitions("algebra so42\nr = L3 ^ P0\n  + L3 ^ P3\n  - M1 ^ P2\n");
  REQUIRE(d.r.has_value());
  CHECK(*d.r == wedge((*g)["L3"], (*g)["P0"]) + wedge((*g)["L3"], (*g)["P3"]) - wedge((*g)["M1"], (*g)["P2"]));
}

TEST_CASE("non-reduced literals are normalized") {
  const auto g = sl2().chevalley.algebra;
  CHECK(parse_wedge_sum("2/4 * h ^ e_plus", g) == Scalar::rational(1, 2) * wedge((*g)["h"], (*g)["e_plus"]));
  CHECK(parse_element("(1 + i)*h - 6/3*e_minus", g) ==
        Scalar(1, 1, 0, 0) * (*g)["h"] - Scalar(2) * (*g)["e_minus"]);
}

TEST_CASE("errors carry line and column") {
  check_error("algebra sl2\nr = h ^\n", 2, 7);
  check_error("algebra sl2\nr = h ^ e_plus +\n", 2, 16);
  check_error("algebra sl2\nr = h ^ e_pls\n", 2, 9);
  check_error("algebra sl2\nr = h $ e_plus\n", 2, 7);
  check_error("basis: a, b\n[a,b] = a\n[a,b] = b\n", 3, 2);
  check_error("basis: a, b\n[a,c] = a\n", 2, 4);
  check_error("basis: a, b\n[a,a] = b\n", 2, 2);
  check_error("algebra nosuch\n", 1, 9);
  check_error("\n\nr = h ^ e_plus\n", 3, 1);
  check_error("algebra sl2\nr = h ^ e_plus\n  + e_plus ^\n", 3, 12);
}

TEST_CASE("serialize then parse reproduces catalog algebras") {
  for (const auto& name : algebra_names()) {
    const auto g = algebra_by_name(name);
    const std::string text = serialize(g);
    const auto back = parse_definitions(text).algebra;
    CHECK_MESSAGE(same_brackets(g, back), name);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("serialize then parse reproduces random r-matrices") {
  std::mt19937 rng(53);
  for (const auto& name : {"sl2", "so32", "so42"}) {
    const auto g = algebra_by_name(name);
    for (int k = 0; k < 10; ++k) {
      TwoTensor r = testing::random_antisymmetric(g, rng);
      r *= testing::random_scalar(rng);
      const auto d = parse_definitions(serialize(r), g);
      REQUIRE(d.r.has_value());
      CHECK(*d.r == r);
      CHECK(serialize(*d.r) == serialize(r));
    }
  }
}

}
