#pragma once

#include "qconf/lie_algebra.hpp"
#include "qconf/scalar.hpp"
#include "qconf/tensor.hpp"

#include <random>

namespace qconf::testing {

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  return Rational(num(rng), den(rng));
}

inline Scalar random_scalar(std::mt19937& rng) {
  return Scalar(random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng));
}

inline Element random_element(const AlgebraPtr& g, std::mt19937& rng) {
  Element x = g->zero();
  for (std::size_t i = 0; i < g->dim(); ++i) x += Scalar(random_rational(rng)) * g->basis(i);
  return x;
}

inline TwoTensor random_antisymmetric(const AlgebraPtr& g, std::mt19937& rng, int terms = 5) {
  std::uniform_int_distribution<std::size_t> pick(0, g->dim() - 1);
  TwoTensor r(g);
  for (int k = 0; k < terms; ++k) r += Scalar(random_rational(rng)) * wedge(g->basis(pick(rng)), g->basis(pick(rng)));
  return r;
}

}  // namespace qconf::testing
