#pragma once

#include "qconf/lie_algebra.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qconf {

/// Sparse element of g (x) g. Slots are ordered; antisymmetry is a predicate.
class TwoTensor {
public:
  using Key = std::pair<std::size_t, std::size_t>;

  TwoTensor() = default;
  explicit TwoTensor(AlgebraPtr g) : g_(std::move(g)) {}

  const AlgebraPtr& algebra() const { return g_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  Scalar coeff(std::size_t a, std::size_t b) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_antisymmetric() const;
  void add(std::size_t a, std::size_t b, const Scalar& c);

  TwoTensor operator-() const;
  TwoTensor& operator+=(const TwoTensor& o);
  TwoTensor& operator-=(const TwoTensor& o);
  TwoTensor& operator*=(const Scalar& s);
  friend TwoTensor operator+(TwoTensor a, const TwoTensor& b) { return a += b; }
  friend TwoTensor operator-(TwoTensor a, const TwoTensor& b) { return a -= b; }
  friend TwoTensor operator*(const Scalar& s, TwoTensor a) { return a *= s; }
  friend bool operator==(const TwoTensor& a, const TwoTensor& b);

  /// Renders antisymmetric tensors as "c * A ^ B + ..." (one term per a<b
  /// pair); anything else as "c * A (x) B".
  std::string str() const;

private:
  void adopt(const TwoTensor& o);
  AlgebraPtr g_;
  std::map<Key, Scalar> terms_;
};

/// Sparse element of g (x) g (x) g.
class ThreeTensor {
public:
  using Key = std::array<std::size_t, 3>;

  ThreeTensor() = default;
  explicit ThreeTensor(AlgebraPtr g) : g_(std::move(g)) {}

  const AlgebraPtr& algebra() const { return g_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void add(const Key& k, const Scalar& c);

  ThreeTensor& operator+=(const ThreeTensor& o);
  ThreeTensor& operator-=(const ThreeTensor& o);
  ThreeTensor& operator*=(const Scalar& s);
  friend ThreeTensor operator+(ThreeTensor a, const ThreeTensor& b) { return a += b; }
  friend ThreeTensor operator-(ThreeTensor a, const ThreeTensor& b) { return a -= b; }
  friend bool operator==(const ThreeTensor& a, const ThreeTensor& b);

  /// First nonzero component as "c * A (x) B (x) C", or "0".
  std::string first_term() const;

private:
  AlgebraPtr g_;
  std::map<Key, Scalar> terms_;
};

/// "c * " with the sign folded into the separator; multi-component
/// coefficients are parenthesized so the text parses back.
std::string coefficient_text(const Scalar& c, bool first);

TwoTensor tensor(const Element& x, const Element& y);
/// x (x) y - y (x) x.
TwoTensor wedge(const Element& x, const Element& y);

/// [r12,r13] + [r12,r23] + [r13,r23]; zero iff r solves the classical
/// Yang-Baxter equation.
ThreeTensor cybe_residual(const TwoTensor& r);

/// [x(x)1(x)1 + 1(x)x(x)1 + 1(x)1(x)x, t].
ThreeTensor ad_action(const Element& x, const ThreeTensor& t);
/// [x(x)1 + 1(x)x, r].
TwoTensor ad_action(const Element& x, const TwoTensor& r);

struct AdInvarianceReport {
  std::vector<ThreeTensor> residuals;  ///< one per generator, same order
  bool invariant() const;
};

AdInvarianceReport ad_invariance_residual(const ThreeTensor& t, const std::vector<Element>& generators);

/// Coboundary cocommutator delta(x) = [x(x)1 + 1(x)x, r].
TwoTensor cocommutator(const Element& x, const TwoTensor& r);

/// Pushes a tensor through a linear map given on basis indices.
TwoTensor map_tensor(const TwoTensor& r, const std::vector<Element>& basis_images, AlgebraPtr target);

/// Quadratic dependence on two parameters: the points (1,0), (0,1), (1,1)
/// annihilate every monomial c1^2, c2^2, c1*c2.
inline const std::vector<std::pair<Scalar, Scalar>>& quadratic_schedule() {
  static const std::vector<std::pair<Scalar, Scalar>> pts{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)},
                                                          {Scalar(1), Scalar(1)}};
  return pts;
}

struct FamilyPoint {
  Scalar c1, c2;
  ThreeTensor residual;
};

/// CYBE residual of a two-parameter family at each schedule point.
std::vector<FamilyPoint> cybe_family(const std::function<TwoTensor(const Scalar&, const Scalar&)>& family,
                                     const std::vector<std::pair<Scalar, Scalar>>& points);

}  // namespace qconf
