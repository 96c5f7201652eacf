#pragma once

#include "qconf/linalg.hpp"
#include "qconf/scalar.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qconf {

/// Sparse coefficient vector keyed by basis index; never stores zeros.
using Sparse = std::map<std::size_t, Scalar>;
/// Structure constants [X_a, X_b] for a < b.
using StructureTable = std::map<std::pair<std::size_t, std::size_t>, Sparse>;

class LieAlgebra;
using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

class ContextError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class UnknownLabel : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

class ClosureError : public std::runtime_error {
public:
  ClosureError(const std::string& a, const std::string& b)
      : std::runtime_error("commutator [" + a + "," + b + "] lies outside the span of the basis images"),
        first(a), second(b) {}
  std::string first, second;
};

void sparse_axpy(Sparse& acc, const Scalar& s, const Sparse& x);

/// Element of a specific algebra; value type.
class Element {
public:
  Element() = default;
  explicit Element(AlgebraPtr g) : g_(std::move(g)) {}
  Element(AlgebraPtr g, Sparse terms);

  const AlgebraPtr& algebra() const { return g_; }
  const Sparse& terms() const { return terms_; }
  Scalar coeff(std::size_t index) const;
  bool is_zero() const { return terms_.empty(); }
  Vec dense() const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend bool operator==(const Element& a, const Element& b);

  /// Apply conjugation to every coefficient (used by conjugate-linear maps).
  Element conj() const;
  std::string str() const;

private:
  void require_same(const Element& o) const;
  AlgebraPtr g_;
  Sparse terms_;
};

/// Finite-dimensional Lie algebra given by structure constants.
class LieAlgebra : public std::enable_shared_from_this<LieAlgebra> {
public:
  static AlgebraPtr create(std::string name, std::vector<std::string> labels, StructureTable table);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::size_t index(const std::string& label) const;
  bool has_label(const std::string& label) const { return index_.count(label) > 0; }
  const StructureTable& table() const { return table_; }

  /// Sparse expansion of [X_a, X_b] for any a, b.
  const Sparse& structure(std::size_t a, std::size_t b) const { return dense_[a * dim() + b]; }

  Element basis(std::size_t i) const;
  Element operator[](const std::string& label) const { return basis(index(label)); }
  Element zero() const { return Element(shared_from_this()); }
  /// Linear combination from (label, coefficient) pairs.
  Element combo(const std::vector<std::pair<std::string, Scalar>>& terms) const;

private:
  LieAlgebra(std::string name, std::vector<std::string> labels, StructureTable table);
  std::string name_;
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
  StructureTable table_;
  std::vector<Sparse> dense_;
};

Element bracket(const Element& x, const Element& y);

struct JacobiReport {
  bool zero = true;
  std::size_t triples_checked = 0;
  /// First offending triple and its residual, when nonzero.
  std::optional<std::array<std::size_t, 3>> triple;
  Element residual;
};

/// Checks [[A,B],C] + [[B,C],A] + [[C,A],B] = 0 over all basis triples.
JacobiReport jacobi_residual(const AlgebraPtr& g);

/// Algebra obtained from matrices: keeps the images so elements can be mapped
/// back to matrices and matrices expanded in the basis.
struct RealizedAlgebra {
  AlgebraPtr algebra;
  std::vector<Matrix> images;
  std::shared_ptr<const Expander> expander;

  Matrix image(const Element& x) const;
  /// Expansion of a matrix in the basis images, nullopt outside the span.
  std::optional<Element> expand(const Matrix& m) const;
};

/// Structure constants from pairwise matrix commutators.
/// Throws RankError for dependent images and ClosureError when a commutator
/// leaves the span.
RealizedAlgebra from_matrices(std::string name, const std::vector<std::string>& labels,
                              const std::vector<Matrix>& images);

struct ClosureResult {
  std::vector<Element> span;  ///< basis of the generated subalgebra
  std::size_t dimension = 0;
  bool input_closed = false;  ///< span of the input already closed under brackets
};

ClosureResult subalgebra_closure(const std::vector<Element>& generators);

/// Rank of the span of the given elements.
std::size_t element_rank(const std::vector<Element>& xs);

}  // namespace qconf
