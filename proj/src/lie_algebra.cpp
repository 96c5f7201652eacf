#include "qconf/lie_algebra.hpp"

#include <sstream>

namespace qconf {

void sparse_axpy(Sparse& acc, const Scalar& s, const Sparse& x) {
  if (s.is_zero()) return;
  for (const auto& [k, v] : x) {
    auto it = acc.find(k);
    if (it == acc.end()) {
      acc.emplace(k, s * v);
    } else {
      it->second += s * v;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

Element::Element(AlgebraPtr g, Sparse terms) : g_(std::move(g)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      if (g_ && it->first >= g_->dim()) throw ContextError("basis index outside algebra");
      ++it;
    }
  }
}

Scalar Element::coeff(std::size_t index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Scalar() : it->second;
}

Vec Element::dense() const {
  if (!g_) throw ContextError("element without algebra context");
  Vec v(g_->dim());
  for (const auto& [k, c] : terms_) v[k] = c;
  return v;
}

void Element::require_same(const Element& o) const {
  if (g_ && o.g_ && g_ != o.g_)
    throw ContextError("elements of different algebras: " + g_->name() + " vs " + o.g_->name());
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [k, v] : out.terms_) v = -v;
  return out;
}

Element& Element::operator+=(const Element& o) {
  require_same(o);
  if (!g_) g_ = o.g_;
  sparse_axpy(terms_, Scalar(1), o.terms_);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same(o);
  if (!g_) g_ = o.g_;
  sparse_axpy(terms_, Scalar(-1), o.terms_);
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= s;
  return *this;
}

bool operator==(const Element& a, const Element& b) {
  if (a.g_ && b.g_ && a.g_ != b.g_) return false;
  return a.terms_ == b.terms_;
}

Element Element::conj() const {
  Element out = *this;
  for (auto& [k, v] : out.terms_) v = v.conj();
  return out;
}

namespace {

std::string coeff_prefix(const Scalar& c, bool first) {
  // Returns "", "-", " + ", " - ", or with an explicit coefficient.
  const bool single = [&] {
    int nz = 0;
    for (const auto& q : c.components()) nz += q.is_zero() ? 0 : 1;
    return nz == 1;
  }();
  if (single) {
    Scalar mag = c;
    bool neg = false;
    for (const auto& q : c.components())
      if (!q.is_zero()) neg = q.sign() < 0;
    if (neg) mag = -c;
    std::string sign = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (mag == Scalar(1)) return sign;
    return sign + mag.str() + "*";
  }
  return std::string(first ? "" : " + ") + "(" + c.str() + ")*";
}

}  // namespace

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    os << coeff_prefix(c, first) << (g_ ? g_->label(k) : "#" + std::to_string(k));
    first = false;
  }
  return os.str();
}

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels, StructureTable table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], i).second)
      throw std::invalid_argument("duplicate basis label '" + labels_[i] + "'");
  }
  dense_.assign(n * n, Sparse{});
  for (auto it = table_.begin(); it != table_.end();) {
    auto [a, b] = it->first;
    if (a >= b || b >= n) throw std::invalid_argument("structure table keys must satisfy a < b < dim");
    Sparse clean;
    sparse_axpy(clean, Scalar(1), it->second);
    for (const auto& [k, v] : clean)
      if (k >= n) throw std::invalid_argument("structure constant target outside basis");
    if (clean.empty()) {
      it = table_.erase(it);
      continue;
    }
    it->second = clean;
    dense_[a * n + b] = clean;
    Sparse neg;
    sparse_axpy(neg, Scalar(-1), clean);
    dense_[b * n + a] = neg;
    ++it;
  }
}

AlgebraPtr LieAlgebra::create(std::string name, std::vector<std::string> labels, StructureTable table) {
  return AlgebraPtr(new LieAlgebra(std::move(name), std::move(labels), std::move(table)));
}

std::size_t LieAlgebra::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw UnknownLabel("unknown basis label '" + label + "' in " + name_);
  return it->second;
}

Element LieAlgebra::basis(std::size_t i) const {
  if (i >= dim()) throw ContextError("basis index outside algebra");
  return Element(shared_from_this(), Sparse{{i, Scalar(1)}});
}

Element LieAlgebra::combo(const std::vector<std::pair<std::string, Scalar>>& terms) const {
  Element out = zero();
  for (const auto& [label, c] : terms) out += c * basis(index(label));
  return out;
}

Element bracket(const Element& x, const Element& y) {
  if (!x.algebra() || !y.algebra()) {
    if (x.is_zero() || y.is_zero()) return Element(x.algebra() ? x.algebra() : y.algebra());
    throw ContextError("bracket of elements without algebra context");
  }
  if (x.algebra() != y.algebra())
    throw ContextError("bracket across algebras " + x.algebra()->name() + " and " + y.algebra()->name());
  const auto& g = *x.algebra();
  Sparse out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      if (a == b) continue;
      sparse_axpy(out, ca * cb, g.structure(a, b));
    }
  return Element(x.algebra(), std::move(out));
}

JacobiReport jacobi_residual(const AlgebraPtr& g) {
  JacobiReport rep;
  rep.residual = g->zero();
  const std::size_t n = g->dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        ++rep.triples_checked;
        Element A = g->basis(a), B = g->basis(b), C = g->basis(c);
        Element r = bracket(bracket(A, B), C) + bracket(bracket(B, C), A) + bracket(bracket(C, A), B);
        if (!r.is_zero() && rep.zero) {
          rep.zero = false;
          rep.triple = std::array<std::size_t, 3>{a, b, c};
          rep.residual = r;
        }
      }
  return rep;
}

Matrix RealizedAlgebra::image(const Element& x) const {
  if (x.algebra() && x.algebra() != algebra) throw ContextError("element of a different algebra");
  const std::size_t n = images.empty() ? 0 : images.front().rows();
  Matrix m(n, n);
  for (const auto& [k, c] : x.terms()) m += images[k] * c;
  return m;
}

std::optional<Element> RealizedAlgebra::expand(const Matrix& m) const {
  auto coords = expander->coordinates(m.flat());
  if (!coords) return std::nullopt;
  Sparse s;
  for (std::size_t k = 0; k < coords->size(); ++k)
    if (!(*coords)[k].is_zero()) s.emplace(k, (*coords)[k]);
  return Element(algebra, std::move(s));
}

RealizedAlgebra from_matrices(std::string name, const std::vector<std::string>& labels,
                              const std::vector<Matrix>& images) {
  if (labels.size() != images.size()) throw std::invalid_argument("labels and images differ in length");
  if (images.empty()) throw std::invalid_argument("empty realization");
  const std::size_t n = images.front().rows();
  for (const auto& m : images)
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("realization matrices must share a square size");
  std::vector<Vec> columns;
  for (const auto& m : images) columns.push_back(m.flat());
  auto expander = std::make_shared<const Expander>(columns);

  StructureTable table;
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = a + 1; b < images.size(); ++b) {
      Matrix c = commutator(images[a], images[b]);
      if (c.is_zero()) continue;
      auto coords = expander->coordinates(c.flat());
      if (!coords) throw ClosureError(labels[a], labels[b]);
      Sparse s;
      for (std::size_t k = 0; k < coords->size(); ++k)
        if (!(*coords)[k].is_zero()) s.emplace(k, (*coords)[k]);
      table.emplace(std::make_pair(a, b), std::move(s));
    }
  RealizedAlgebra out;
  out.algebra = LieAlgebra::create(std::move(name), labels, std::move(table));
  out.images = images;
  out.expander = std::move(expander);
  return out;
}

std::size_t element_rank(const std::vector<Element>& xs) {
  std::vector<Vec> vs;
  for (const auto& x : xs) vs.push_back(x.dense());
  return rank(std::move(vs));
}

ClosureResult subalgebra_closure(const std::vector<Element>& generators) {
  ClosureResult out;
  if (generators.empty()) {
    out.input_closed = true;
    return out;
  }
  const AlgebraPtr g = generators.front().algebra();
  for (const auto& x : generators)
    if (x.algebra() != g) throw ContextError("closure generators from different algebras");
  SpanBuilder span(g->dim());
  for (const auto& x : generators)
    if (span.add(x.dense())) out.span.push_back(x);
  const std::size_t input_dim = span.dim();

  // Each round brackets every pair of current spanning elements; the
  // dimension strictly grows until it stabilizes, so dim(g) rounds suffice.
  for (std::size_t round = 0; round < g->dim(); ++round) {
    bool grew = false;
    const std::size_t m = out.span.size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        Element z = bracket(out.span[i], out.span[j]);
        if (!z.is_zero() && span.add(z.dense())) {
          out.span.push_back(z);
          grew = true;
        }
      }
    if (!grew) break;
  }
  out.dimension = span.dim();
  out.input_closed = out.dimension == input_dim;
  return out;
}

}  // namespace qconf
