#include "qconf/tensor.hpp"

#include <sstream>

namespace qconf {

namespace {

template <class Map, class Key>
void accumulate(Map& m, const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

void require_context(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a && b && a != b) throw ContextError("tensors over different algebras: " + a->name() + " vs " + b->name());
}

}  // namespace

std::string coefficient_text(const Scalar& c, bool first) {
  int nz = 0;
  bool neg = false;
  for (const auto& q : c.components())
    if (!q.is_zero()) {
      ++nz;
      neg = q.sign() < 0;
    }
  if (nz > 1) return std::string(first ? "" : " + ") + "(" + c.str() + ") * ";
  const Scalar mag = neg ? -c : c;
  return std::string(first ? (neg ? "-" : "") : (neg ? " - " : " + ")) + mag.str() + " * ";
}

Scalar TwoTensor::coeff(std::size_t a, std::size_t b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Scalar() : it->second;
}

bool TwoTensor::is_antisymmetric() const {
  for (const auto& [k, v] : terms_)
    if (!(coeff(k.second, k.first) == -v)) return false;
  return true;
}

void TwoTensor::add(std::size_t a, std::size_t b, const Scalar& c) { accumulate(terms_, Key{a, b}, c); }

void TwoTensor::adopt(const TwoTensor& o) {
  require_context(g_, o.g_);
  if (!g_) g_ = o.g_;
}

TwoTensor TwoTensor::operator-() const {
  TwoTensor out = *this;
  for (auto& [k, v] : out.terms_) v = -v;
  return out;
}

TwoTensor& TwoTensor::operator+=(const TwoTensor& o) {
  adopt(o);
  for (const auto& [k, v] : o.terms_) accumulate(terms_, k, v);
  return *this;
}

TwoTensor& TwoTensor::operator-=(const TwoTensor& o) {
  adopt(o);
  for (const auto& [k, v] : o.terms_) accumulate(terms_, k, -v);
  return *this;
}

TwoTensor& TwoTensor::operator*=(const Scalar& s) {
  if (s.is_zero()) terms_.clear();
  for (auto& [k, v] : terms_) v *= s;
  return *this;
}

bool operator==(const TwoTensor& a, const TwoTensor& b) {
  if (a.g_ && b.g_ && a.g_ != b.g_) return false;
  return a.terms_ == b.terms_;
}

std::string TwoTensor::str() const {
  if (terms_.empty()) return "0";
  auto label = [&](std::size_t k) { return g_ ? g_->label(k) : "#" + std::to_string(k); };
  std::ostringstream os;
  bool first = true;
  const bool anti = is_antisymmetric();
  for (const auto& [k, v] : terms_) {
    if (anti && k.first > k.second) continue;
    os << coefficient_text(v, first) << label(k.first) << (anti ? " ^ " : " (x) ") << label(k.second);
    first = false;
  }
  return os.str();
}

void ThreeTensor::add(const Key& k, const Scalar& c) { accumulate(terms_, k, c); }

ThreeTensor& ThreeTensor::operator+=(const ThreeTensor& o) {
  require_context(g_, o.g_);
  if (!g_) g_ = o.g_;
  for (const auto& [k, v] : o.terms_) accumulate(terms_, k, v);
  return *this;
}

ThreeTensor& ThreeTensor::operator-=(const ThreeTensor& o) {
  require_context(g_, o.g_);
  if (!g_) g_ = o.g_;
  for (const auto& [k, v] : o.terms_) accumulate(terms_, k, -v);
  return *this;
}

ThreeTensor& ThreeTensor::operator*=(const Scalar& s) {
  if (s.is_zero()) terms_.clear();
  for (auto& [k, v] : terms_) v *= s;
  return *this;
}

bool operator==(const ThreeTensor& a, const ThreeTensor& b) {
  if (a.g_ && b.g_ && a.g_ != b.g_) return false;
  return a.terms_ == b.terms_;
}

std::string ThreeTensor::first_term() const {
  if (terms_.empty()) return "0";
  const auto& [k, v] = *terms_.begin();
  auto label = [&](std::size_t i) { return g_ ? g_->label(i) : "#" + std::to_string(i); };
  return coefficient_text(v, true) + label(k[0]) + " (x) " + label(k[1]) + " (x) " + label(k[2]);
}

TwoTensor tensor(const Element& x, const Element& y) {
  require_context(x.algebra(), y.algebra());
  TwoTensor out(x.algebra() ? x.algebra() : y.algebra());
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out.add(a, b, ca * cb);
  return out;
}

TwoTensor wedge(const Element& x, const Element& y) { return tensor(x, y) - tensor(y, x); }

ThreeTensor cybe_residual(const TwoTensor& r) {
  ThreeTensor out(r.algebra());
  if (!r.algebra()) return out;
  const auto& g = *r.algebra();
  for (const auto& [ab, x] : r.terms())
    for (const auto& [cd, y] : r.terms()) {
      const auto [a, b] = ab;
      const auto [c, d] = cd;
      const Scalar xy = x * y;
      for (const auto& [e, f] : g.structure(a, c)) out.add({e, b, d}, xy * f);  // [r12, r13]
      for (const auto& [e, f] : g.structure(b, c)) out.add({a, e, d}, xy * f);  // [r12, r23]
      for (const auto& [e, f] : g.structure(b, d)) out.add({a, c, e}, xy * f);  // [r13, r23]
    }
  return out;
}

ThreeTensor ad_action(const Element& x, const ThreeTensor& t) {
  require_context(x.algebra(), t.algebra());
  ThreeTensor out(t.algebra());
  if (!t.algebra()) return out;
  const auto& g = *t.algebra();
  for (const auto& [k, v] : t.terms())
    for (const auto& [i, xi] : x.terms())
      for (int slot = 0; slot < 3; ++slot)
        for (const auto& [e, f] : g.structure(i, k[slot])) {
          ThreeTensor::Key key = k;
          key[slot] = e;
          out.add(key, v * xi * f);
        }
  return out;
}

TwoTensor ad_action(const Element& x, const TwoTensor& r) {
  require_context(x.algebra(), r.algebra());
  TwoTensor out(r.algebra());
  if (!r.algebra()) return out;
  const auto& g = *r.algebra();
  for (const auto& [k, v] : r.terms())
    for (const auto& [i, xi] : x.terms()) {
      for (const auto& [e, f] : g.structure(i, k.first)) out.add(e, k.second, v * xi * f);
      for (const auto& [e, f] : g.structure(i, k.second)) out.add(k.first, e, v * xi * f);
    }
  return out;
}

bool AdInvarianceReport::invariant() const {
  for (const auto& r : residuals)
    if (!r.is_zero()) return false;
  return true;
}

AdInvarianceReport ad_invariance_residual(const ThreeTensor& t, const std::vector<Element>& generators) {
  AdInvarianceReport rep;
  for (const auto& x : generators) rep.residuals.push_back(ad_action(x, t));
  return rep;
}

TwoTensor cocommutator(const Element& x, const TwoTensor& r) { return ad_action(x, r); }

TwoTensor map_tensor(const TwoTensor& r, const std::vector<Element>& basis_images, AlgebraPtr target) {
  TwoTensor out(target);
  for (const auto& [k, v] : r.terms()) {
    const Element& x = basis_images.at(k.first);
    const Element& y = basis_images.at(k.second);
    for (const auto& [a, ca] : x.terms())
      for (const auto& [b, cb] : y.terms()) out.add(a, b, v * ca * cb);
  }
  return out;
}

std::vector<FamilyPoint> cybe_family(const std::function<TwoTensor(const Scalar&, const Scalar&)>& family,
                                     const std::vector<std::pair<Scalar, Scalar>>& points) {
  std::vector<FamilyPoint> out;
  for (const auto& [c1, c2] : points) out.push_back({c1, c2, cybe_residual(family(c1, c2))});
  return out;
}

}  // namespace qconf
