#include "qconf/star.hpp"

#include "qconf/catalog.hpp"

#include <map>

namespace qconf {

Involution::Involution(std::string name, AlgebraPtr g, std::vector<std::optional<Element>> images,
                       std::vector<std::string> borel, std::vector<std::string> notes)
    : name_(std::move(name)), g_(std::move(g)), images_(std::move(images)), borel_(std::move(borel)),
      notes_(std::move(notes)) {
  if (images_.size() != g_->dim()) throw std::invalid_argument("involution needs one slot per basis element");
}

Element Involution::apply(const Element& x) const {
  if (x.algebra() && x.algebra() != g_) throw ContextError("element outside the involution's algebra");
  Element out(g_);
  for (const auto& [k, c] : x.terms()) {
    if (!images_[k]) throw DomainError("involution " + name_ + " is not defined on " + g_->label(k));
    out += c.conj() * *images_[k];
  }
  return out;
}

TwoTensor Involution::apply(const TwoTensor& r) const {
  TwoTensor out(g_);
  for (const auto& [k, c] : r.terms()) out += c.conj() * tensor(apply(g_->basis(k.first)), apply(g_->basis(k.second)));
  return out;
}

Involution Involution::with_image(const std::string& label, const Element& image) const {
  Involution copy = *this;
  copy.images_[g_->index(label)] = image;
  copy.name_ += " [" + label + " -> " + image.str() + "]";
  return copy;
}

std::vector<Check> check_antiautomorphism(const Involution& star, const std::string& id_prefix) {
  const auto& g = star.algebra();
  const std::size_t n = g->dim();
  std::vector<Check> out;
  std::string w;
  for (std::size_t a = 0; a < n && w.empty(); ++a)
    for (std::size_t b = a + 1; b < n && w.empty(); ++b) {
      const Element x = g->basis(a), y = g->basis(b);
      const Element lhs = star.apply(bracket(x, y));
      const Element rhs = bracket(star.apply(y), star.apply(x));
      if (!(lhs == rhs))
        w = "([" + g->label(a) + "," + g->label(b) + "])^+ = " + lhs.str() + " but [" + g->label(b) + "^+," +
            g->label(a) + "^+] = " + rhs.str();
    }
  out.push_back(make_check(id_prefix + ".anti", star.name() + ": ([x,y])^+ = [y^+,x^+] on all basis pairs", w.empty(), w));

  w.clear();
  for (std::size_t a = 0; a < n && w.empty(); ++a) {
    const Element twice = star.apply(star.apply(g->basis(a)));
    if (!(twice == g->basis(a))) w = "(" + g->label(a) + "^+)^+ = " + twice.str();
  }
  out.push_back(make_check(id_prefix + ".involutive", star.name() + ": applying twice is the identity", w.empty(), w));

  if (!star.borel().empty()) {
    std::vector<bool> inside(n, false);
    for (const auto& l : star.borel()) inside[g->index(l)] = true;
    w.clear();
    for (const auto& l : star.borel()) {
      const Element img = star.apply((*g)[l]);
      for (const auto& [k, c] : img.terms())
        if (!inside[k] && w.empty()) w = l + "^+ = " + img.str();
    }
    out.push_back(make_check(id_prefix + ".borel", star.name() + ": maps the Borel subalgebra into itself", w.empty(), w));
  }
  return out;
}

TwoTensor reality_residual(const TwoTensor& r, const Involution& star) { return star.apply(r) - r; }

namespace {

using SignTable = std::vector<std::pair<std::string, std::pair<std::string, int>>>;

Involution from_table(std::string name, const AlgebraPtr& g, const SignTable& table, std::vector<std::string> borel,
                      std::vector<std::string> notes) {
  std::vector<std::optional<Element>> images(g->dim());
  for (const auto& [src, img] : table) images[g->index(src)] = Scalar(img.second) * (*g)[img.first];
  return Involution(std::move(name), g, std::move(images), std::move(borel), std::move(notes));
}

}  // namespace

Involution so5_star(int lambda, int eps) {
  const auto& g = so32().cw.algebra;
  const int le = -lambda * eps;
  const SignTable t{{"h1", {"h1", -1}},   {"h2", {"h2", -1}},     {"e1", {"e1", lambda}}, {"e2", {"e2", eps}},
                    {"e3", {"e3", le}},   {"e4", {"e4", eps}},    {"f1", {"f1", lambda}}, {"f2", {"f2", eps}},
                    {"f3", {"f3", le}},   {"f4", {"f4", eps}}};
  return from_table("so5 star (lambda=" + std::to_string(lambda) + ", eps=" + std::to_string(eps) + ")", g, t,
                    {"h1", "h2", "e1", "e2", "e3", "e4"},
                    {"negative roots carry the sign of their positive partner, forced by [e_a,e_-a] in the Cartan "
                     "subalgebra and h^+ = -h"});
}

Involution sl4_star(int eta, int eps) {
  const auto& g = sl4().elementary.algebra;
  const int ee = eta * eps;
  const SignTable t{{"h1", {"h3", -1}}, {"h2", {"h2", -1}}, {"h3", {"h1", -1}}, {"e1", {"e3", eps}},
                    {"e2", {"e2", eta}}, {"e3", {"e1", eps}}, {"e4", {"e5", ee}},  {"e5", {"e4", ee}},
                    {"e6", {"e6", eta}}, {"f1", {"f3", eps}}, {"f2", {"f2", eta}}, {"f3", {"f1", eps}},
                    {"f4", {"f5", ee}},  {"f5", {"f4", ee}},  {"f6", {"f6", eta}}};
  return from_table("sl4 star (eta=" + std::to_string(eta) + ", eps=" + std::to_string(eps) + ")", g, t,
                    {"h1", "h2", "h3", "e1", "e2", "e3", "e4", "e5", "e6"},
                    {"h3^+ = -h1, e3^+ = eps e1 and e5^+ = eta eps e4 fixed by involutivity",
                     "negative roots mirror their positive partners"});
}

Involution star_by_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::map<std::string, int> params;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = rest.find(',', pos);
      const std::string kv = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("star parameter '" + kv + "' is not key=value");
      const int v = std::stoi(kv.substr(eq + 1));
      if (v != 1 && v != -1) throw std::invalid_argument("star sign parameters must be +1 or -1");
      params[kv.substr(0, eq)] = v;
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  auto get = [&](const char* key, int dflt) {
    auto it = params.find(key);
    return it == params.end() ? dflt : it->second;
  };
  if (name == "so32" || name == "sp4" || name == "so5") return so5_star(get("lambda", 1), get("eps", -1));
  if (name == "so42" || name == "sl4") return sl4_star(get("eta", -1), get("eps", 1));
  throw std::invalid_argument("unknown involution '" + name + "'");
}

}  // namespace qconf
