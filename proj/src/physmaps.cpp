#include "qconf/physmaps.hpp"

#include "qconf/star.hpp"

#include <set>

namespace qconf {

namespace {

std::string rstr(const Rational& r) { return r.str(); }

/// Bracket-free algebra carrying only the D=3 physical labels.
const AlgebraPtr& d3_label_space() {
  static const AlgebraPtr g =
      LieAlgebra::create("so32-labels", {"P0", "P1", "P2", "K0", "K1", "K2", "D", "J", "L1", "L2"}, {});
  return g;
}

std::string point_id(const Scalar& c1, const Scalar& c2) { return "c1_" + c1.str() + "_c2_" + c2.str(); }

std::string residual_witness(const ThreeTensor& t) {
  if (t.is_zero()) return "residual zero";
  return std::to_string(t.size()) + " nonzero components, e.g. " + t.first_term();
}

std::string first_nonzero(const AdInvarianceReport& rep, const std::vector<std::string>& names) {
  for (std::size_t k = 0; k < rep.residuals.size(); ++k)
    if (!rep.residuals[k].is_zero()) return names[k] + ": " + residual_witness(rep.residuals[k]);
  return {};
}

std::vector<Element> generators(const AlgebraPtr& g, const std::vector<std::string>& names) {
  std::vector<Element> out;
  for (const auto& n : names) out.push_back((*g)[n]);
  return out;
}

}  // namespace

// ---- grading --------------------------------------------------------------

int DimensionGrading::of(std::size_t index) const {
  auto it = dims.find(algebra->label(index));
  return it == dims.end() ? 0 : it->second;
}

std::optional<int> DimensionGrading::of(const Element& x) const {
  std::optional<int> d;
  for (const auto& [i, c] : x.terms()) {
    const int di = of(i);
    if (d && *d != di) return std::nullopt;
    d = di;
  }
  return d;
}

std::optional<int> DimensionGrading::of(const TwoTensor& r) const {
  std::optional<int> d;
  for (const auto& [k, c] : r.terms()) {
    const int dk = of(k.first) + of(k.second);
    if (d && *d != dk) return std::nullopt;
    d = dk;
  }
  return d;
}

DimensionGrading DimensionGrading::by_prefix(const AlgebraPtr& g) {
  DimensionGrading out{g, {}};
  for (const auto& l : g->labels()) out.dims[l] = l[0] == 'P' ? 1 : l[0] == 'K' ? -1 : 0;
  return out;
}

// ---- r-matrices -----------------------------------------------------------

TwoTensor so5_rmatrix(const Scalar& c1, const Scalar& c2) {
  const auto& g = so32().cw.algebra;
  const auto X = [&](const char* l) { return (*g)[l]; };
  return c1 * (wedge(X("h1"), X("e4")) - wedge(X("e1"), X("e3"))) + c2 * wedge(X("h2"), X("e4"));
}

TwoTensor sl4_rmatrix(const Scalar& c1, const Scalar& c2) {
  const auto& g = sl4().elementary.algebra;
  const auto X = [&](const char* l) { return (*g)[l]; };
  return c1 * wedge(X("h1") - X("h3"), X("e6")) +
         c2 * (wedge(X("h3"), X("e6")) + wedge(X("e1"), X("e5")) - wedge(X("e3"), X("e4")));
}

TwoTensor d3_tabulated(const AlgebraPtr& g, const Rational& inv_m1, const Rational& inv_m2) {
  const auto X = [&](const char* l) { return (*g)[l]; };
  const Element Pm = X("P0") - X("P1");
  return Scalar(inv_m1) * (wedge(X("L1"), X("P1")) - wedge(X("L2") + X("J"), X("P2"))) +
         Scalar(inv_m2) * wedge(X("D") - X("L1"), Pm);
}

TwoTensor d4_tabulated(const Rational& inv_m) {
  const auto& g = so42().physical.algebra;
  const auto X = [&](const char* l) { return (*g)[l]; };
  return Scalar(inv_m) * (wedge(X("L3"), X("P0") + X("P3")) + wedge(X("M2") + X("L1"), X("P1")) -
                          wedge(X("M1") - X("L2"), X("P2")));
}

TwoTensor kappa_d3(const Rational& inv_kappa) {
  const auto& g = so32().physical.algebra;
  const auto X = [&](const char* l) { return (*g)[l]; };
  return Scalar(inv_kappa) * (wedge(X("L1"), X("P1")) + wedge(X("L2"), X("P2")));
}

TwoTensor tachyonic_d4() {
  const auto& g = so42().physical.algebra;
  const auto X = [&](const char* l) { return (*g)[l]; };
  return wedge(X("M1"), X("P2")) - wedge(X("M2"), X("P1")) + wedge(X("L3"), X("P0"));
}

TwoTensor sl2_standard() {
  const auto& g = sl2().chevalley.algebra;
  return wedge((*g)["e_plus"], (*g)["e_minus"]);
}

std::string coefficient_diff(const TwoTensor& got, const TwoTensor& expected, std::size_t limit) {
  const auto& g = got.algebra() ? got.algebra() : expected.algebra();
  std::set<TwoTensor::Key> keys;
  for (const auto& [k, c] : got.terms()) keys.insert(k);
  for (const auto& [k, c] : expected.terms()) keys.insert(k);
  std::string out;
  std::size_t shown = 0, total = 0;
  for (const auto& k : keys) {
    const Scalar a = got.coeff(k.first, k.second), b = expected.coeff(k.first, k.second);
    if (a == b) continue;
    // Antisymmetric inputs repeat every entry transposed; list each pair once.
    if (k.first > k.second && got.is_antisymmetric() && expected.is_antisymmetric()) continue;
    ++total;
    if (shown++ >= limit) continue;
    if (!out.empty()) out += "; ";
    out += g->label(k.first) + "^" + g->label(k.second) + ": got " + a.str() + ", expected " + b.str();
  }
  if (total > limit) out += "; ... (" + std::to_string(total) + " differing pairs)";
  return out;
}

// ---- D=3 ------------------------------------------------------------------

D3Transform d3_transform_rmatrix(const Rational& c1, const Rational& c2) {
  const auto& cat = so32();
  const TwoTensor r = so5_rmatrix(Scalar(c1), Scalar(c2));
  const Rational inv_m1 = c1 * Rational(1, 2), inv_m2 = c2 * Rational(1, 2);
  const std::vector<std::pair<std::string, Rational>> params{{"1/M1", inv_m1}, {"1/M2", inv_m2}};

  D3Transform out;
  out.image = {"so5 r-matrix in the D=3 physical basis", cat.cw_to_physical.map(r), params};
  out.expected = {"tabulated D=3 r-matrix", d3_tabulated(cat.physical.algebra, inv_m1, inv_m2), params};

  // so(5) -> M_AB: expand each Cartan-Weyl matrix in the M basis.
  const auto& w = cat.cw.algebra;
  std::vector<Element> to_m;
  for (std::size_t i = 0; i < w->dim(); ++i) to_m.push_back(*cat.m_basis.expand(cat.cw.image(w->basis(i))));
  const TwoTensor r_m = map_tensor(r, to_m, cat.m_basis.algebra);

  const auto& labels = d3_label_space();
  for (const auto& reading : cat.readings) {
    std::vector<Element> to_labels;
    for (const auto& row : reading.table) {
      Sparse terms;
      for (std::size_t p = 0; p < row.size(); ++p)
        if (!row[p].is_zero()) terms.emplace(labels->index(reading.labels[p]), row[p]);
      to_labels.emplace_back(labels, std::move(terms));
    }
    ReadingComparison cmp;
    cmp.reading = reading.name;
    cmp.bijective = reading.physical.has_value();
    cmp.image = map_tensor(r_m, to_labels, labels);
    cmp.expected = d3_tabulated(labels, inv_m1, inv_m2);
    cmp.diff = cmp.image - cmp.expected;
    out.readings.push_back(std::move(cmp));
  }
  return out;
}

std::vector<Check> d3_transform_checks() {
  std::vector<Check> out;
  const std::vector<std::pair<Rational, Rational>> points{{2, 0}, {0, 2}, {2, 2}};

  std::string per_reading;
  std::size_t reproducing = 0;
  for (std::size_t k = 0; k < so32().readings.size(); ++k) {
    bool all = true;
    std::string first;
    for (const auto& [c1, c2] : points) {
      const auto t = d3_transform_rmatrix(c1, c2);
      const auto& cmp = t.readings[k];
      if (!cmp.reproduces() && all) {
        all = false;
        first = " at (c1,c2)=(" + rstr(c1) + "," + rstr(c2) + "): " + coefficient_diff(cmp.image, cmp.expected, 4);
      }
    }
    const auto t0 = d3_transform_rmatrix(2, 0);
    const auto& cmp0 = t0.readings[k];
    if (!per_reading.empty()) per_reading += " | ";
    per_reading += cmp0.reading + (cmp0.bijective ? " (bracket-preserving)" : " (not bijective)") +
                   (all ? ": reproduces" : ": differs" + first);
    reproducing += all && cmp0.bijective;
  }
  out.push_back(make_check("so32.d3.reading_unique",
                           "exactly one momentum/special-conformal reading is bracket-preserving and reproduces the "
                           "tabulated D=3 r-matrix",
                           reproducing == 1, std::to_string(reproducing) + " readings qualify; " + per_reading));

  for (const auto& [c1, c2] : points) {
    const auto t = d3_transform_rmatrix(c1, c2);
    out.push_back(make_check("so32.d3.rmatrix." + point_id(Scalar(c1), Scalar(c2)),
                             "image of the so(5) r-matrix at (c1,c2)=(" + rstr(c1) + "," + rstr(c2) +
                                 ") equals the tabulated form with M_i = 2/c_i",
                             t.image.r == t.expected.r,
                             "image " + t.image.r.str() + "; diff " + coefficient_diff(t.image.r, t.expected.r)));
  }
  const auto zero = d3_transform_rmatrix(0, 0);
  out.push_back(make_check("so32.d3.rmatrix.zero", "(c1,c2)=(0,0) maps to the zero r-matrix",
                           zero.image.r.is_zero() && zero.expected.r.is_zero()));

  // The label-space image of the admissible reading must agree with the dictionary.
  std::string w;
  for (const auto& [c1, c2] : points) {
    const auto t = d3_transform_rmatrix(c1, c2);
    const auto& cmp = t.readings[so32().admissible];
    const auto& lab = cmp.image.algebra();
    const auto& phys = t.image.r.algebra();
    TwoTensor relabeled(lab);
    for (const auto& [k, c] : t.image.r.terms()) relabeled.add(lab->index(phys->label(k.first)), lab->index(phys->label(k.second)), c);
    if (!(relabeled == cmp.image) && w.empty()) w = coefficient_diff(relabeled, cmp.image);
  }
  out.push_back(make_check("so32.d3.reading_consistency",
                           "table-based and dictionary-based images agree for the admissible reading", w.empty(), w));
  return out;
}

// ---- D=4 ------------------------------------------------------------------

D4Transform d4_transform_rmatrix(const Rational& m) {
  const Rational inv = Rational(1) / m;
  const TwoTensor r = sl4_rmatrix(Scalar(inv), Scalar(inv * Rational(2)));
  const std::vector<std::pair<std::string, Rational>> params{{"M", m}};
  D4Transform out;
  out.image = {"sl(4) r-matrix in the D=4 physical basis", so42().sl4_to_physical.map(r), params};
  out.expected = {"tabulated D=4 r-matrix", d4_tabulated(inv), params};
  out.diff = out.image.r - out.expected.r;
  return out;
}

std::vector<Check> d4_transform_checks() {
  std::vector<Check> out;
  for (const Rational& m : {Rational(1), Rational(2), Rational(-3, 5)}) {
    const auto t = d4_transform_rmatrix(m);
    out.push_back(make_check("so42.d4.rmatrix.M_" + rstr(m),
                             "image of the sl(4) r-matrix with c2 = 2 c1 = 2/M equals the tabulated D=4 form at M=" + rstr(m),
                             t.diff.is_zero(), "image " + t.image.r.str() + "; diff " + coefficient_diff(t.image.r, t.expected.r)));
  }
  const auto t1 = d4_transform_rmatrix(1), t2 = d4_transform_rmatrix(2);
  out.push_back(make_check("so42.d4.linearity", "M=2 image is half the M=1 image",
                           t2.image.r == Scalar::rational(1, 2) * t1.image.r));
  const ThreeTensor res = cybe_residual(t1.image.r);
  out.push_back(make_check("so42.d4.cybe", "the D=4 physical r-matrix solves the CYBE", res.is_zero(), residual_witness(res)));
  return out;
}

std::vector<Check> naturality_checks() {
  std::vector<Check> out;
  auto run = [&](const std::string& id, const GeneratorDictionary& d, const TwoTensor& r) {
    const TwoTensor r_phys = d.map(r);
    std::string w;
    for (std::size_t i = 0; i < d.target->dim() && w.empty(); ++i) {
      const Element x = d.target->basis(i);
      const TwoTensor direct = cocommutator(x, r_phys);
      const TwoTensor pulled = d.map(cocommutator(d.unmap(x), r));
      if (!(direct == pulled)) w = d.target->label(i) + ": " + coefficient_diff(direct, pulled, 3);
    }
    out.push_back(make_check(id, "cocommutators commute with the " + d.name + " dictionary on every physical generator",
                             w.empty(), w));
  };
  run("so32.d3.naturality", so32().cw_to_physical, so5_rmatrix(Scalar(1), Scalar(1)));
  run("so42.d4.naturality", so42().sl4_to_physical, sl4_rmatrix(Scalar(1), Scalar(2)));
  return out;
}

// ---- subalgebra claims ----------------------------------------------------

std::vector<Check> soft_commutant_check() {
  const auto& g = so32().physical.algebra;
  const auto X = [&](const char* l) { return (*g)[l]; };
  const Element DL = X("D") - X("L1");
  const Element Pm = X("P0") - X("P1"), Pp = X("P0") + X("P1");
  const Element c = bracket(DL, Pm), cp = bracket(DL, Pp);
  return {make_check("so32.soft.commutant", "[D - L1, P_-] = 0", c.is_zero(), "[D - L1, P_-] = " + c.str()),
          make_check("so32.soft.contrast_P_plus", "[D - L1, P_+] is nonzero", !cp.is_zero(), "[D - L1, P_+] = " + cp.str()),
          make_check("so32.soft.D_D", "[D, D] = 0", bracket(X("D"), X("D")).is_zero())};
}

std::vector<Check> lorentz_decomposition_check() {
  const auto& g = so42().physical.algebra;
  const auto X = [&](const char* l) { return (*g)[l]; };
  const Element Et1 = X("L1") + X("M2"), Et2 = X("M1") - X("L2"), Et3 = X("L3");
  const Element E1 = X("L1") - X("M2"), E2 = X("L2") + X("M1"), E3 = X("M3");
  std::vector<Check> out;
  auto rel = [&](const std::string& id, const std::string& desc, const Element& lhs, const Element& rhs) {
    out.push_back(make_check(id, desc, lhs == rhs, "computed " + lhs.str()));
  };
  rel("so42.e2tilde.E1_E2", "[E~1, E~2] = 0", bracket(Et1, Et2), g->zero());
  rel("so42.e2tilde.E1_E3", "[E~1, E~3] = -E~1", bracket(Et1, Et3), -Et1);
  rel("so42.e2tilde.E2_E3", "[E~2, E~3] = -E~2", bracket(Et2, Et3), -Et2);
  rel("so42.e2.E1_E2", "[E1, E2] = 0", bracket(E1, E2), g->zero());
  rel("so42.e2.E2_E3", "[E2, E3] = -E1", bracket(E2, E3), -E1);
  rel("so42.e2.E1_E3", "[E1, E3] = E2", bracket(E1, E3), E2);

  const std::vector<Element> six{Et1, Et2, Et3, E1, E2, E3};
  const std::size_t rk = element_rank(six);
  out.push_back(make_check("so42.lorentz.rank", "the six e~(2) and e(2) generators are linearly independent", rk == 6,
                           "rank " + std::to_string(rk)));
  std::vector<Element> both = six;
  for (const char* l : {"M1", "M2", "M3", "L1", "L2", "L3"}) both.push_back(X(l));
  out.push_back(make_check("so42.lorentz.span", "they span the Lorentz subalgebra so(3,1)", element_rank(both) == 6 && rk == 6));
  const auto c1 = subalgebra_closure({Et1, Et2, Et3}), c2 = subalgebra_closure({E1, E2, E3});
  out.push_back(make_check("so42.e2tilde.closed", "E~1, E~2, E~3 close under the bracket", c1.input_closed && c1.dimension == 3,
                           "closure dimension " + std::to_string(c1.dimension)));
  out.push_back(make_check("so42.e2.closed", "E1, E2, E3 close under the bracket", c2.input_closed && c2.dimension == 3,
                           "closure dimension " + std::to_string(c2.dimension)));
  return out;
}

std::vector<Check> undeformed_sector_check() {
  const auto& g = so42().physical.algebra;
  const auto X = [&](const char* l) { return (*g)[l]; };
  const TwoTensor r = d4_tabulated(1);
  const Element Et1 = X("L1") + X("M2"), Et2 = X("M1") - X("L2"), Pp = X("P0") + X("P3");
  std::vector<Check> out;
  for (const auto& [name, x] : std::vector<std::pair<std::string, Element>>{{"M3", X("M3")}, {"E1tilde", Et1}, {"E2tilde", Et2}, {"P_plus", Pp}}) {
    const TwoTensor d = cocommutator(x, r);
    out.push_back(make_check("so42.undeformed.delta_" + name, "cocommutator of " + name + " vanishes under the D=4 r-matrix",
                             d.is_zero(), d.str()));
  }
  const TwoTensor dp1 = cocommutator(X("P1"), r);
  out.push_back(make_check("so42.undeformed.delta_P1_nonzero", "cocommutator of P1 is nonzero", !dp1.is_zero(), dp1.str()));
  const auto cl = subalgebra_closure({X("M3"), Et1, Et2, Pp});
  out.push_back(make_check("so42.undeformed.closed", "{M3, E~1, E~2, P_+} is a closed 4-dimensional subalgebra",
                           cl.input_closed && cl.dimension == 4, "closure dimension " + std::to_string(cl.dimension)));
  return out;
}

// ---- comparison r-matrices -----------------------------------------------

std::vector<Check> comparison_rmatrices() {
  std::vector<Check> out;
  const auto& g3 = so32().physical.algebra;
  const auto& g4 = so42().physical.algebra;
  const std::vector<std::string> poincare3{"P0", "P1", "P2", "J", "L1", "L2"};
  const std::vector<std::string> poincare4{"P0", "P1", "P2", "P3", "M1", "M2", "M3", "L1", "L2", "L3"};

  auto modified = [&](const std::string& id, const std::string& what, const TwoTensor& r, const std::vector<std::string>& gens,
                      const TwoTensor& diagnostic, const std::string& diagnostic_name) {
    const ThreeTensor t = cybe_residual(r);
    out.push_back(make_check(id + ".cybe_nonzero", what + " does not solve the CYBE", !t.is_zero(), residual_witness(t)));
    const auto rep = ad_invariance_residual(t, generators(r.algebra(), gens));
    const auto diag = ad_invariance_residual(cybe_residual(diagnostic), generators(r.algebra(), gens));
    out.push_back(make_check(id + ".ad_invariant", "its CYBE residual is ad-invariant under the Poincare generators",
                             rep.invariant(),
                             first_nonzero(rep, gens) + "; diagnostic " + diagnostic_name +
                                 (diag.invariant() ? " is ad-invariant" : " is not ad-invariant either")));
  };

  const auto X3 = [&](const char* l) { return (*g3)[l]; };
  const auto X4 = [&](const char* l) { return (*g4)[l]; };
  modified("so32.kappa", "kappa-Poincare r-matrix (1/kappa)(L1^P1 + L2^P2)", kappa_d3(1), poincare3,
           wedge(X3("L2"), X3("P2")) - wedge(X3("L1"), X3("P1")), "-L1^P1 + L2^P2");
  modified("so42.tachyonic", "M1^P2 - M2^P1 + L3^P0", tachyonic_d4(), poincare4,
           wedge(X4("M2"), X4("P1")) - wedge(X4("M1"), X4("P2")) + wedge(X4("L3"), X4("P0")), "-M1^P2 + M2^P1 + L3^P0");

  const TwoTensor rs = sl2_standard();
  const ThreeTensor ts = cybe_residual(rs);
  out.push_back(make_check("sl2.standard.cybe_nonzero", "standard r-matrix e_plus^e_minus does not solve the CYBE",
                           !ts.is_zero(), residual_witness(ts)));
  const auto& gs = sl2().chevalley.algebra;
  const auto reps = ad_invariance_residual(ts, generators(gs, gs->labels()));
  out.push_back(make_check("sl2.standard.ad_invariant", "its CYBE residual is sl(2)-invariant", reps.invariant(),
                           first_nonzero(reps, gs->labels())));

  // Contrast: the tabulated D=3 and D=4 r-matrices.
  const TwoTensor first_term = d3_tabulated(g3, 1, 0);
  const ThreeTensor t1 = cybe_residual(first_term);
  const TwoTensor image = so32().cw_to_physical.map(so5_rmatrix(Scalar(2), Scalar(0)));
  out.push_back(make_check("so32.d3.first_term.cybe", "with M2 = infinity the tabulated D=3 r-matrix solves the CYBE",
                           t1.is_zero(),
                           residual_witness(t1) + "; the so(5) image " + image.str() + " has " +
                               residual_witness(cybe_residual(image))));
  const ThreeTensor t4 = cybe_residual(d4_tabulated(1));
  out.push_back(make_check("so42.d4.tabulated.cybe", "the tabulated D=4 r-matrix solves the CYBE", t4.is_zero(),
                           residual_witness(t4)));
  return out;
}

std::vector<Check> poincare_membership_check() {
  auto legs_in = [](const TwoTensor& r, const std::set<std::string>& allowed) {
    for (const auto& [k, c] : r.terms())
      if (!allowed.count(r.algebra()->label(k.first)) || !allowed.count(r.algebra()->label(k.second))) return false;
    return true;
  };
  return {make_check("so32.d3.first_term.poincare", "the M2 = infinity D=3 r-matrix lives in the Poincare subalgebra",
                     legs_in(d3_tabulated(so32().physical.algebra, 1, 0), {"P0", "P1", "P2", "J", "L1", "L2"})),
          make_check("so42.d4.poincare", "the D=4 r-matrix lives in the Poincare subalgebra",
                     legs_in(d4_tabulated(1), {"P0", "P1", "P2", "P3", "M1", "M2", "M3", "L1", "L2", "L3"}))};
}

// ---- dimensions -----------------------------------------------------------

Check dimension_audit(const std::string& id, const std::string& description, const TwoTensor& r,
                      const DimensionGrading& grading, int expected) {
  const auto d = grading.of(r);
  std::string w = d ? "dimension " + std::to_string(*d) : std::string("mixed dimensions");
  return make_check(id, description, d.has_value() && *d == expected, d && *d == expected ? std::string() : w);
}

Check grading_additivity(const std::string& id, const DimensionGrading& grading) {
  const auto& g = grading.algebra;
  std::string w;
  for (std::size_t a = 0; a < g->dim() && w.empty(); ++a)
    for (std::size_t b = a + 1; b < g->dim() && w.empty(); ++b) {
      const Element c = bracket(g->basis(a), g->basis(b));
      if (c.is_zero()) continue;
      const auto d = grading.of(c);
      if (!d || *d != grading.of(a) + grading.of(b)) w = "[" + g->label(a) + "," + g->label(b) + "] = " + c.str();
    }
  return make_check(id, "dim([x,y]) = dim(x) + dim(y) on every nonzero bracket of " + g->name(), w.empty(), w);
}

std::vector<Check> dimension_checks() {
  const auto g3 = DimensionGrading::by_prefix(so32().physical.algebra);
  const auto g4 = DimensionGrading::by_prefix(so42().physical.algebra);
  const auto gs = DimensionGrading::by_prefix(sl2().physical.algebra);
  const auto& sp = sl2().physical.algebra;
  return {grading_additivity("so32.dimension.additive", g3),
          grading_additivity("so42.dimension.additive", g4),
          grading_additivity("sl2.dimension.additive", gs),
          dimension_audit("so32.dimension.d3_rmatrix", "every term of the tabulated D=3 r-matrix has dimension +1",
                          d3_tabulated(so32().physical.algebra, 1, 1), g3, 1),
          dimension_audit("so32.dimension.d3_image", "every term of the so(5) image in the D=3 basis has dimension +1",
                          so32().cw_to_physical.map(so5_rmatrix(Scalar(1), Scalar(1))), g3, 1),
          dimension_audit("so42.dimension.d4_rmatrix", "every term of the D=4 r-matrix has dimension +1", d4_tabulated(1), g4, 1),
          dimension_audit("so32.dimension.kappa", "every term of the kappa-Poincare r-matrix has dimension +1", kappa_d3(1), g3, 1),
          dimension_audit("so42.dimension.tachyonic", "every term of M1^P2 - M2^P1 + L3^P0 has dimension +1", tachyonic_d4(), g4, 1),
          dimension_audit("sl2.dimension.standard", "standard r-matrix P^K has dimension 0, so its parameter is dimensionless",
                          wedge((*sp)["P"], (*sp)["K"]), gs, 0),
          dimension_audit("sl2.dimension.jordanian", "Jordanian r-matrix D^P has dimension +1",
                          wedge((*sp)["D"], (*sp)["P"]), gs, 1)};
}

// ---- Cartan-Weyl r-matrices ----------------------------------------------

std::vector<Check> cartan_weyl_cybe_checks() {
  std::vector<Check> out;
  auto family = [&](const std::string& prefix, const std::string& what, auto make,
                    const std::vector<std::pair<Scalar, Scalar>>& points) {
    for (const auto& p : cybe_family(make, points))
      out.push_back(make_check(prefix + point_id(p.c1, p.c2),
                               what + " solves the CYBE at (c1,c2)=(" + p.c1.str() + "," + p.c2.str() + ")",
                               p.residual.is_zero(), residual_witness(p.residual)));
  };
  family("so5.cybe.", "c1 (h1^e4 - e1^e3) + c2 h2^e4", so5_rmatrix, quadratic_schedule());
  family("sl4.cybe.", "c1 (h1-h3)^e6 + c2 (h3^e6 + e1^e5 - e3^e4)", sl4_rmatrix,
         {{Scalar(1), Scalar(2)}, {Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}});
  const ThreeTensor hs = cybe_residual(wedge((*sl2().chevalley.algebra)["h"], (*sl2().chevalley.algebra)["e_plus"]));
  out.push_back(make_check("sl2.jordanian.cybe", "h^e_plus solves the CYBE", hs.is_zero(), residual_witness(hs)));
  return out;
}

std::vector<Check> reality_checks() {
  std::vector<Check> out;
  for (int lambda : {1, -1})
    for (int eps : {1, -1}) {
      const Involution star = so5_star(lambda, eps);
      const std::string tag = "lambda_" + std::to_string(lambda) + "_eps_" + std::to_string(eps);
      auto anti = check_antiautomorphism(star, "so5.star." + tag);
      out.insert(out.end(), anti.begin(), anti.end());
      // Linear in real (c1, c2): both unit points decide reality.
      const TwoTensor r1 = reality_residual(so5_rmatrix(Scalar(1), Scalar(0)), star);
      const TwoTensor r2 = reality_residual(so5_rmatrix(Scalar(0), Scalar(1)), star);
      const bool real = r1.is_zero() && r2.is_zero();
      out.push_back(make_check("so5.reality." + tag,
                               std::string("so(5) r-matrix with real c1, c2 is ") + (eps == -1 ? "real" : "not real") +
                                   " under lambda=" + std::to_string(lambda) + ", eps=" + std::to_string(eps),
                               real == (eps == -1), real ? "real" : "residual " + (r1.is_zero() ? r2 : r1).str()));
    }
  for (int eps : {1, -1}) {
    const Involution star = sl4_star(-1, eps);
    const std::string tag = "eta_-1_eps_" + std::to_string(eps);
    auto anti = check_antiautomorphism(star, "sl4.star." + tag);
    out.insert(out.end(), anti.begin(), anti.end());
    const TwoTensor good = reality_residual(sl4_rmatrix(Scalar(1), Scalar(2)), star);
    const TwoTensor bad = reality_residual(sl4_rmatrix(Scalar(1), Scalar(1)), star);
    out.push_back(make_check("sl4.reality." + tag + ".c2_eq_2c1", "sl(4) r-matrix with c2 = 2 c1 is real under eta=-1, eps=" +
                                                                     std::to_string(eps),
                             good.is_zero(), good.str()));
    out.push_back(make_check("sl4.reality." + tag + ".c2_eq_c1", "sl(4) r-matrix with c2 = c1 is not real under eta=-1, eps=" +
                                                                    std::to_string(eps),
                             !bad.is_zero(), "residual " + bad.str()));
  }
  return out;
}

}  // namespace qconf
