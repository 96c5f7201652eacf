#include "qconf/suites.hpp"

#include "qconf/catalog.hpp"
#include "qconf/hopf.hpp"
#include "qconf/physmaps.hpp"

#include <chrono>
#include <random>
#include <stdexcept>

namespace qconf {

namespace {

std::vector<Check> concat(std::initializer_list<std::vector<Check>> parts) {
  std::vector<Check> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Check jacobi_check(const std::string& id, const AlgebraPtr& g) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = jacobi_residual(g);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string w;
  if (!rep.zero)
    w = "[[" + g->label((*rep.triple)[0]) + "," + g->label((*rep.triple)[1]) + "]," + g->label((*rep.triple)[2]) +
        "] + cyclic = " + rep.residual.str();
  else if (s >= 1.0)
    w = "took more than one second";
  return make_check(id, "Jacobi identity on all " + std::to_string(rep.triples_checked) + " basis triples of " + g->name() +
                            " (" + std::to_string(g->dim()) + " generators)",
                    rep.zero && s < 1.0, w);
}

Element random_element(const AlgebraPtr& g, std::mt19937& rng, bool complex) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  Element x = g->zero();
  for (std::size_t i = 0; i < g->dim(); ++i) {
    Scalar c(coeff(rng));
    if (complex) c += Scalar(coeff(rng)) * Scalar::i();
    x += c * g->basis(i);
  }
  return x;
}

TwoTensor random_tensor(const AlgebraPtr& g, std::mt19937& rng, bool complex) {
  std::uniform_int_distribution<std::size_t> pick(0, g->dim() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  TwoTensor r(g);
  for (int k = 0; k < 8; ++k) {
    Scalar c(coeff(rng));
    if (complex) c += Scalar(coeff(rng)) * Scalar::i();
    r.add(pick(rng), pick(rng), c);
  }
  return r;
}

}  // namespace

std::vector<Check> jacobi_checks() {
  return {jacobi_check("sl2.jacobi", sl2().chevalley.algebra),
          jacobi_check("sl2.phys.jacobi", sl2().physical.algebra),
          jacobi_check("so32.m.jacobi", so32().m_basis.algebra),
          jacobi_check("so32.jacobi", so32().physical.algebra),
          jacobi_check("so5.jacobi", so32().cw.algebra),
          jacobi_check("so42.m.jacobi", so42().m_basis.algebra),
          jacobi_check("so42.jacobi", so42().physical.algebra),
          jacobi_check("sl4.jacobi", sl4().elementary.algebra)};
}

std::vector<Check> cocycle_checks(std::size_t instances, std::uint32_t seed) {
  std::vector<Check> out;
  const std::vector<std::pair<std::string, AlgebraPtr>> algebras{{"sl2", sl2().chevalley.algebra},
                                                                  {"so32", so32().physical.algebra},
                                                                  {"so5", so32().cw.algebra},
                                                                  {"so42", so42().physical.algebra},
                                                                  {"sl4", sl4().elementary.algebra}};
  for (std::size_t a = 0; a < algebras.size(); ++a) {
    const auto& [name, g] = algebras[a];
    std::mt19937 rng(seed + static_cast<std::uint32_t>(a));
    const bool complex = name == "sl4" || name == "so5";
    std::string w;
    for (std::size_t k = 0; k < instances && w.empty(); ++k) {
      const Element x = random_element(g, rng, complex), y = random_element(g, rng, complex);
      const TwoTensor r = random_tensor(g, rng, complex);
      const TwoTensor lhs = cocommutator(bracket(x, y), r);
      const TwoTensor rhs = ad_action(x, cocommutator(y, r)) - ad_action(y, cocommutator(x, r));
      if (!(lhs == rhs)) w = "instance " + std::to_string(k) + ": " + coefficient_diff(lhs, rhs, 3);
    }
    out.push_back(make_check(name + ".cocycle",
                             "coboundary cocycle identity on " + std::to_string(instances) + " seeded random (x, y, r) in " + name,
                             w.empty(), w));
  }
  return out;
}

std::vector<CheckGroup> hopf_groups(int n, bool compare_printed, std::size_t confluence_length) {
  return {{"hopf.axioms", [n] { return hopf::check_hopf_algebra(n); }},
          {"hopf.antipode", [n, compare_printed] { return hopf::check_antipode(n, compare_printed); }},
          {"hopf.mutation", [n] { return hopf::check_mutation(n); }},
          {"hopf.confluence", [n, confluence_length] { return hopf::check_confluence(n, confluence_length); }},
          {"hopf.dimensions", [n] { return hopf::check_dimensions(n); }},
          {"hopf.cocommutator", [] { return hopf::check_first_order_cocommutator(); }},
          {"hopf.casimir", [n] { return hopf::casimir_classical_limit(n); }}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"jacobi",      "cybe", "reality",     "basis-maps", "subalgebras",
                                              "hopf",        "comparisons", "dimensions", "all"};
  return names;
}

std::vector<CheckGroup> suite_groups(const std::string& name, const SuiteOptions& o) {
  std::vector<CheckGroup> g;
  const bool all = name == "all";
  if (all || name == "jacobi") g.emplace_back("jacobi", [] { return jacobi_checks(); });
  if (all || name == "cybe") {
    g.emplace_back("cybe.cartan_weyl", [] { return cartan_weyl_cybe_checks(); });
    g.emplace_back("cybe.cocycle", [o] { return cocycle_checks(o.cocycle_instances, o.seed); });
  }
  if (all || name == "reality") g.emplace_back("reality", [] { return reality_checks(); });
  if (all || name == "basis-maps") {
    g.emplace_back("catalog.sl2", [] { return verify_sl2_catalog(); });
    g.emplace_back("catalog.so32", [] { return verify_so32_catalog(); });
    g.emplace_back("catalog.so42", [] { return verify_so42_catalog(); });
    g.emplace_back("maps.d3", [] { return d3_transform_checks(); });
    g.emplace_back("maps.d4", [] { return concat({d4_transform_checks(), naturality_checks()}); });
  }
  if (all || name == "subalgebras") {
    g.emplace_back("subalgebras", [] {
      return concat({soft_commutant_check(), lorentz_decomposition_check(), undeformed_sector_check(),
                     poincare_membership_check(),
                     {make_check("so42.casimir.conformal_conjecture",
                                 "[C2, K_mu] and [C2, D] vanish on C2 = 0 (stated as a conjecture)", false,
                                 "needs the quantized K_mu and D, which are not given", Status::OutOfScope)}});
    });
  }
  if (all || name == "hopf")
    for (auto& h : hopf_groups(o.hopf_order, true, o.confluence_length)) g.push_back(std::move(h));
  if (all || name == "comparisons")
    g.emplace_back("comparisons", [] { return concat({comparison_rmatrices(), hopf::swap_map_check()}); });
  if (all || name == "dimensions") g.emplace_back("dimensions", [] { return dimension_checks(); });
  if (g.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
  return g;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
  VerificationReport r;
  r.suite = name;
  run_groups(r, suite_groups(name, options));
  return r;
}

}  // namespace qconf
