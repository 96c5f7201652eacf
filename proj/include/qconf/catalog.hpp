#pragma once

#include "qconf/lie_algebra.hpp"
#include "qconf/report.hpp"
#include "qconf/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qconf {

/// Linear map between two algebras given by the images of the source basis.
struct GeneratorDictionary {
  std::string name;
  AlgebraPtr source, target;
  std::vector<Element> forward;   ///< image of each source basis element
  std::vector<Element> backward;  ///< image of each target basis element; empty unless bijective

  Element map(const Element& x) const;
  Element unmap(const Element& y) const;
  TwoTensor map(const TwoTensor& r) const;
  TwoTensor unmap(const TwoTensor& r) const;
};

/// Bracket preservation on every basis pair and, when present, forward/backward
/// consistency.
std::vector<Check> check_dictionary(const GeneratorDictionary& d, const std::string& id_prefix);

/// Dictionary between two realizations in the same matrix space.
GeneratorDictionary dictionary_between(std::string name, const RealizedAlgebra& from, const RealizedAlgebra& to);

struct CartanWeylData {
  AlgebraPtr algebra;
  std::vector<std::string> cartan_names, positive_names, negative_names;
  std::vector<Element> cartan, positive, negative;  ///< negative may be empty

  const Element& h(std::size_t a) const { return cartan.at(a - 1); }
  const Element& e(std::size_t a) const { return positive.at(a - 1); }
  const Element& f(std::size_t a) const { return negative.at(a - 1); }
};

/// Weight w with [h, x] = w x, or nullopt when x is not an eigenvector.
std::optional<Scalar> weight(const Element& h, const Element& x);

/// so(p,q) generators M_AB (A<B), (M_AB)^C_D = delta_A^C eta_BD - delta_B^C eta_AD.
/// Labels are "M_AB".
std::vector<Matrix> orthogonal_generators(const std::vector<int>& metric, std::vector<std::string>& labels);

/// M_AB for any ordered pair, with M_BA = -M_AB.
Element m_generator(const AlgebraPtr& g, std::size_t a, std::size_t b);

struct Sl2Catalog {
  RealizedAlgebra chevalley;  ///< h, e_plus, e_minus
  RealizedAlgebra physical;   ///< P, D, K with P = e_plus, K = e_minus, D = h/2
  GeneratorDictionary physical_to_chevalley;
};

/// One candidate reading of the D=3 momentum/special-conformal dictionary.
struct PhysicalReading {
  std::string name;
  std::size_t rank = 0;                      ///< rank of the M -> physical table
  std::vector<std::string> labels;           ///< physical labels, table columns
  std::vector<Vec> table;                    ///< row per M_AB (A<B) over `labels`
  std::optional<RealizedAlgebra> physical;   ///< present when bijective
};

struct So32Catalog {
  RealizedAlgebra m_basis;   ///< M_AB, eta = diag(-1,1,-1,1,1)
  RealizedAlgebra cw;        ///< h1 h2 e1..e4 f1..f4
  CartanWeylData cw_data;
  std::vector<PhysicalReading> readings;
  std::size_t admissible = 0;  ///< index into readings of the bijective one
  RealizedAlgebra physical;    ///< P0 P1 P2 K0 K1 K2 D J L1 L2
  GeneratorDictionary cw_to_physical;
  Element printed_e3, printed_e4;  ///< the tabulated e3, e4, in cw
  std::vector<std::vector<Scalar>> alpha;  ///< computed [h_i, e_a] = alpha_ia e_a
};

struct Sl4Catalog {
  RealizedAlgebra elementary;  ///< h1..h3 e1..e6 f1..f6 from 4x4 unit matrices
  CartanWeylData cw;           ///< h1..h6 include h4..h6 as sums
};

struct So42Catalog {
  RealizedAlgebra m_basis;   ///< M_KL, g = diag(-1,1,1,1,1,-1)
  RealizedAlgebra physical;  ///< P0..P3 K0..K3 M1..M3 L1..L3 D
  CartanWeylData borel;      ///< tabulated Cartan and positive images in physical
  GeneratorDictionary sl4_to_physical;  ///< negatives solved from [e_i, f_i] = h_i
};

const Sl2Catalog& sl2();
const So32Catalog& so32();
const Sl4Catalog& sl4();
const So42Catalog& so42();

/// Extended Cartan matrix of sl(4) as tabulated.
const std::vector<std::vector<int>>& sl4_extended_cartan();

/// Algebra by CLI name: sl2, sl2-phys, so32, so32-m, sp4/so5, so42, so42-m, sl4.
AlgebraPtr algebra_by_name(const std::string& name);
const std::vector<std::string>& algebra_names();

std::vector<Check> verify_cartan_matrix(const CartanWeylData& cw, const std::string& id_prefix);
std::vector<Check> verify_cartan_weyl_relations(const CartanWeylData& cw, const std::string& id_prefix);
std::vector<Check> verify_serre_consequences(const CartanWeylData& cw, const std::string& id_prefix);
std::vector<Check> verify_so32_catalog();
std::vector<Check> verify_so42_catalog();
std::vector<Check> verify_sl2_catalog();

}  // namespace qconf
