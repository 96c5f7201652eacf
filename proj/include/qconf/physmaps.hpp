#pragma once

#include "qconf/catalog.hpp"
#include "qconf/report.hpp"
#include "qconf/tensor.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qconf {

/// Integer scale dimension per basis label: P +1, K -1, everything else 0.
struct DimensionGrading {
  AlgebraPtr algebra;
  std::map<std::string, int> dims;

  int of(std::size_t index) const;
  /// Common dimension of all terms, nullopt when mixed or x = 0.
  std::optional<int> of(const Element& x) const;
  /// Every term c * a (x) b has dim(a) + dim(b) = d; nullopt when mixed.
  std::optional<int> of(const TwoTensor& r) const;

  /// Grading by label prefix: P* -> +1, K* -> -1.
  static DimensionGrading by_prefix(const AlgebraPtr& g);
};

/// r-matrix in a physical basis together with its mass parameters.
struct PhysicalRMatrix {
  std::string name;
  TwoTensor r;
  std::vector<std::pair<std::string, Rational>> params;
};

/// c1 (h1^e4 - e1^e3) + c2 h2^e4 over the so(5) Cartan-Weyl basis.
TwoTensor so5_rmatrix(const Scalar& c1, const Scalar& c2);
/// c1 (h1 - h3)^e6 + c2 (h3^e6 + e1^e5 - e3^e4) over sl(4).
TwoTensor sl4_rmatrix(const Scalar& c1, const Scalar& c2);

/// Tabulated D=3 form: (1/M1)(L1^P1 - (L2+J)^P2) + (1/M2)(D-L1)^P_-, P_- = P0 - P1,
/// given by the inverse masses.
TwoTensor d3_tabulated(const AlgebraPtr& g, const Rational& inv_m1, const Rational& inv_m2);
/// Tabulated D=4 form: (1/M)[L3^P_+ + (M2+L1)^P1 - (M1-L2)^P2], P_+ = P0 + P3.
TwoTensor d4_tabulated(const Rational& inv_m);
/// kappa-Poincare in D=3: (1/kappa)(L1^P1 + L2^P2).
TwoTensor kappa_d3(const Rational& inv_kappa);
/// D=4 Poincare r-matrix M1^P2 - M2^P1 + L3^P0.
TwoTensor tachyonic_d4();
/// Standard sl(2) r-matrix e_plus ^ e_minus.
TwoTensor sl2_standard();

/// Image of the so(5) r-matrix under one reading of the momentum/special
/// conformal table, over a bracket-free copy of the physical labels.
struct ReadingComparison {
  std::string reading;
  bool bijective = false;
  TwoTensor image, expected, diff;
  bool reproduces() const { return diff.is_zero(); }
};

struct D3Transform {
  PhysicalRMatrix image;  ///< through the admissible dictionary, over so(3,2)
  PhysicalRMatrix expected;
  std::vector<ReadingComparison> readings;
};

/// Pushes the so(5) r-matrix through every reading and compares with the
/// tabulated form at M_i = 2/c_i (c_i = 0 drops the term).
D3Transform d3_transform_rmatrix(const Rational& c1, const Rational& c2);

struct D4Transform {
  PhysicalRMatrix image, expected;
  TwoTensor diff;
};
/// sl(4) r-matrix at c1 = 1/M, c2 = 2/M pushed into the so(4,2) physical basis.
D4Transform d4_transform_rmatrix(const Rational& m);

/// Label-wise difference "A^B: got x, expected y" for the first few components.
std::string coefficient_diff(const TwoTensor& got, const TwoTensor& expected, std::size_t limit = 6);

std::vector<Check> d3_transform_checks();
std::vector<Check> d4_transform_checks();
std::vector<Check> naturality_checks();
std::vector<Check> soft_commutant_check();
std::vector<Check> lorentz_decomposition_check();
std::vector<Check> undeformed_sector_check();
std::vector<Check> comparison_rmatrices();
std::vector<Check> poincare_membership_check();

/// Every term of r has dimension `expected`.
Check dimension_audit(const std::string& id, const std::string& description, const TwoTensor& r,
                      const DimensionGrading& grading, int expected);
/// dim([x,y]) = dim(x) + dim(y) on every nonzero basis bracket.
Check grading_additivity(const std::string& id, const DimensionGrading& grading);
std::vector<Check> dimension_checks();

/// Criterion-style CYBE checks on the Cartan-Weyl r-matrices over the
/// quadratic schedule.
std::vector<Check> cartan_weyl_cybe_checks();
/// Reality of both Cartan-Weyl r-matrices under their involutions.
std::vector<Check> reality_checks();

}  // namespace qconf
