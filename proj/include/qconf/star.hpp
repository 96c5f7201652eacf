#pragma once

#include "qconf/lie_algebra.hpp"
#include "qconf/report.hpp"
#include "qconf/tensor.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qconf {

class DomainError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// Conjugate-linear map fixed by its action on basis elements; meant to be an
/// involutive anti-automorphism.
class Involution {
public:
  Involution(std::string name, AlgebraPtr g, std::vector<std::optional<Element>> images,
             std::vector<std::string> borel = {}, std::vector<std::string> notes = {});

  const std::string& name() const { return name_; }
  const AlgebraPtr& algebra() const { return g_; }
  /// Labels spanning the Borel subalgebra the involution should preserve.
  const std::vector<std::string>& borel() const { return borel_; }
  /// How images not given explicitly were reconstructed.
  const std::vector<std::string>& notes() const { return notes_; }

  Element apply(const Element& x) const;
  /// Componentwise: (c a (x) b)^+ = conj(c) a^+ (x) b^+.
  TwoTensor apply(const TwoTensor& r) const;

  /// Copy with the image of one basis label replaced.
  Involution with_image(const std::string& label, const Element& image) const;

private:
  std::string name_;
  AlgebraPtr g_;
  std::vector<std::optional<Element>> images_;
  std::vector<std::string> borel_, notes_;
};

/// Anti-automorphism on all basis pairs, involutivity, Borel preservation.
std::vector<Check> check_antiautomorphism(const Involution& star, const std::string& id_prefix);

/// star(r) - r; zero iff r is real for this form.
TwoTensor reality_residual(const TwoTensor& r, const Involution& star);

/// Real form of so(5) with sign parameters lambda, eps on the Cartan-Weyl basis.
Involution so5_star(int lambda, int eps);
/// Real form of sl(4) with sign parameters eta, eps on the Cartan-Weyl basis.
Involution sl4_star(int eta, int eps);

/// Parses "so32:lambda=1,eps=-1" or "so42:eta=-1,eps=1" (also sp4/so5, sl4).
Involution star_by_spec(const std::string& spec);

}  // namespace qconf
