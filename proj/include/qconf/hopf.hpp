#pragma once

#include "qconf/report.hpp"
#include "qconf/scalar.hpp"
#include "qconf/tensor.hpp"

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qconf::hopf {

/// Truncated power series in u = 1/M with rational coefficients, kept mod u^(order+1).
class Series {
public:
  Series() = default;
  explicit Series(int order) : c_(static_cast<std::size_t>(order) + 1) {}
  Series(int order, Rational constant);
  /// c * u^k truncated at `order`.
  static Series monomial(int order, int k, Rational c);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  Rational coeff(int k) const { return k <= order() ? c_[static_cast<std::size_t>(k)] : Rational(); }
  bool is_zero() const;
  /// Lowest k with a nonzero coefficient.
  std::optional<int> lowest_order() const;
  /// Multiplies by u^k and truncates at `order`.
  Series shifted(int k, int order) const;

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rational& r);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Rational& r) { return a *= r; }
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b);

  std::string str() const;

private:
  std::vector<Rational> c_;
};

/// K^k D^d P^p.
struct Mono {
  int k = 0, d = 0, p = 0;
  auto operator<=>(const Mono&) const = default;
  std::string word() const;
  std::string str() const;
  /// Scale dimension: P has +1, K has -1, D has 0.
  int dimension() const { return p - k; }
  bool is_unit() const { return k == 0 && d == 0 && p == 0; }
};

enum class Policy { Leftmost, Rightmost };

class Deformation;
using DeformationPtr = std::shared_ptr<const Deformation>;

/// Normally ordered polynomial in K, D, P with series coefficients.
class NOPoly {
public:
  using Terms = std::map<Mono, Series>;

  NOPoly() = default;
  explicit NOPoly(DeformationPtr ctx) : ctx_(std::move(ctx)) {}
  NOPoly(DeformationPtr ctx, Terms terms);

  const DeformationPtr& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Series coeff(const Mono& m) const;
  /// Coefficient of u^k as a polynomial with constant series.
  NOPoly at_order(int k) const;
  std::optional<int> lowest_order() const;
  /// Common scale dimension of all terms (u counts -1), nullopt if mixed.
  std::optional<int> homogeneous_dimension() const;

  NOPoly operator-() const;
  NOPoly& operator+=(const NOPoly& o);
  NOPoly& operator-=(const NOPoly& o);
  NOPoly& operator*=(const Series& s);
  NOPoly& operator*=(const Rational& r);
  friend NOPoly operator+(NOPoly a, const NOPoly& b) { return a += b; }
  friend NOPoly operator-(NOPoly a, const NOPoly& b) { return a -= b; }
  friend NOPoly operator*(NOPoly a, const Series& s) { return a *= s; }
  friend NOPoly operator*(NOPoly a, const Rational& r) { return a *= r; }
  friend NOPoly operator*(const NOPoly& a, const NOPoly& b);
  friend bool operator==(const NOPoly& a, const NOPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const;

private:
  void add_term(const Mono& m, const Series& s);
  DeformationPtr ctx_;
  Terms terms_;
};

/// Element of the n-fold tensor power; multiplication is slotwise.
class TensorNOPoly {
public:
  using Key = std::vector<Mono>;
  using Terms = std::map<Key, Series>;

  TensorNOPoly() = default;
  TensorNOPoly(DeformationPtr ctx, std::size_t arity) : ctx_(std::move(ctx)), arity_(arity) {}

  const DeformationPtr& context() const { return ctx_; }
  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<int> lowest_order() const;
  std::optional<int> homogeneous_dimension() const;
  void add(const Key& k, const Series& s);

  /// a (x) b.
  static TensorNOPoly product(const NOPoly& a, const NOPoly& b);
  /// Exchanges the two slots of a 2-tensor.
  TensorNOPoly flipped() const;

  TensorNOPoly operator-() const;
  TensorNOPoly& operator+=(const TensorNOPoly& o);
  TensorNOPoly& operator-=(const TensorNOPoly& o);
  TensorNOPoly& operator*=(const Rational& r);
  friend TensorNOPoly operator+(TensorNOPoly a, const TensorNOPoly& b) { return a += b; }
  friend TensorNOPoly operator-(TensorNOPoly a, const TensorNOPoly& b) { return a -= b; }
  friend TensorNOPoly operator*(TensorNOPoly a, const Rational& r) { return a *= r; }
  friend TensorNOPoly operator*(const TensorNOPoly& a, const TensorNOPoly& b);
  friend bool operator==(const TensorNOPoly& a, const TensorNOPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const;

private:
  DeformationPtr ctx_;
  std::size_t arity_ = 2;
  Terms terms_;
};

class StructuralError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The deformed enveloping algebra at truncation order N, with its rewriting
/// rules. Memoizes straightening; one instance must not be shared between threads.
class Deformation : public std::enable_shared_from_this<Deformation> {
public:
  /// `classical_dp` replaces M sinh(P/M) by P in [D,P] (mutation of the relations).
  static DeformationPtr create(int order, Policy policy = Policy::Leftmost, bool classical_dp = false);

  int order() const { return order_; }
  Policy policy() const { return policy_; }
  bool classical_dp() const { return classical_dp_; }

  /// Rewrites a word over {K, D, P} into normal order K, D, P.
  NOPoly straighten(const std::string& word) const;
  NOPoly product(const Mono& a, const Mono& b) const;

  NOPoly one() const;
  NOPoly constant(const Series& s) const;
  NOPoly monomial(const Mono& m) const;
  NOPoly generator(char g) const;
  Series u_power(int k, Rational c = Rational(1)) const { return Series::monomial(order_, k, std::move(c)); }

  /// Coefficients a_n of f(X) = sum a_n X^n for the series used by the relations.
  std::vector<Series> sigma_coeffs() const;  ///< M sinh(X/M), or X for the mutation
  std::vector<Series> sinh_coeffs() const;   ///< sinh(u X)
  std::vector<Series> cosh_coeffs() const;   ///< cosh(u X)
  std::vector<Series> exp_coeffs(int sign) const;  ///< exp(sign u X)

  TensorNOPoly coproduct(const NOPoly& x) const;
  TensorNOPoly coproduct(const Mono& m) const;
  Series counit(const NOPoly& x) const;

private:
  Deformation(int order, Policy policy, bool classical_dp);
  struct Rewrite {
    int k;        // power of u
    Rational c;
    std::string word;
  };
  std::vector<Rewrite> rules(char left, char right) const;
  const NOPoly::Terms& straighten_budget(const std::string& word, int budget) const;

  int order_;
  Policy policy_;
  bool classical_dp_;
  mutable std::map<std::pair<std::string, int>, NOPoly::Terms> memo_;
  mutable std::map<Mono, TensorNOPoly> coproduct_memo_;
};

/// f(x) = sum_n a_n x^n with x in any ring built on a Deformation.
template <class T>
T apply_series(const std::vector<Series>& a, const T& x, const T& one) {
  T acc = one * Rational(0);
  T power = one;
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (n > 0) power = power * x;
    if (!a[n].is_zero()) acc += scaled(power, a[n]);
  }
  return acc;
}

NOPoly scaled(const NOPoly& x, const Series& s);
TensorNOPoly scaled(const TensorNOPoly& x, const Series& s);

/// The three defining relations as elements that must vanish:
/// [D,P] - sigma(P), [P,K] - 2D, [D,K] + (K cosh + cosh K)/2.
template <class T>
std::vector<T> relation_residuals(const Deformation& A, const T& P, const T& D, const T& K, const T& one) {
  const T c = apply_series(A.cosh_coeffs(), P, one);
  T r3 = D * K - K * D + (K * c + c * K) * Rational(1, 2);
  return {D * P - P * D - apply_series(A.sigma_coeffs(), P, one), P * K - K * P - D * Rational(2), r3};
}

inline const std::vector<std::string>& relation_names() {
  static const std::vector<std::string> names{"[D,P]", "[P,K]", "[D,K]"};
  return names;
}

struct Antipode {
  NOPoly P, D, K;
  NOPoly apply(const Mono& m) const;
  NOPoly apply(const NOPoly& x) const;
};

enum class AntipodeRoute { LeftAxiom, RightAxiom };

/// Solves m(S (x) id)Delta = eps (left) or m(id (x) S)Delta = eps (right) order
/// by order in u. Throws StructuralError if the leading coefficient is not invertible.
Antipode derive_antipode(const DeformationPtr& A, AntipodeRoute route);

/// The tabulated antipode: S(P) = -P, S(K) = -K - u(D - sinh uP), S(D) = -D - 2 sinh uP.
Antipode printed_antipode(const DeformationPtr& A);

/// Lowest u-order at which two polynomials differ and the difference there.
std::optional<std::pair<int, NOPoly>> first_difference(const NOPoly& a, const NOPoly& b);

std::vector<Check> check_hopf_algebra(int order);
std::vector<Check> check_antipode(int order, bool compare_printed);
std::vector<Check> check_mutation(int order);
std::vector<Check> check_confluence(int order, std::size_t max_length);
std::vector<Check> check_dimensions(int order);

/// The u^1 part of (Delta - Delta^op)/2 on a generator, over the classical
/// basis P, D, K of sl(2).
TwoTensor first_order_cocommutator(char generator, int order = 2);
std::vector<Check> check_first_order_cocommutator();
std::vector<Check> swap_map_check();

/// Commutative polynomial in P1, P2, P+, P- with series coefficients.
struct CommPoly {
  std::map<std::array<int, 4>, Series> terms;
  std::string str() const;
};
/// C2 = P1^2 + P2^2 - M P_- sinh(P_+/M), expanded in u.
CommPoly casimir(int order);
std::vector<Check> casimir_classical_limit(int order);

}  // namespace qconf::hopf
