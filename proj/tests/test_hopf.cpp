#include "qconf/catalog.hpp"
#include "qconf/hopf.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace qconf;
using namespace qconf::hopf;

namespace {

Rational inv_factorial(int n) {
  Rational f(1);
  for (int k = 2; k <= n; ++k) f *= Rational(k);
  return Rational(1) / f;
}

// Naive rewriting oracle: a polynomial is a map (word, power of u) -> coefficient.
// Each step rewrites one randomly chosen inversion, so the result also checks
// that the normal form does not depend on the rewriting order.
using Poly = std::map<std::pair<std::string, int>, Rational>;

bool normal(const std::string& w) {
  static const std::string order = "KDP";
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (order.find(w[i]) > order.find(w[i + 1])) return false;
  return true;
}

Poly naive_straighten(const std::string& word, int n, std::mt19937& rng) {
  Poly todo{{{word, 0}, Rational(1)}}, done;
  while (!todo.empty()) {
    const auto [key, c] = *todo.begin();
    todo.erase(todo.begin());
    if (c.is_zero()) continue;
    const auto& [w, k] = key;
    if (normal(w)) {
      done[key] += c;
      continue;
    }
    std::vector<std::size_t> inversions;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (!normal(w.substr(i, 2))) inversions.push_back(i);
    const std::size_t i = inversions[std::uniform_int_distribution<std::size_t>(0, inversions.size() - 1)(rng)];
    const std::string pre = w.substr(0, i), post = w.substr(i + 2), pair = w.substr(i, 2);
    auto emit = [&](const std::string& mid, int du, const Rational& f) {
      if (k + du <= n) todo[{pre + mid + post, k + du}] += c * f;
    };
    if (pair == "PD") {  // PD = DP - sum u^(2m) P^(2m+1) / (2m+1)!
      emit("DP", 0, Rational(1));
      for (int m = 0; 2 * m <= n; ++m) emit(std::string(2 * m + 1, 'P'), 2 * m, -inv_factorial(2 * m + 1));
    } else if (pair == "PK") {  // PK = KP + 2D
      emit("KP", 0, Rational(1));
      emit("D", 0, Rational(2));
    } else {  // DK = KD - (K cosh uP + cosh uP K) / 2
      emit("KD", 0, Rational(1));
      for (int m = 0; 2 * m <= n; ++m) {
        const std::string p(2 * m, 'P');
        emit("K" + p, 2 * m, -inv_factorial(2 * m) / Rational(2));
        emit(p + "K", 2 * m, -inv_factorial(2 * m) / Rational(2));
      }
    }
  }
  std::erase_if(done, [](const auto& e) { return e.second.is_zero(); });
  return done;
}

Poly flatten(const NOPoly& x) {
  Poly out;
  for (const auto& [m, s] : x.terms())
    for (int k = 0; k <= s.order(); ++k)
      if (!s.coeff(k).is_zero()) out[{m.word(), k}] = s.coeff(k);
  return out;
}

std::vector<std::string> words_up_to(std::size_t len) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i].size() < len)
      for (char g : {'K', 'D', 'P'}) out.push_back(out[i] + g);
  return out;
}

std::size_t failures(const std::vector<Check>& cs) {
  std::size_t n = 0;
  for (const auto& c : cs)
    if (c.status == Status::Fail) {
      MESSAGE(c.id << ": " << c.witness);
      ++n;
    }
  return n;
}

const Check& find(const std::vector<Check>& cs, const std::string& id) {
  for (const auto& c : cs)
    if (c.id == id) return c;
  FAIL("missing check " << id);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_SUITE("hopfseries") {

TEST_CASE("series coefficients") {
  const auto A = Deformation::create(6);
  const auto sigma = A->sigma_coeffs(), sh = A->sinh_coeffs(), ch = A->cosh_coeffs();
  for (int n = 0; n <= 6; ++n) {
    CHECK(sh[n].coeff(n) == (n % 2 ? inv_factorial(n) : Rational(0)));
    CHECK(ch[n].coeff(n) == (n % 2 ? Rational(0) : inv_factorial(n)));
  }
  // M sinh(P/M) = P + u^2 P^3/6 + u^4 P^5/120 + ...
  CHECK(sigma[1].coeff(0) == Rational(1));
  CHECK(sigma[3].coeff(2) == Rational(1, 6));
  CHECK(sigma[5].coeff(4) == Rational(1, 120));
  CHECK(sigma[2].is_zero());
}

TEST_CASE("straightening matches the naive rewriting oracle") {
  std::mt19937 rng(43);
  for (int n : {0, 2, 4}) {
    const auto A = Deformation::create(n);
    for (const auto& w : words_up_to(4)) {
      INFO("word " << w << " at N=" << n);
      CHECK(flatten(A->straighten(w)) == naive_straighten(w, n, rng));
    }
  }
}

TEST_CASE("classical PBW limit") {
  const auto A = Deformation::create(0);
  // [D,P] = P, [P,K] = 2D, [D,K] = -K in the undeformed algebra.
  CHECK(A->straighten("PD") == A->straighten("DP") - A->straighten("P"));
  CHECK(A->straighten("PK") == A->straighten("KP") + A->straighten("D") * Rational(2));
  CHECK(A->straighten("DK") == A->straighten("KD") - A->straighten("K"));
}

TEST_CASE("hopf.straighten.PD") {
  const auto A = Deformation::create(6);
  const NOPoly P = A->generator('P');
  const NOPoly expected = A->straighten("DP") - apply_series(A->sigma_coeffs(), P, A->one());
  CHECK(A->straighten("PD") == expected);
}

TEST_CASE("product is associative on random monomials") {
  const auto A = Deformation::create(4);
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> e(0, 2);
  for (int k = 0; k < 20; ++k) {
    const NOPoly a = A->monomial({e(rng), e(rng), e(rng)}), b = A->monomial({e(rng), e(rng), e(rng)}),
                 c = A->monomial({e(rng), e(rng), e(rng)});
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("leftmost and rightmost policies agree") {
  const auto L = Deformation::create(4, Policy::Leftmost), R = Deformation::create(4, Policy::Rightmost);
  for (const auto& w : words_up_to(4)) CHECK(L->straighten(w).terms() == R->straighten(w).terms());
}

TEST_CASE("straightening preserves scale dimension") {
  const auto A = Deformation::create(6);
  for (const auto& w : words_up_to(4)) {
    const NOPoly x = A->straighten(w);
    if (x.is_zero()) continue;
    int d = 0;
    for (char g : w) d += g == 'P' ? 1 : g == 'K' ? -1 : 0;
    CHECK(x.homogeneous_dimension() == d);
  }
}

TEST_CASE("coproduct of generators") {
  const auto A = Deformation::create(6);
  const NOPoly P = A->generator('P'), D = A->generator('D'), one = A->one();
  CHECK(A->coproduct(P) == TensorNOPoly::product(P, one) + TensorNOPoly::product(one, P));
  const NOPoly em = apply_series(A->exp_coeffs(-1), P, one), ep = apply_series(A->exp_coeffs(1), P, one);
  CHECK(A->coproduct(D) == TensorNOPoly::product(em, D) + TensorNOPoly::product(D, ep));
  CHECK(A->counit(P).is_zero());
  CHECK(A->counit(D).is_zero());
  CHECK(A->counit(one) == Series(6, Rational(1)));
}

TEST_CASE("hopf.axioms") { CHECK(failures(check_hopf_algebra(6)) == 0); }

TEST_CASE("hopf.antipode") {
  const auto A = Deformation::create(6);
  const Antipode left = derive_antipode(A, AntipodeRoute::LeftAxiom), right = derive_antipode(A, AntipodeRoute::RightAxiom);
  CHECK(left.P == right.P);
  CHECK(left.D == right.D);
  CHECK(left.K == right.K);
  const NOPoly P = A->generator('P'), D = A->generator('D'), one = A->one();
  CHECK(left.P == -P);
  CHECK(left.D == -D + apply_series(A->sinh_coeffs(), P, one));

  const auto checks = check_antipode(6, true);
  CHECK(failures(checks) == 0);
  CHECK(find(checks, "hopf.antipode.tabulated.S_P").status == Status::Pass);
  const Check& printed = find(checks, "hopf.antipode.tabulated");
  CHECK(printed.status == Status::RecordedDiscrepancy);
  CHECK(printed.witness.find("S(D)") != std::string::npos);
  CHECK(printed.witness.find("S(K)") != std::string::npos);
}

TEST_CASE("hopf.antipode.tabulated.first_difference") {
  const auto A = Deformation::create(6);
  const Antipode derived = derive_antipode(A, AntipodeRoute::LeftAxiom), printed = printed_antipode(A);
  CHECK_FALSE(first_difference(derived.P, printed.P).has_value());
  const auto d = first_difference(derived.D, printed.D);
  REQUIRE(d.has_value());
  CHECK(d->first == 1);
  const auto k = first_difference(derived.K, printed.K);
  REQUIRE(k.has_value());
  CHECK(k->first == 1);
}

TEST_CASE("hopf.mutation.classical_DP") {
  const auto checks = check_mutation(6);
  CHECK(failures(checks) == 0);
  const auto A = Deformation::create(6, Policy::Leftmost, true);
  const auto one2 = TensorNOPoly::product(A->one(), A->one());
  const auto res = relation_residuals(*A, A->coproduct(A->generator('P')), A->coproduct(A->generator('D')),
                                      A->coproduct(A->generator('K')), one2);
  CHECK(res[0].lowest_order() == 2);
}

TEST_CASE("hopf.cocommutator") {
  const auto g = sl2().physical.algebra;
  const TwoTensor r = wedge((*g)["D"], (*g)["P"]);
  for (char x : {'P', 'D', 'K'}) CHECK(first_order_cocommutator(x) == ad_action((*g)[std::string(1, x)], r));
  CHECK(first_order_cocommutator('P').is_zero());
}

TEST_CASE("hopf.confluence and dimensions") {
  CHECK(failures(check_confluence(6, 4)) == 0);
  CHECK(failures(check_dimensions(6)) == 0);
}

TEST_CASE("casimir expansion") {
  const CommPoly c = casimir(6);
  // -M P_- sinh(P_+/M) contributes -u^(2m) P_- P_+^(2m+1) / (2m+1)!.
  for (int m = 0; 2 * m <= 6; ++m) {
    const std::array<int, 4> e{0, 0, 2 * m + 1, 1};
    REQUIRE(c.terms.count(e));
    CHECK(c.terms.at(e).coeff(2 * m) == -inv_factorial(2 * m + 1));
  }
  CHECK(failures(casimir_classical_limit(6)) == 0);
}

}
