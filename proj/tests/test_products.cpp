#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "semifield/gf.hpp"
#include "semifield/products.hpp"

using namespace semifield;

namespace {

// Exact no-zero-divisor verdict for a bi-additive product: for every fixed
// right operand v != 0 the left translation is linear, so it is injective iff
// its matrix on the basis has full rank over F_p.
bool no_zero_divisors_by_rank(const Product& P) {
  const PrimeGroup& G = P.domain();
  std::uint32_t p = G.p(), dim = G.dim();
  for (elem_t v = 1; v < P.size(); ++v) {
    // columns of x -> x*v on the basis
    std::vector<std::vector<std::uint32_t>> mat(dim, std::vector<std::uint32_t>(dim));
    for (std::uint32_t j = 0; j < dim; ++j) {
      elem_t w = P.eval(G.basis(j), v);
      for (std::uint32_t i = 0; i < dim; ++i) mat[i][j] = G.digit(w, i);
    }
    // rank over F_p
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < dim && rank < dim; ++col) {
      std::uint32_t piv = rank;
      while (piv < dim && mat[piv][col] == 0) ++piv;
      if (piv == dim) continue;
      std::swap(mat[rank], mat[piv]);
      std::uint32_t inv = poly::inv_mod_p(mat[rank][col], p);
      for (std::uint32_t i = 0; i < dim; ++i)
        if (i != rank && mat[i][col]) {
          std::uint32_t f = static_cast<std::uint32_t>(
              std::uint64_t(mat[i][col]) * inv % p);
          for (std::uint32_t j2 = col; j2 < dim; ++j2)
            mat[i][j2] = (mat[i][j2] + std::uint64_t(p - f) * mat[rank][j2]) % p;
        }
      ++rank;
    }
    if (rank < dim) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("albert product basics") {
  Field F(3, 3);
  for (elem_t x = 0; x < F.q(); ++x) CHECK(albert_product(F, 1, x, 0) == 0);
  CHECK(albert_product(F, 1, 1, 1) == 2);
  for (elem_t x = 0; x < F.q(); ++x)
    for (elem_t y = 0; y < F.q(); ++y)
      REQUIRE(albert_product(F, 1, x, y) == albert_product(F, 1, y, x));
  // k = 0 degenerates to 2xy
  for (elem_t x = 0; x < F.q(); ++x)
    for (elem_t y = 0; y < F.q(); ++y)
      REQUIRE(albert_product(F, 0, x, y) == F.add(F.mul(x, y), F.mul(x, y)));
}

TEST_CASE("two-parameter spec validation") {
  Field F27(3, 3);
  Field F9(3, 2);
  Field F16(2, 4);
  CHECK_THROWS_AS(TwoParamSpec(F9, 1, 0), std::invalid_argument);   // m/gcd even
  CHECK_THROWS_AS(TwoParamSpec(F27, 2, 0), std::invalid_argument);  // k > m/2
  CHECK_THROWS_AS(TwoParamSpec(F27, 1, 2), std::invalid_argument);  // r > m/2
  CHECK_THROWS_AS(TwoParamSpec(F27, 1, 0, 1), std::invalid_argument);  // alpha square
  CHECK_THROWS_AS(TwoParamSpec(F27, 1, 0, 0), std::invalid_argument);  // alpha zero
  CHECK_THROWS_AS(TwoParamSpec(F16, 1, 0), std::invalid_argument);     // p = 2
  TwoParamSpec ok(F27, 1, 1);
  CHECK(ok.alpha == 2);  // least non-square of F_3 inside F_27
  CHECK(ok.l == 1);
}

TEST_CASE("two-parameter product substitution values") {
  Field F(3, 3);
  TwoParamProduct P(TwoParamSpec(F, 1, 0, 2));
  CHECK(P.eval_pair({1, 0}, {1, 0}) == Pair{2, 0});
  for (elem_t u = 0; u < P.size(); ++u) {
    CHECK(P.eval(u, 0) == 0);
    CHECK(P.eval(0, u) == 0);
  }
}

TEST_CASE("two-parameter products at q = 27 are commutative presemifields") {
  Field F(3, 3);
  for (std::uint32_t r : {0u, 1u}) {
    TwoParamProduct P(TwoParamSpec(F, 1, r, 2));
    AxiomReport rep = check_axioms(P);
    CHECK(rep.exhaustive);
    CHECK(rep.distributive());
    CHECK(rep.commutative);
    CHECK(rep.no_zero_divisors);
    CHECK_FALSE(rep.unit.has_value());
  }
}

TEST_CASE("no zero divisors for all valid specs at q = 243") {
  Field F(3, 5);
  for (std::uint32_t k : {1u, 2u})
    for (std::uint32_t r : {0u, 1u, 2u}) {
      TwoParamProduct P(TwoParamSpec(F, k, r));
      REQUIRE(no_zero_divisors_by_rank(P));
    }
}

TEST_CASE("L map is an additive bijection with the stated values") {
  Field F(3, 3);
  TwoParamProduct P(TwoParamSpec(F, 1, 0, 2));
  CHECK(P.L_map({0, 0}) == Pair{0, 0});
  CHECK(P.L_map({1, 0}) == Pair{2, 0});
  for (elem_t t = 0; t < P.size(); ++t) {
    Pair u = pair_of(F, t);
    REQUIRE(P.L_inverse(P.L_map(u)) == u);
    // L(u) = u * (1,0)
    REQUIRE(P.eval_pair(u, {1, 0}) == P.L_map(u));
  }
  const PrimeGroup& G = P.domain();
  for (elem_t u = 0; u < P.size(); ++u)
    for (std::uint32_t i = 0; i < G.dim(); ++i) {
      elem_t v = G.basis(i);
      elem_t lu = pair_index(F, P.L_map(pair_of(F, u)));
      elem_t lv = pair_index(F, P.L_map(pair_of(F, v)));
      elem_t lsum = pair_index(F, P.L_map(pair_of(F, G.add(u, v))));
      REQUIRE(lsum == G.add(lu, lv));
    }
}

TEST_CASE("semifield lift has the promised unit") {
  Field F(3, 3);
  TwoParamProduct P(TwoParamSpec(F, 1, 1, 2));
  elem_t a = pair_index(F, {1, 0});
  StarSemifield S(P, a);
  CHECK(S.unit() == P.eval(a, a));
  for (elem_t z = 0; z < S.size(); ++z) {
    REQUIRE(S.eval(S.unit(), z) == z);
    REQUIRE(S.eval(z, S.unit()) == z);
  }
}

TEST_CASE("semifield lift at a = (1,0) matches the L-map construction") {
  Field F(3, 3);
  for (std::uint32_t r : {0u, 1u}) {
    TwoParamProduct P(TwoParamSpec(F, 1, r, 2));
    StarSemifield S(P, pair_index(F, {1, 0}));
    for (elem_t x = 0; x < P.size(); ++x)
      for (elem_t y = 0; y < P.size(); ++y) {
        elem_t lx = pair_index(F, P.L_map(pair_of(F, x)));
        elem_t ly = pair_index(F, P.L_map(pair_of(F, y)));
        REQUIRE(S.eval(lx, ly) == P.eval(x, y));
      }
  }
}

TEST_CASE("semifield lift of a finite field at a = 1 is the field itself") {
  Field F(3, 3);
  FieldProduct P(F);
  StarSemifield S(P, 1);
  CHECK(S.unit() == 1);
  for (elem_t x = 0; x < F.q(); ++x)
    for (elem_t y = 0; y < F.q(); ++y) REQUIRE(S.eval(x, y) == F.mul(x, y));
}

TEST_CASE("semifield lift rejects bad inputs") {
  Field F(3, 1);
  FieldProduct P(F);
  CHECK_THROWS_AS(StarSemifield(P, 0), std::invalid_argument);
  // crafted table with zero divisors: translations cannot be bijective
  std::vector<elem_t> zeros(9, 0);
  ExplicitTableProduct Z(3, 1, zeros);
  CHECK_THROWS_AS(StarSemifield(Z, 1), std::invalid_argument);
}

TEST_CASE("diamond product: basics and symmetry at q = 27") {
  Field F(3, 3);
  DiamondSpec spec(TwoParamSpec(F, 1, 0, 2), 1);
  DiamondProduct D(spec);
  for (elem_t u = 0; u < D.size(); ++u) {
    CHECK(D.eval(u, 0) == 0);
    CHECK(D.eval(0, u) == 0);
  }
  for (elem_t u = 0; u < D.size(); ++u)
    for (elem_t v = u + 1; v < D.size(); ++v) REQUIRE(D.eval(u, v) == D.eval(v, u));
}

TEST_CASE("diamond product is a commutative presemifield at q = 27") {
  Field F(3, 3);
  DiamondProduct D(DiamondSpec(TwoParamSpec(F, 1, 0, 2), 1));
  AxiomReport rep = check_axioms(D);
  CHECK(rep.distributive());
  CHECK(rep.commutative);
  CHECK(rep.no_zero_divisors);
}

TEST_CASE("diamond product agrees with its translation-form derivation") {
  // (a,b) <> (e,f) = L^{-1}((a,b) * (c,1)) * (e,f)
  Field F(3, 3);
  TwoParamSpec base(F, 1, 0, 2);
  TwoParamProduct P(base);
  for (elem_t c : {1u, 2u}) {
    DiamondProduct D(DiamondSpec(base, c));
    elem_t beta = pair_index(F, {c, 1});
    for (elem_t u = 0; u < D.size(); ++u) {
      elem_t t = pair_index(F, P.L_inverse(pair_of(F, P.eval(u, beta))));
      for (elem_t v = 0; v < D.size(); ++v) REQUIRE(D.eval(u, v) == P.eval(t, v));
    }
  }
}

TEST_CASE("diamond spec validation and non-square shift flag") {
  Field F(3, 3);
  TwoParamSpec base(F, 1, 0, 2);
  CHECK_THROWS_AS(DiamondSpec(TwoParamSpec(F, 1, 1, 2), 1), std::invalid_argument);
  DiamondSpec d1(base, 1);
  // c^2 - alpha = 1 - 2 = 2, a non-square in F_27
  CHECK(d1.nonsquare_shift);
  DiamondSpec d0(base, 0);
  // c^2 - alpha = -2 = 1 is a square
  CHECK_FALSE(d0.nonsquare_shift);
}

TEST_CASE("B-H spec defaults and validation") {
  Field K(3, 4);  // F_81 = F_{q^2}, q = 9, m = 2
  BhSpec spec = make_bh_spec(K, 1);
  CHECK(spec.m == 2);
  CHECK(K.frobenius(spec.omega, 2) != spec.omega);
  CHECK_FALSE(K.is_square(spec.beta));
  CHECK(bh_eval(spec, 0) == 0);
  for (elem_t x = 0; x < K.q(); ++x) REQUIRE(bh_eval(spec, K.neg(x)) == bh_eval(spec, x));

  CHECK_THROWS_AS(make_bh_spec(K, 2), std::invalid_argument);  // v2(s) == v2(m)
  CHECK_THROWS_AS(make_bh_spec(K, 1, std::nullopt, 1), std::invalid_argument);  // beta square
}

TEST_CASE("B-H pair product substitution values") {
  Field K(5, 2);  // q = 5, m = 1, s = 0
  Field Fm(5, 1);
  BhSpec spec = make_bh_spec(K, 0);
  CHECK(K.frobenius(spec.omega, 1) == K.neg(spec.omega));
  BhPairProduct PP = make_bh_pair_product(spec, Fm);
  CHECK(PP.eval_pair({1, 0}, {1, 0}) == Pair{2, 0});
  for (elem_t u = 0; u < PP.size(); ++u) CHECK(PP.eval(u, 0) == 0);
}

TEST_CASE("axiom checker on a finite field") {
  Field F(3, 2);
  FieldProduct P(F);
  AxiomReport rep = check_axioms(P);
  CHECK(rep.exhaustive);
  CHECK(rep.distributive());
  CHECK(rep.commutative);
  CHECK(rep.no_zero_divisors);
  REQUIRE(rep.unit.has_value());
  CHECK(*rep.unit == 1);
}

TEST_CASE("axiom checker flags a crafted zero divisor") {
  Field F(3, 1);
  FieldProduct base(F);
  std::vector<elem_t> table(9);
  for (elem_t x = 0; x < 3; ++x)
    for (elem_t y = 0; y < 3; ++y) table[x * 3 + y] = base.eval(x, y);
  table[1 * 3 + 2] = 0;  // 1 * 2 := 0
  ExplicitTableProduct P(3, 1, table);
  AxiomReport rep = check_axioms(P);
  CHECK_FALSE(rep.no_zero_divisors);
}

TEST_CASE("dickson reading k = 0 is a commutative presemifield") {
  Field F(3, 3);
  TwoParamSpec spec(F, 0, 1);  // l = m, alpha = least non-square of F_27
  CHECK(spec.l == 3);
  TwoParamProduct P(spec);
  AxiomReport rep = check_axioms(P);
  CHECK(rep.distributive());
  CHECK(rep.commutative);
  CHECK(rep.no_zero_divisors);
  CHECK_FALSE(rep.unit.has_value());
}
