#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "semifield/gf.hpp"
#include "semifield/nuclei.hpp"
#include "semifield/products.hpp"

using namespace semifield;

namespace {

// Independent oracle: nucleus by the plain triple loop, no sampling, no
// hoisting. Only usable on small domains.
std::vector<elem_t> brute_nucleus(const Product& S, NucleusKind kind) {
  std::vector<elem_t> out;
  const elem_t n = S.size();
  for (elem_t a = 0; a < n; ++a) {
    bool ok = true;
    for (elem_t x = 0; x < n && ok; ++x)
      for (elem_t y = 0; y < n && ok; ++y) {
        switch (kind) {
          case NucleusKind::left:
            ok = S.eval(S.eval(a, x), y) == S.eval(a, S.eval(x, y));
            break;
          case NucleusKind::middle:
            ok = S.eval(S.eval(x, a), y) == S.eval(x, S.eval(a, y));
            break;
          case NucleusKind::right:
            ok = S.eval(S.eval(x, y), a) == S.eval(x, S.eval(y, a));
            break;
        }
      }
    if (ok) out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("nucleus of a finite field is everything") {
  Field F(3, 3);
  FieldProduct P(F);
  StarSemifield S(P, 1);
  auto mid = nucleus_set(S, NucleusKind::middle);
  CHECK(mid.size() == 27);
  CHECK(verify_nucleus_field(S, S.unit(), mid));
}

TEST_CASE("fast nucleus agrees with the brute-force oracle") {
  // Dickson reading on F_9 pairs: domain of 81 elements
  Field F(3, 2);
  TwoParamProduct P(TwoParamSpec(F, 0, 1));
  StarSemifield S(P, pair_index(F, {1, 0}));
  for (auto kind : {NucleusKind::left, NucleusKind::middle, NucleusKind::right}) {
    auto fast = nucleus_set(S, kind, /*seed=*/0);
    auto slow = brute_nucleus(S, kind);
    REQUIRE(fast == slow);
  }
}

TEST_CASE("two-parameter nuclei at p=3, m=3, k=1") {
  Field F(3, 3);
  {
    NucleusReport rep = nuclei_of_two_param(TwoParamProduct(TwoParamSpec(F, 1, 0, 2)));
    CHECK(rep.middle.size() == 9);
    CHECK(rep.nucleus.size() == 3);
    CHECK(rep.predicted_middle == 9);
    CHECK(rep.predicted_nucleus == 3);
    CHECK(rep.left == rep.right);  // commutative semifield
    CHECK(rep.left_is_field);
    CHECK(rep.middle_is_field);
    CHECK(rep.right_is_field);
    CHECK(rep.nucleus_is_field);
  }
  {
    NucleusReport rep = nuclei_of_two_param(TwoParamProduct(TwoParamSpec(F, 1, 1, 2)));
    CHECK(rep.middle.size() == 3);
    CHECK(rep.nucleus.size() == 3);
    CHECK(rep.predicted_middle == 3);
    CHECK(rep.predicted_nucleus == 3);
    CHECK(rep.left == rep.right);
    CHECK(rep.middle_is_field);
    CHECK(rep.nucleus_is_field);
  }
}

TEST_CASE("dickson reading satisfies the same nucleus predictions") {
  Field F(3, 3);
  NucleusReport rep = nuclei_of_two_param(TwoParamProduct(TwoParamSpec(F, 0, 1)));
  CHECK(rep.predicted_middle == 27);   // p^l with l = m
  CHECK(rep.predicted_nucleus == 3);   // p^gcd(3, 0, 1)
  CHECK(rep.middle.size() == 27);
  CHECK(rep.nucleus.size() == 3);
  CHECK(rep.middle_is_field);
  CHECK(rep.nucleus_is_field);
}

TEST_CASE("verify_nucleus_field rejects non-closed sets") {
  Field F(3, 3);
  FieldProduct P(F);
  StarSemifield S(P, 1);
  // {0, 1} is not additively closed in characteristic 3
  CHECK_FALSE(verify_nucleus_field(S, S.unit(), {0, 1}));
  std::vector<elem_t> all(27);
  for (elem_t i = 0; i < 27; ++i) all[i] = i;
  CHECK(verify_nucleus_field(S, S.unit(), all));
}

TEST_CASE("nucleus result is seed independent") {
  Field F(3, 3);
  TwoParamProduct P(TwoParamSpec(F, 1, 1, 2));
  StarSemifield S(P, pair_index(F, {1, 0}));
  auto a = nucleus_set(S, NucleusKind::middle, 0);
  auto b = nucleus_set(S, NucleusKind::middle, 1);
  auto c = nucleus_set(S, NucleusKind::middle, 987654321);
  CHECK(a == b);
  CHECK(a == c);
  auto d = nucleus_set(S, NucleusKind::middle, 0, /*threads=*/4);
  CHECK(a == d);
}
