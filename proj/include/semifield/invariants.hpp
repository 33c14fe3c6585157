#pragma once

// Isotopy/CCZ invariant bundles, the canonical (k, r) parameter catalog with
// the counting formulas, exponent-class reduction, and the invariant-based
// distinguisher.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semifield/base.hpp"
#include "semifield/gamma.hpp"
#include "semifield/gf.hpp"
#include "semifield/nuclei.hpp"
#include "semifield/products.hpp"
#include "semifield/vecfn.hpp"

namespace semifield {

// Least s in [0, m/2] such that p^k + 1 = p^u (p^s + 1) mod p^m - 1 for some
// u; exponents in that relation index isotopic members of the family.
inline std::uint32_t exponent_class(std::uint32_t p, std::uint32_t m, std::uint32_t k) {
  if (k == 0 || k >= m) throw std::invalid_argument("exponent_class: need 1 <= k < m");
  std::uint64_t M = ipow(p, m) - 1;
  std::uint64_t lhs = (ipow(p, k) + 1) % M;
  for (std::uint32_t s = 0; s <= m / 2; ++s) {
    std::uint64_t base = (ipow(p, s) + 1) % M;
    std::uint64_t cur = base;
    for (std::uint32_t u = 0; u < m; ++u) {
      if (cur == lhs) return s;
      cur = (cur * p) % M;
    }
  }
  throw std::logic_error("exponent_class: no representative found");
}

// Counting formulas: with m = 2^e mu (mu odd), the family gives
// floor(mu/2) * ceil(m/2) non-isotopic semifields and
// floor(mu/2) * (ceil(m/2) + 1) inequivalent planar functions.
inline std::pair<std::uint64_t, std::uint64_t> count_classes(std::uint32_t /*p*/,
                                                             std::uint32_t m) {
  std::uint32_t mu = m;
  while (mu % 2 == 0) mu /= 2;
  std::uint64_t semifields = std::uint64_t(mu / 2) * ((m + 1) / 2);
  std::uint64_t planar = std::uint64_t(mu / 2) * ((m + 1) / 2 + 1);
  return {semifields, planar};
}

struct ClassCatalog {
  std::uint32_t p = 0, m = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // canonical (k, r)
  std::uint64_t raw_count = 0;
  std::uint64_t formula_semifields = 0;
  std::uint64_t formula_planar = 0;
  bool mismatch = false;
};

// All (k, r) in the declared ranges with m/gcd(m,k) odd, k reduced to its
// exponent class. A raw count differing from the closed formula is flagged,
// never reconciled.
inline ClassCatalog enumerate_catalog(std::uint32_t p, std::uint32_t m) {
  ClassCatalog cat;
  cat.p = p;
  cat.m = m;
  for (std::uint32_t k = 1; k <= m / 2; ++k) {
    if ((m / std::gcd(m, k)) % 2 == 0) continue;
    std::uint32_t kc = exponent_class(p, m, k);
    for (std::uint32_t r = 0; r <= m / 2; ++r) {
      std::pair<std::uint32_t, std::uint32_t> pr{kc, r};
      bool dup = false;
      for (const auto& q : cat.pairs)
        if (q == pr) {
          dup = true;
          break;
        }
      if (!dup) cat.pairs.push_back(pr);
    }
  }
  cat.raw_count = cat.pairs.size();
  auto [sf, pf] = count_classes(p, m);
  cat.formula_semifields = sf;
  cat.formula_planar = pf;
  cat.mismatch = cat.raw_count != sf;
  return cat;
}

struct InvariantReport {
  std::string family;
  std::uint32_t p = 0;
  std::uint32_t dim = 0;  // dimension of the function domain over F_p
  std::map<std::string, std::int64_t> params;
  std::vector<std::uint32_t> modulus;
  std::optional<bool> planar;
  std::optional<bool> apn;
  std::optional<AxiomReport> axioms;
  std::map<std::uint32_t, std::uint64_t> spectrum;
  std::optional<NucleusReport> nuclei;
  std::optional<std::uint32_t> gamma_rank;
};

inline InvariantReport invariant_report_for_two_param(const TwoParamProduct& P,
                                                      std::uint64_t seed = 0,
                                                      unsigned threads = 1) {
  const Field& F = P.field();
  const TwoParamSpec& spec = P.spec();
  InvariantReport rep;
  rep.family = spec.dickson() ? "dickson" : "two-param";
  rep.p = F.p();
  rep.dim = 2 * F.m();
  rep.params = {{"m", F.m()}, {"k", spec.k}, {"r", spec.r}, {"alpha", spec.alpha}};
  rep.modulus = F.spec().modulus;
  VecFn f = two_param_planar_fn(spec);
  rep.planar = is_planar(f, threads);
  rep.spectrum = diff_spectrum(f);
  rep.axioms = check_axioms(P);
  rep.nuclei = nuclei_of_two_param(P, seed, threads);
  return rep;
}

inline InvariantReport invariant_report_for_fn(const VecFn& f, std::string family,
                                               bool with_gamma = false,
                                               unsigned threads = 1) {
  InvariantReport rep;
  rep.family = std::move(family);
  rep.p = f.p;
  rep.dim = f.dim;
  if (f.p == 2) {
    rep.apn = is_apn(f, threads);
    if (with_gamma && 2 * f.dim <= 16) rep.gamma_rank = gamma_rank(f, threads);
  } else {
    rep.planar = is_planar(f, threads);
  }
  rep.spectrum = diff_spectrum(f);
  return rep;
}

struct DistinguishVerdict {
  bool provably_distinct = false;
  std::string witness;  // the invariant that separates the two
};

// Invariant-based separation. A Distinct verdict is a proof; the opposite
// verdict only says these invariants do not separate the inputs.
inline DistinguishVerdict distinguish(const InvariantReport& A, const InvariantReport& B) {
  if (A.p != B.p || A.dim != B.dim)
    throw std::invalid_argument("distinguish: reports live on different domains");
  DistinguishVerdict v;
  auto differ = [&](const char* what) {
    v.provably_distinct = true;
    v.witness = what;
  };
  if (A.planar && B.planar && *A.planar != *B.planar) {
    differ("planarity");
    return v;
  }
  if (A.apn && B.apn && *A.apn != *B.apn) {
    differ("apn");
    return v;
  }
  if (!A.spectrum.empty() && !B.spectrum.empty() && A.spectrum != B.spectrum) {
    differ("differential spectrum");
    return v;
  }
  if (A.nuclei && B.nuclei) {
    if (A.nuclei->middle.size() != B.nuclei->middle.size()) {
      differ("middle nucleus size");
      return v;
    }
    if (A.nuclei->left.size() != B.nuclei->left.size()) {
      differ("left nucleus size");
      return v;
    }
    if (A.nuclei->right.size() != B.nuclei->right.size()) {
      differ("right nucleus size");
      return v;
    }
    if (A.nuclei->nucleus.size() != B.nuclei->nucleus.size()) {
      differ("nucleus size");
      return v;
    }
  }
  if (A.gamma_rank && B.gamma_rank && *A.gamma_rank != *B.gamma_rank) {
    differ("gamma rank");
    return v;
  }
  return v;
}

}  // namespace semifield
