#pragma once

// Exhaustive left/middle/right nucleus computation for a semifield given as a
// Product with unit, plus the closed-form predictions for the two-parameter
// family. Candidates go through a seeded random rejection phase first; the
// survivors are then confirmed against every (x, y) pair, so the result is
// exact regardless of seed.

#include <algorithm>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "semifield/base.hpp"
#include "semifield/products.hpp"

namespace semifield {

enum class NucleusKind { left, middle, right };

namespace detail {

inline bool associates(const Product& S, NucleusKind kind, elem_t a, elem_t x, elem_t y) {
  switch (kind) {
    case NucleusKind::left:
      return S.eval(S.eval(a, x), y) == S.eval(a, S.eval(x, y));
    case NucleusKind::middle:
      return S.eval(S.eval(x, a), y) == S.eval(x, S.eval(a, y));
    case NucleusKind::right:
      return S.eval(S.eval(x, y), a) == S.eval(x, S.eval(y, a));
  }
  return false;
}

// Full confirmation of one candidate; O(N^2) with the translation by a
// hoisted out of the inner loop.
inline bool confirm(const Product& S, NucleusKind kind, elem_t a) {
  const elem_t n = S.size();
  std::vector<elem_t> ta(n);
  switch (kind) {
    case NucleusKind::left:
      for (elem_t x = 0; x < n; ++x) ta[x] = S.eval(a, x);  // a*x
      for (elem_t x = 0; x < n; ++x)
        for (elem_t y = 0; y < n; ++y)
          if (S.eval(ta[x], y) != S.eval(a, S.eval(x, y))) return false;
      return true;
    case NucleusKind::middle: {
      std::vector<elem_t> ay(n);
      for (elem_t x = 0; x < n; ++x) ta[x] = S.eval(x, a);  // x*a
      for (elem_t y = 0; y < n; ++y) ay[y] = S.eval(a, y);  // a*y
      for (elem_t x = 0; x < n; ++x)
        for (elem_t y = 0; y < n; ++y)
          if (S.eval(ta[x], y) != S.eval(x, ay[y])) return false;
      return true;
    }
    case NucleusKind::right:
      for (elem_t y = 0; y < n; ++y) ta[y] = S.eval(y, a);  // y*a
      for (elem_t x = 0; x < n; ++x)
        for (elem_t y = 0; y < n; ++y)
          if (S.eval(S.eval(x, y), a) != S.eval(x, ta[y])) return false;
      return true;
  }
  return false;
}

}  // namespace detail

// Exhaustive bi-additivity check of a product: additivity in each slot is
// verified against every basis increment over the whole domain, which spans
// the full statement since every element is a sum of basis elements.
inline bool product_is_biadditive(const Product& S, unsigned threads = 1) {
  const PrimeGroup& G = S.domain();
  const elem_t n = S.size();
  auto worker_ok = [&](elem_t begin, elem_t step) {
    std::vector<elem_t> line(n);
    for (elem_t y = begin; y < n; y += step) {
      for (elem_t x = 0; x < n; ++x) line[x] = S.eval(x, y);
      for (std::uint32_t i = 0; i < G.dim(); ++i) {
        elem_t e = G.basis(i), le = line[e];
        for (elem_t x = 0; x < n; ++x)
          if (line[G.add(x, e)] != G.add(line[x], le)) return false;
      }
      for (elem_t x = 0; x < n; ++x) line[x] = S.eval(y, x);  // y fixed on the left
      for (std::uint32_t i = 0; i < G.dim(); ++i) {
        elem_t e = G.basis(i), le = line[e];
        for (elem_t x = 0; x < n; ++x)
          if (line[G.add(x, e)] != G.add(line[x], le)) return false;
      }
    }
    return true;
  };
  if (threads <= 1) return worker_ok(0, 1);
  std::vector<char> ok(threads, 1);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] { ok[t] = worker_ok(t, threads) ? 1 : 0; });
  for (auto& th : pool) th.join();
  for (char c : ok)
    if (!c) return false;
  return true;
}

// The three associativity patterns are bilinear in (x, y) once the product is
// bi-additive, so survivors of the sampling phase can be confirmed on basis
// pairs alone. `biadditive_verified` skips the re-check when the caller has
// already established it.
inline std::vector<elem_t> nucleus_set(const Product& S, NucleusKind kind,
                                       std::uint64_t seed = 0, unsigned threads = 1,
                                       bool biadditive_verified = false,
                                       unsigned sample_rounds = 48) {
  const elem_t n = S.size();
  const PrimeGroup& G = S.domain();
  std::mt19937_64 rng(seed);
  std::vector<std::pair<elem_t, elem_t>> probes(sample_rounds);
  for (auto& pr : probes) pr = {static_cast<elem_t>(rng() % n), static_cast<elem_t>(rng() % n)};

  std::vector<elem_t> candidates;
  for (elem_t a = 0; a < n; ++a) {
    bool alive = true;
    for (const auto& [x, y] : probes)
      if (!detail::associates(S, kind, a, x, y)) {
        alive = false;
        break;
      }
    if (alive) candidates.push_back(a);
  }

  bool basis_route = n > 4096 && (biadditive_verified || product_is_biadditive(S, threads));
  auto confirm_one = [&](elem_t a) {
    if (basis_route) {
      for (std::uint32_t i = 0; i < G.dim(); ++i)
        for (std::uint32_t j = 0; j < G.dim(); ++j)
          if (!detail::associates(S, kind, a, G.basis(i), G.basis(j))) return false;
      return true;
    }
    return detail::confirm(S, kind, a);
  };

  std::vector<elem_t> out;
  if (threads <= 1 || candidates.size() < 2 || basis_route) {
    for (elem_t a : candidates)
      if (confirm_one(a)) out.push_back(a);
    return out;
  }
  std::vector<char> keep(candidates.size(), 0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < candidates.size(); i += threads)
        keep[i] = detail::confirm(S, kind, candidates[i]) ? 1 : 0;
    });
  for (auto& th : pool) th.join();
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) out.push_back(candidates[i]);
  return out;
}

inline std::vector<elem_t> intersect_sorted(const std::vector<elem_t>& a,
                                            const std::vector<elem_t>& b) {
  std::vector<elem_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Closure checks on a computed nucleus: additively closed, closed under the
// product, contains the unit, has multiplicative inverses inside, and the
// size is a power of p.
inline bool verify_nucleus_field(const Product& S, elem_t unit,
                                 const std::vector<elem_t>& elems) {
  const PrimeGroup& G = S.domain();
  std::vector<bool> in(S.size(), false);
  for (elem_t e : elems) in[e] = true;
  if (elems.empty() || !in[0] || !in[unit]) return false;
  std::uint64_t sz = elems.size();
  while (sz % G.p() == 0) sz /= G.p();
  if (sz != 1) return false;
  for (elem_t a : elems)
    for (elem_t b : elems) {
      if (!in[G.add(a, b)]) return false;
      if (!in[S.eval(a, b)]) return false;
    }
  for (elem_t a : elems) {
    if (a == 0) continue;
    bool has_inverse = false;
    for (elem_t b : elems)
      if (S.eval(a, b) == unit && S.eval(b, a) == unit) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) return false;
  }
  return true;
}

struct NucleusReport {
  std::vector<elem_t> left, middle, right, nucleus;
  bool left_is_field = false, middle_is_field = false;
  bool right_is_field = false, nucleus_is_field = false;
  std::uint64_t predicted_middle = 0;
  std::uint64_t predicted_nucleus = 0;
};

// Nuclei of the semifield lifted from a two-parameter (or Dickson-reading)
// presemifield at a = (1,0), with the family's closed-form predictions:
// |N_m| = p^(2l) for trivial sigma and p^l otherwise; |N| = p^t with
// t = gcd(m, k, r).
inline NucleusReport nuclei_of_two_param(const TwoParamProduct& P, std::uint64_t seed = 0,
                                         unsigned threads = 1) {
  const Field& F = P.field();
  StarSemifield S(P, pair_index(F, {1, 0}));
  bool biadd = S.size() > 4096 && product_is_biadditive(S, threads);
  NucleusReport rep;
  rep.left = nucleus_set(S, NucleusKind::left, seed, threads, biadd);
  rep.middle = nucleus_set(S, NucleusKind::middle, seed, threads, biadd);
  rep.right = nucleus_set(S, NucleusKind::right, seed, threads, biadd);
  rep.nucleus = intersect_sorted(intersect_sorted(rep.left, rep.middle), rep.right);
  rep.left_is_field = verify_nucleus_field(S, S.unit(), rep.left);
  rep.middle_is_field = verify_nucleus_field(S, S.unit(), rep.middle);
  rep.right_is_field = verify_nucleus_field(S, S.unit(), rep.right);
  rep.nucleus_is_field = verify_nucleus_field(S, S.unit(), rep.nucleus);
  const TwoParamSpec& spec = P.spec();
  rep.predicted_middle =
      spec.r == 0 ? ipow(F.p(), 2 * spec.l) : ipow(F.p(), spec.l);
  std::uint64_t t = std::gcd(std::gcd<std::uint64_t>(F.m(), spec.k), std::uint64_t(spec.r));
  rep.predicted_nucleus = ipow(F.p(), static_cast<std::uint32_t>(t));
  return rep;
}

}  // namespace semifield
