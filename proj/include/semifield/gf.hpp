#pragma once

// Exact arithmetic in F_{p^m} with the canonical index encoding
// (index = sum_i c_i p^i over polynomial-basis coordinates c_0..c_{m-1}).
//
// Every field is fully materialized at construction: discrete-log tables
// always (q <= 2^20), a flat q x q multiplication table additionally for
// small q, per-power Frobenius permutations, inverse table, square/cube
// classification. All operations after construction are pure table reads,
// so a Field is safely shareable across threads.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "semifield/base.hpp"

namespace semifield {

namespace poly {

// Polynomials over F_p as low-first coefficient vectors.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly mul_mod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += std::uint64_t(a[i]) * b[j];
  }
  // reduce mod the monic modulus
  std::size_t deg = mod.size() - 1;
  for (std::size_t i = acc.size(); i-- > deg;) {
    std::uint64_t c = acc[i] % p;
    if (!c) continue;
    for (std::size_t j = 0; j < deg; ++j)
      acc[i - deg + j] += c * (p - mod[j] % p);
    acc[i] = 0;
  }
  Poly r(std::min(acc.size(), deg), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint32_t>(acc[i] % p);
  trim(r);
  return r;
}

inline Poly pow_mod(Poly base, std::uint64_t e, const Poly& mod, std::uint32_t p) {
  Poly r{1};
  while (e) {
    if (e & 1) r = mul_mod(r, base, mod, p);
    base = mul_mod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::uint32_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = static_cast<std::uint32_t>(std::uint64_t(r) * b % p);
    b = static_cast<std::uint32_t>(std::uint64_t(b) * b % p);
    e >>= 1;
  }
  return r;
}

inline Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b with b made monic on the fly
    std::uint32_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
      std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(a.back()) * lead_inv % p);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::uint64_t v = a[shift + i] + std::uint64_t(c) * (p - b[i] % p);
        a[shift + i] = static_cast<std::uint32_t>(v % p);
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

inline Poly sub_mod_p(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i] % p) % p;
  trim(a);
  return a;
}

// Rabin irreducibility test for a monic polynomial of degree m over F_p.
inline bool irreducible(const Poly& f, std::uint32_t p) {
  std::size_t m = f.size() - 1;
  if (m == 0) return false;
  Poly x = mul_mod({0, 1}, {1}, f, p);  // x reduced mod f (matters for m = 1)
  Poly t = x;
  for (std::size_t i = 0; i < m; ++i) t = pow_mod(t, p, f, p);
  if (!sub_mod_p(t, x, p).empty()) return false;  // x^(p^m) != x mod f
  for (std::uint64_t r : distinct_prime_factors(m)) {
    Poly u = x;
    for (std::size_t i = 0; i < m / r; ++i) u = pow_mod(u, p, f, p);
    Poly g = gcd(sub_mod_p(u, x, p), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace poly

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  // Monic modulus, low-first coefficients, length m+1.
  std::vector<std::uint32_t> modulus;
};

// Lexicographically least monic irreducible of degree m over F_p, comparing
// coefficient tuples (c_0, c_1, ..., c_{m-1}) with c_0 most significant.
inline std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m) {
  std::uint64_t total = ipow(p, m);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::vector<std::uint32_t> f(m + 1, 0);
    f[m] = 1;
    std::uint64_t v = t;
    // decode t big-endian into (c_0, ..., c_{m-1}); c_0 is most significant
    for (std::uint32_t i = 0; i < m; ++i) {
      std::uint64_t w = ipow(p, m - 1 - i);
      f[i] = static_cast<std::uint32_t>(v / w);
      v %= w;
    }
    if (poly::irreducible(f, p)) return f;
  }
  throw std::logic_error("default_modulus: no irreducible found");  // unreachable
}

class Field {
 public:
  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus = {}) {
    if (!is_prime(p)) throw std::invalid_argument("Field: p is not prime");
    if (m < 1) throw std::invalid_argument("Field: m must be >= 1");
    std::uint64_t q64 = ipow(p, m);
    if (q64 > (1ull << 20)) throw std::invalid_argument("Field: p^m exceeds 2^20");
    if (modulus.empty()) modulus = default_modulus(p, m);
    if (modulus.size() != m + 1 || modulus.back() % p != 1)
      throw std::invalid_argument("Field: modulus must be monic of degree m");
    for (auto& c : modulus) c %= p;
    if (!poly::irreducible(modulus, p))
      throw std::invalid_argument("Field: modulus is reducible over F_p");

    spec_ = FieldSpec{p, m, modulus};
    q_ = static_cast<elem_t>(q64);
    group_ = PrimeGroup(p, m);
    build_log_tables();
    build_frobenius();
    build_inverse_and_classes();
    if (q_ <= 2048) build_mul_table();
  }

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t m() const { return spec_.m; }
  elem_t q() const { return q_; }
  elem_t one() const { return 1; }
  elem_t generator() const { return g_; }
  const PrimeGroup& group() const { return group_; }

  elem_t add(elem_t a, elem_t b) const { return group_.add(a, b); }
  elem_t sub(elem_t a, elem_t b) const { return group_.sub(a, b); }
  elem_t neg(elem_t a) const { return group_.neg(a); }

  elem_t mul(elem_t a, elem_t b) const {
    if (!mul_tab_.empty()) return mul_tab_[std::size_t(a) * q_ + b];
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }

  elem_t inv(elem_t a) const {
    if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
    return inv_[a];
  }

  // a^n with ordinary integer exponent semantics (0^0 = 1).
  elem_t pow(elem_t a, std::uint64_t n) const {
    if (a == 0) return n == 0 ? 1 : 0;
    std::uint64_t e = (std::uint64_t(log_[a]) * (n % (q_ - 1))) % (q_ - 1);
    return exp_[e];
  }

  // x -> x^(p^i); i is reduced mod m.
  elem_t frobenius(elem_t a, std::uint32_t i) const {
    return frob_[i % spec_.m][a];
  }

  bool is_square(elem_t a) const {
    if (spec_.p == 2) return true;
    return a == 0 || (log_[a] & 1u) == 0;
  }

  bool is_cube(elem_t a) const {
    if ((q_ - 1) % 3 != 0) return true;
    return a == 0 || log_[a] % 3 == 0;
  }

  // Relative trace onto the index-2 subfield: x + x^(p^(m/2)); needs m even.
  elem_t rel_trace(elem_t a) const {
    if (spec_.m % 2 != 0) throw std::domain_error("rel_trace: degree must be even");
    return add(a, frobenius(a, spec_.m / 2));
  }

  // True iff a lies in the subfield F_{p^d} (d | m assumed by caller).
  bool in_subfield(elem_t a, std::uint32_t d) const {
    return frobenius(a, d) == a;
  }

  std::uint32_t dlog(elem_t a) const {
    if (a == 0) throw std::domain_error("dlog of zero");
    return log_[a];
  }

  elem_t from_poly(const poly::Poly& c) const {
    elem_t idx = 0;
    std::uint64_t w = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
      idx += static_cast<elem_t>(w * (c[i] % spec_.p));
      w *= spec_.p;
    }
    return idx;
  }

  poly::Poly to_poly(elem_t a) const {
    poly::Poly c;
    while (a) {
      c.push_back(a % spec_.p);
      a /= spec_.p;
    }
    return c;
  }

 private:
  void build_log_tables() {
    auto factors = distinct_prime_factors(q_ - 1);
    // least-index generator of the multiplicative group
    g_ = 0;
    for (elem_t cand = 1; cand < q_; ++cand) {
      poly::Poly cp = to_poly(cand);
      bool ok = true;
      for (std::uint64_t f : factors) {
        poly::Poly t = poly::pow_mod(cp, (q_ - 1) / f, spec_.modulus, spec_.p);
        if (t.size() == 1 && t[0] == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        g_ = cand;
        break;
      }
    }
    if (g_ == 0) throw std::logic_error("Field: no generator found");

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    poly::Poly gp = to_poly(g_);
    poly::Poly cur{1};
    for (elem_t i = 0; i < q_ - 1; ++i) {
      elem_t v = from_poly(cur);
      exp_[i] = v;
      log_[v] = i;
      cur = poly::mul_mod(cur, gp, spec_.modulus, spec_.p);
    }
  }

  void build_frobenius() {
    frob_.assign(spec_.m, std::vector<elem_t>(q_, 0));
    for (std::uint32_t i = 0; i < spec_.m; ++i) {
      std::uint64_t pe = ipow(spec_.p, i) % (q_ - 1);
      for (elem_t a = 1; a < q_; ++a)
        frob_[i][a] = exp_[(std::uint64_t(log_[a]) * pe) % (q_ - 1)];
    }
  }

  void build_inverse_and_classes() {
    inv_.assign(q_, 0);
    for (elem_t a = 1; a < q_; ++a)
      inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  void build_mul_table() {
    mul_tab_.assign(std::size_t(q_) * q_, 0);
    for (elem_t a = 1; a < q_; ++a)
      for (elem_t b = 1; b < q_; ++b) {
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        mul_tab_[std::size_t(a) * q_ + b] = exp_[s];
      }
  }

  FieldSpec spec_;
  elem_t q_ = 0;
  elem_t g_ = 0;
  PrimeGroup group_;
  std::vector<elem_t> exp_, log_, inv_, mul_tab_;
  std::vector<std::vector<elem_t>> frob_;
};

// gcd(p^j + 1, p^n - 1) by the valuation rule; must match the Euclidean gcd.
inline std::uint64_t gcd_power_formula(std::uint32_t p, std::uint32_t j, std::uint32_t n) {
  if (v2(j) < v2(n)) return ipow(p, std::gcd(j, n)) + 1;
  return 2;
}

// Exhaustive verdict: is x -> x^(p^k + 1) a 2-to-1 map on F_{p^m}^*?
inline bool check_two_to_one(const Field& F, std::uint32_t k) {
  std::uint64_t e = (ipow(F.p(), k) % (F.q() - 1)) + 1;
  std::vector<std::uint32_t> hits(F.q(), 0);
  for (elem_t x = 0; x < F.q(); ++x) ++hits[F.pow(x, e)];
  if (hits[0] != 1) return false;
  for (elem_t b = 1; b < F.q(); ++b)
    if (hits[b] != 0 && hits[b] != 2) return false;
  return true;
}

// Exhaustive verdict: is x -> x^(p^k) + x a permutation of F_{p^m}?
inline bool check_perm_xpk_plus_x(const Field& F, std::uint32_t k) {
  std::vector<bool> seen(F.q(), false);
  for (elem_t x = 0; x < F.q(); ++x) {
    elem_t y = F.add(F.frobenius(x, k), x);
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

// Least-index non-square of F_{p^m} constrained to the subfield F_{p^l}.
inline elem_t least_nonsquare_in_subfield(const Field& F, std::uint32_t l) {
  for (elem_t a = 1; a < F.q(); ++a)
    if (F.in_subfield(a, l) && !F.is_square(a)) return a;
  throw std::logic_error("no non-square in subfield");  // impossible for odd p
}

// Embedding table of `small` = F_{p^m} into `big` = F_{p^{dm}}: image of each
// small-field index, via the least-index root of small's modulus in big.
inline std::vector<elem_t> embed_subfield(const Field& big, const Field& small) {
  if (big.p() != small.p() || big.m() % small.m() != 0)
    throw std::invalid_argument("embed_subfield: not a subfield");
  const auto& f = small.spec().modulus;
  elem_t root = 0;
  bool found = false;
  for (elem_t t = 0; t < big.q(); ++t) {
    elem_t acc = 0;  // evaluate f at t, Horner from the top coefficient
    for (std::size_t i = f.size(); i-- > 0;)
      acc = big.add(big.mul(acc, t), f[i] % big.p());
    if (acc == 0) {
      root = t;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("embed_subfield: modulus has no root in big field");
  std::vector<elem_t> img(small.q(), 0);
  for (elem_t a = 0; a < small.q(); ++a) {
    elem_t acc = 0;
    poly::Poly c = small.to_poly(a);
    for (std::size_t i = c.size(); i-- > 0;)
      acc = big.add(big.mul(acc, root), c[i]);
    img[a] = acc;
  }
  return img;
}

}  // namespace semifield
