#pragma once

// Vectorial functions F_p^dim -> F_p^dim as exhaustive value tables, the
// planar / APN / differential-spectrum verifiers, polarization, and the
// concrete function families (two-parameter planar, diamond, B-H, the
// characteristic-2 APN family, Weng-Zeng sporadics).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "semifield/base.hpp"
#include "semifield/gf.hpp"
#include "semifield/products.hpp"

namespace semifield {

struct VecFn {
  std::uint32_t p = 0;
  std::uint32_t dim = 0;
  PrimeGroup group;
  std::vector<elem_t> table;

  elem_t size() const { return group.size(); }
  elem_t operator()(elem_t x) const { return table[x]; }
};

inline VecFn make_vecfn(std::uint32_t p, std::uint32_t dim) {
  VecFn f;
  f.p = p;
  f.dim = dim;
  f.group = PrimeGroup(p, dim);
  f.table.assign(f.group.size(), 0);
  return f;
}

// f(x) = x * x of a commutative product.
inline VecFn square_map(const Product& P) {
  const PrimeGroup& G = P.domain();
  VecFn f = make_vecfn(G.p(), G.dim());
  for (elem_t x = 0; x < f.size(); ++x) f.table[x] = P.eval(x, x);
  return f;
}

// x*y = (f(x+y) - f(x) - f(y)) / 2, tabulated. Odd p only.
inline ExplicitTableProduct polarize(const VecFn& f) {
  if (f.p == 2) throw std::invalid_argument("polarize: characteristic 2 has no 1/2");
  const elem_t n = f.size();
  if (n > 4096) throw std::invalid_argument("polarize: domain too large to tabulate");
  const PrimeGroup& G = f.group;
  std::uint32_t inv2 = (f.p + 1) / 2;
  std::vector<elem_t> table(std::size_t(n) * n);
  for (elem_t x = 0; x < n; ++x)
    for (elem_t y = 0; y < n; ++y) {
      elem_t d = G.sub(G.sub(f.table[G.add(x, y)], f.table[x]), f.table[y]);
      table[std::size_t(x) * n + y] = G.scale(d, inv2);
    }
  return ExplicitTableProduct(f.p, f.dim, std::move(table));
}

// Pointwise polarization without tabulating: (f(x+y) - f(x) - f(y)) / 2.
inline elem_t polarize_at(const VecFn& f, elem_t x, elem_t y) {
  const PrimeGroup& G = f.group;
  elem_t d = G.sub(G.sub(f.table[G.add(x, y)], f.table[x]), f.table[y]);
  return G.scale(d, (f.p + 1) / 2);
}

namespace detail {

template <typename Check>
bool scan_derivatives(const VecFn& f, unsigned threads, Check&& check) {
  const elem_t n = f.size();
  if (threads <= 1) {
    std::vector<elem_t> stamp(n, 0);
    for (elem_t a = 1; a < n; ++a)
      if (!check(a, stamp)) return false;
    return true;
  }
  std::vector<std::thread> pool;
  std::vector<char> ok(threads, 1);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      std::vector<elem_t> stamp(n, 0);
      for (elem_t a = 1 + t; a < n; a += threads)
        if (!check(a, stamp)) {
          ok[t] = 0;
          return;
        }
    });
  for (auto& th : pool) th.join();
  for (char c : ok)
    if (!c) return false;
  return true;
}

}  // namespace detail

// True iff every nonzero derivative x -> f(x+a) - f(x) is a bijection.
inline bool is_planar(const VecFn& f, unsigned threads = 1) {
  if (f.p == 2) throw std::invalid_argument("is_planar: use is_apn in characteristic 2");
  const PrimeGroup& G = f.group;
  return detail::scan_derivatives(f, threads, [&](elem_t a, std::vector<elem_t>& stamp) {
    for (elem_t x = 0; x < f.size(); ++x) {
      elem_t v = G.sub(f.table[G.add(x, a)], f.table[x]);
      if (stamp[v] == a) return false;  // value hit twice: not a bijection
      stamp[v] = a;
    }
    return true;
  });
}

// True iff every derivative equation f(x+a) + f(x) = b has 0 or 2 solutions.
inline bool is_apn(const VecFn& f, unsigned threads = 1) {
  if (f.p != 2) throw std::invalid_argument("is_apn: defined for characteristic 2");
  // stamp holds a*2 when hit once for this a, a*2+1 when hit twice
  return detail::scan_derivatives(f, threads, [&](elem_t a, std::vector<elem_t>& stamp) {
    for (elem_t x = 0; x < f.size(); ++x) {
      elem_t v = f.table[x ^ a] ^ f.table[x];
      if (stamp[v] == 2 * a) {
        stamp[v] = 2 * a + 1;
      } else if (stamp[v] == 2 * a + 1) {
        return false;  // third solution
      } else {
        stamp[v] = 2 * a;
      }
    }
    return true;
  });
}

// Histogram solution-count -> frequency over all (a != 0, b).
inline std::map<std::uint32_t, std::uint64_t> diff_spectrum(const VecFn& f) {
  const PrimeGroup& G = f.group;
  const elem_t n = f.size();
  std::map<std::uint32_t, std::uint64_t> hist;
  std::vector<std::uint32_t> count(n, 0);
  std::vector<elem_t> touched;
  touched.reserve(n);
  for (elem_t a = 1; a < n; ++a) {
    touched.clear();
    for (elem_t x = 0; x < n; ++x) {
      elem_t v = G.sub(f.table[G.add(x, a)], f.table[x]);
      if (count[v]++ == 0) touched.push_back(v);
    }
    if (touched.size() < n) hist[0] += n - touched.size();
    for (elem_t v : touched) {
      ++hist[count[v]];
      count[v] = 0;
    }
  }
  return hist;
}

// True iff x -> f(x+a) - f(x) - f(a) is additive for every a (checked against
// all basis increments, which spans the full additivity statement).
inline bool is_do_polynomial(const VecFn& f) {
  if (f.table[0] != 0) throw std::invalid_argument("is_do_polynomial: requires f(0) = 0");
  const PrimeGroup& G = f.group;
  const elem_t n = f.size();
  std::vector<elem_t> g(n);
  for (elem_t a = 0; a < n; ++a) {
    for (elem_t x = 0; x < n; ++x)
      g[x] = G.sub(G.sub(f.table[G.add(x, a)], f.table[x]), f.table[a]);
    for (std::uint32_t i = 0; i < G.dim(); ++i) {
      elem_t e = G.basis(i), ge = g[e];
      for (elem_t x = 0; x < n; ++x)
        if (g[G.add(x, e)] != G.add(g[x], ge)) return false;
    }
  }
  return true;
}

// Halved planar function of the two-parameter family:
//   (x, y) -> (x^(p^k+1) + alpha (y^(p^k+1))^sigma, xy).
inline VecFn two_param_planar_fn(const TwoParamSpec& spec) {
  const Field& F = *spec.F;
  VecFn f = make_vecfn(F.p(), 2 * F.m());
  std::uint64_t e = ipow(F.p(), spec.k) % (F.q() - 1) + 1;
  for (elem_t x = 0; x < F.q(); ++x)
    for (elem_t y = 0; y < F.q(); ++y) {
      elem_t first = F.add(F.pow(x, e), F.mul(spec.alpha, F.frobenius(F.pow(y, e), spec.r)));
      f.table[x + F.q() * y] = pair_index(F, {first, F.mul(x, y)});
    }
  return f;
}

// Second planar function attached to the diamond product:
//   (x, y) -> (2cxy + x^2 + alpha y^2, c(x^(p^k+1) + alpha y^(p^k+1)) + alpha x o_k y).
inline VecFn diamond_planar_fn(const DiamondSpec& spec) {
  const Field& F = *spec.base.F;
  VecFn f = make_vecfn(F.p(), 2 * F.m());
  std::uint64_t e = ipow(F.p(), spec.base.k) % (F.q() - 1) + 1;
  elem_t al = spec.base.alpha, c = spec.c;
  for (elem_t x = 0; x < F.q(); ++x)
    for (elem_t y = 0; y < F.q(); ++y) {
      elem_t cxy = F.mul(c, F.mul(x, y));
      elem_t first = F.add(F.add(cxy, cxy), F.add(F.mul(x, x), F.mul(al, F.mul(y, y))));
      elem_t second = F.add(F.mul(c, F.add(F.pow(x, e), F.mul(al, F.pow(y, e)))),
                            F.mul(al, albert_product(F, spec.base.k, x, y)));
      f.table[x + F.q() * y] = pair_index(F, {first, second});
    }
  return f;
}

// Characteristic-2 analogue (x, y) -> (x^(2^k+1) + alpha y^((2^k+1) 2^i), xy)
// on F_{2^m}^2 with m even and gcd(k, m) = 1.
inline VecFn apn_two_param_fn(const Field& F, std::uint32_t k, std::uint32_t i, elem_t alpha) {
  if (F.p() != 2) throw std::invalid_argument("apn_two_param_fn: base field must have p = 2");
  if (F.m() % 2 != 0 || F.m() < 2) throw std::invalid_argument("apn_two_param_fn: m must be even");
  if (std::gcd(k, F.m()) != 1) throw std::invalid_argument("apn_two_param_fn: gcd(k, m) must be 1");
  if (alpha == 0) throw std::invalid_argument("apn_two_param_fn: alpha must be nonzero");
  VecFn f = make_vecfn(2, 2 * F.m());
  std::uint64_t e = ipow(2, k) % (F.q() - 1) + 1;
  for (elem_t x = 0; x < F.q(); ++x)
    for (elem_t y = 0; y < F.q(); ++y) {
      elem_t first = F.add(F.pow(x, e), F.mul(alpha, F.frobenius(F.pow(y, e), i)));
      f.table[x + F.q() * y] = pair_index(F, {first, F.mul(x, y)});
    }
  return f;
}

// APN criterion for apn_two_param_fn: true iff alpha has no representation
// alpha = a^(2^k+1) (t^(2^k) + t)^(1 - sigma) with sigma = x^(2^i). The
// exponent 1 - sigma is read as w -> w / w^sigma on nonzero w; t with
// t^(2^k) + t = 0 contributes only the trivial derivative solutions.
inline bool alpha_apn_condition(const Field& F, std::uint32_t k, std::uint32_t i, elem_t alpha) {
  if (F.p() != 2) throw std::invalid_argument("alpha_apn_condition: p must be 2");
  if (alpha == 0) throw std::invalid_argument("alpha_apn_condition: alpha must be nonzero");
  std::uint64_t e = ipow(2, k) % (F.q() - 1) + 1;
  std::vector<bool> power_image(F.q(), false);
  for (elem_t a = 0; a < F.q(); ++a) power_image[F.pow(a, e)] = true;
  for (elem_t t = 0; t < F.q(); ++t) {
    elem_t w = F.add(F.frobenius(t, k), t);
    if (w == 0) continue;
    elem_t w1s = F.mul(w, F.inv(F.frobenius(w, i)));  // w^(1 - sigma)
    // alpha = pw * w1s for some (2^k+1)-th power pw?
    if (power_image[F.mul(alpha, F.inv(w1s))]) return false;
  }
  return true;
}

// B-H planar function M_s tabulated on K = F_{q^2}.
inline VecFn bh_function(const BhSpec& spec) {
  const Field& K = *spec.K;
  VecFn f = make_vecfn(K.p(), K.m());
  for (elem_t x = 0; x < K.q(); ++x) f.table[x] = bh_eval(spec, x);
  return f;
}

struct BhAgreement {
  bool ok = false;
  bool sampled = false;
  std::uint64_t pairs_checked = 0;
};

// Verifies the coordinate identity between the pair product and the second
// difference M(u+v) - M(u) - M(v) (twice the halved polarization) under the
// basis u = a + b omega. Exhaustive when the pair count fits in pair_cap,
// otherwise a seeded deterministic sample.
inline BhAgreement bh_pair_agreement(const BhSpec& spec, const Field& Fm,
                                     std::uint64_t pair_cap = ~0ull,
                                     std::uint64_t seed = 0) {
  const Field& K = *spec.K;
  BhPairProduct PP = make_bh_pair_product(spec, Fm);
  std::vector<elem_t> embed = embed_subfield(K, Fm);
  const elem_t q = Fm.q();
  const elem_t n = K.q();

  std::vector<elem_t> M(n), to_big(n);
  for (elem_t x = 0; x < n; ++x) M[x] = bh_eval(spec, x);
  for (elem_t a = 0; a < q; ++a)
    for (elem_t b = 0; b < q; ++b)
      to_big[a + q * b] = K.add(embed[a], K.mul(embed[b], spec.omega));

  auto matches = [&](elem_t u, elem_t v) {
    Pair w = PP.eval_pair(pair_of(Fm, u), pair_of(Fm, v));
    elem_t lhs = K.add(embed[w.a], K.mul(embed[w.b], spec.omega));
    elem_t tu = to_big[u], tv = to_big[v];
    elem_t rhs = K.sub(K.sub(M[K.add(tu, tv)], M[tu]), M[tv]);
    return lhs == rhs;
  };

  BhAgreement result;
  if (std::uint64_t(n) * n <= pair_cap) {
    result.sampled = false;
    for (elem_t u = 0; u < n; ++u)
      for (elem_t v = 0; v < n; ++v) {
        if (!matches(u, v)) return result;
        ++result.pairs_checked;
      }
    result.ok = true;
    return result;
  }
  result.sampled = true;
  std::mt19937_64 rng(seed);
  for (std::uint64_t it = 0; it < pair_cap; ++it) {
    elem_t u = static_cast<elem_t>(rng() % n), v = static_cast<elem_t>(rng() % n);
    if (!matches(u, v)) return result;
    ++result.pairs_checked;
  }
  result.ok = true;
  return result;
}

enum class Sporadic { weng1, weng2, weng3 };

inline Sporadic sporadic_by_name(const std::string& name) {
  if (name == "weng1") return Sporadic::weng1;
  if (name == "weng2") return Sporadic::weng2;
  if (name == "weng3") return Sporadic::weng3;
  throw std::invalid_argument("unknown sporadic planar function: " + name);
}

// The three sporadic planar monomial sums:
//   weng1: x^90 + x^2                 on F_{3^5}
//   weng2: x^162 + x^108 - x^84 + x^2 on F_{3^5}
//   weng3: x^50 + 3 x^6               on F_{5^5}
inline VecFn sporadic_planar(Sporadic which) {
  switch (which) {
    case Sporadic::weng1: {
      Field F(3, 5);
      VecFn f = make_vecfn(3, 5);
      for (elem_t x = 0; x < F.q(); ++x)
        f.table[x] = F.add(F.pow(x, 90), F.mul(x, x));
      return f;
    }
    case Sporadic::weng2: {
      Field F(3, 5);
      VecFn f = make_vecfn(3, 5);
      for (elem_t x = 0; x < F.q(); ++x)
        f.table[x] = F.add(F.add(F.pow(x, 162), F.pow(x, 108)),
                           F.add(F.neg(F.pow(x, 84)), F.mul(x, x)));
      return f;
    }
    case Sporadic::weng3: {
      Field F(5, 5);
      VecFn f = make_vecfn(5, 5);
      for (elem_t x = 0; x < F.q(); ++x)
        f.table[x] = F.add(F.pow(x, 50), F.mul(3, F.pow(x, 6)));
      return f;
    }
  }
  throw std::logic_error("unreachable");
}

// x -> x^e over F as a VecFn (test and CLI convenience).
inline VecFn monomial_fn(const Field& F, std::uint64_t e) {
  VecFn f = make_vecfn(F.p(), F.m());
  for (elem_t x = 0; x < F.q(); ++x) f.table[x] = F.pow(x, e);
  return f;
}

}  // namespace semifield
