#pragma once

// Binary products on small domains: the two-parameter presemifield family on
// F_{p^m} x F_{p^m} (Albert product in the first slot, Dickson shape overall),
// its diamond variant, the Budaghyan-Helleseth pair product, explicit tables,
// and the presemifield -> semifield lift. Plus the exhaustive axiom checker.
//
// A product's domain is always [0, N) in the canonical base-p encoding; pair
// index = idx(a) + q * idx(b).

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "semifield/base.hpp"
#include "semifield/gf.hpp"

namespace semifield {

struct Pair {
  elem_t a = 0;
  elem_t b = 0;
  friend bool operator==(Pair, Pair) = default;
};

inline elem_t pair_index(const Field& F, Pair u) { return u.a + F.q() * u.b; }
inline Pair pair_of(const Field& F, elem_t t) { return {t % F.q(), t / F.q()}; }

// Precomputed pair-index decomposition; keeps divisions out of hot loops.
// Falls back to division when the table would be oversized.
class PairCodec {
 public:
  PairCodec() = default;
  explicit PairCodec(elem_t q) : q_(q) {
    std::uint64_t n = std::uint64_t(q) * q;
    if (n > (1u << 24)) return;
    a_.resize(n);
    b_.resize(n);
    for (elem_t t = 0; t < n; ++t) {
      a_[t] = t % q;
      b_[t] = t / q;
    }
  }
  elem_t q() const { return q_; }
  Pair split(elem_t t) const {
    if (!a_.empty()) return {a_[t], b_[t]};
    return {t % q_, t / q_};
  }
  elem_t join(Pair u) const { return u.a + q_ * u.b; }

 private:
  elem_t q_ = 0;
  std::vector<elem_t> a_, b_;
};

// Albert twisted-field product x o_k y = x^(p^k) y + y^(p^k) x. The k = 0
// reading degenerates to 2xy.
inline elem_t albert_product(const Field& F, std::uint32_t k, elem_t x, elem_t y) {
  return F.add(F.mul(F.frobenius(x, k), y), F.mul(F.frobenius(y, k), x));
}

// A total binary product on [0, N); immutable and shareable once built.
class Product {
 public:
  virtual ~Product() = default;
  virtual elem_t size() const = 0;
  virtual elem_t eval(elem_t x, elem_t y) const = 0;
  virtual const PrimeGroup& domain() const = 0;
};

class FieldProduct final : public Product {
 public:
  explicit FieldProduct(const Field& F) : F_(&F) {}
  elem_t size() const override { return F_->q(); }
  elem_t eval(elem_t x, elem_t y) const override { return F_->mul(x, y); }
  const PrimeGroup& domain() const override { return F_->group(); }

 private:
  const Field* F_;
};

// Parameters of the two-parameter family: product
//   (a,b) * (c,d) = (a o_k c + alpha (b o_k d)^sigma, ad + bc)
// with sigma = x^(p^r) and alpha a non-square in F_{p^l}, l = gcd(m, k).
// k ranges over 1..floor(m/2) with m/gcd(m,k) odd; k = 0 is the Dickson
// degenerate reading.
struct TwoParamSpec {
  const Field* F = nullptr;
  std::uint32_t k = 0;
  std::uint32_t r = 0;
  elem_t alpha = 0;
  std::uint32_t l = 0;

  TwoParamSpec(const Field& field, std::uint32_t k_, std::uint32_t r_,
               std::optional<elem_t> alpha_ = std::nullopt)
      : F(&field), k(k_), r(r_) {
    if (field.p() == 2) throw std::invalid_argument("TwoParamSpec: p must be odd");
    std::uint32_t m = field.m();
    if (k > m / 2) throw std::invalid_argument("TwoParamSpec: k out of range");
    if (r > m / 2) throw std::invalid_argument("TwoParamSpec: r out of range");
    std::uint32_t g = k == 0 ? m : std::gcd(m, k);
    if ((m / g) % 2 == 0)
      throw std::invalid_argument("TwoParamSpec: m / gcd(m,k) must be odd");
    l = g;
    alpha = alpha_ ? *alpha_ : least_nonsquare_in_subfield(field, l);
    if (alpha == 0 || !field.in_subfield(alpha, l) || field.is_square(alpha))
      throw std::invalid_argument("TwoParamSpec: alpha must be a non-square in F_{p^l}");
  }

  bool dickson() const { return k == 0; }
};

class TwoParamProduct final : public Product {
 public:
  explicit TwoParamProduct(TwoParamSpec spec)
      : spec_(spec),
        dom_(spec.F->p(), 2 * spec.F->m()),
        codec_(spec.F->q()),
        linv_(spec.F->q(), 0) {
    const Field& F = *spec_.F;
    // invert the additive bijection t -> t + t^(p^k)
    std::vector<bool> seen(F.q(), false);
    for (elem_t t = 0; t < F.q(); ++t) {
      elem_t y = F.add(t, F.frobenius(t, spec_.k));
      if (seen[y]) throw std::logic_error("TwoParamProduct: x + x^(p^k) not a bijection");
      seen[y] = true;
      linv_[y] = t;
    }
  }

  const TwoParamSpec& spec() const { return spec_; }
  const Field& field() const { return *spec_.F; }

  elem_t size() const override { return dom_.size(); }
  const PrimeGroup& domain() const override { return dom_; }

  Pair eval_pair(Pair u, Pair v) const {
    const Field& F = *spec_.F;
    elem_t first = F.add(albert_product(F, spec_.k, u.a, v.a),
                         F.mul(spec_.alpha,
                               F.frobenius(albert_product(F, spec_.k, u.b, v.b), spec_.r)));
    elem_t second = F.add(F.mul(u.a, v.b), F.mul(u.b, v.a));
    return {first, second};
  }

  elem_t eval(elem_t x, elem_t y) const override {
    return codec_.join(eval_pair(codec_.split(x), codec_.split(y)));
  }

  // L(a,b) = (a,b) * (1,0) = (a + a^(p^k), b), an additive bijection.
  Pair L_map(Pair u) const {
    const Field& F = *spec_.F;
    return {F.add(u.a, F.frobenius(u.a, spec_.k)), u.b};
  }

  Pair L_inverse(Pair u) const { return {linv_[u.a], u.b}; }

 private:
  TwoParamSpec spec_;
  PrimeGroup dom_;
  PairCodec codec_;
  std::vector<elem_t> linv_;
};

// Diamond variant of the k-family with trivial sigma:
//   (a,b) <> (e,f) = (c(a o e + (b o f) alpha) + alpha (b o e + a o f),
//                     c(af + be) + (ae + bf alpha)).
// The shift c lives in F_{p^l}; c^2 - alpha non-square is recorded (it is the
// condition under which this product is provably not strongly isotopic to any
// member of the plain family), not enforced.
struct DiamondSpec {
  TwoParamSpec base;
  elem_t c = 0;
  bool nonsquare_shift = false;

  DiamondSpec(TwoParamSpec base_, elem_t c_) : base(base_), c(c_) {
    if (base.r != 0)
      throw std::invalid_argument("DiamondSpec: base must have trivial sigma (r = 0)");
    const Field& F = *base.F;
    if (!F.in_subfield(c, base.l))
      throw std::invalid_argument("DiamondSpec: c must lie in F_{p^l}");
    nonsquare_shift = !F.is_square(F.sub(F.mul(c, c), base.alpha));
  }
};

class DiamondProduct final : public Product {
 public:
  explicit DiamondProduct(DiamondSpec spec)
      : spec_(spec),
        dom_(spec.base.F->p(), 2 * spec.base.F->m()),
        codec_(spec.base.F->q()) {}

  const DiamondSpec& spec() const { return spec_; }
  const Field& field() const { return *spec_.base.F; }

  elem_t size() const override { return dom_.size(); }
  const PrimeGroup& domain() const override { return dom_; }

  Pair eval_pair(Pair u, Pair v) const {
    const Field& F = *spec_.base.F;
    std::uint32_t k = spec_.base.k;
    elem_t al = spec_.base.alpha, c = spec_.c;
    elem_t ae = albert_product(F, k, u.a, v.a);
    elem_t bf = albert_product(F, k, u.b, v.b);
    elem_t be = albert_product(F, k, u.b, v.a);
    elem_t af = albert_product(F, k, u.a, v.b);
    elem_t first = F.add(F.mul(c, F.add(ae, F.mul(bf, al))), F.mul(al, F.add(be, af)));
    elem_t second = F.add(F.mul(c, F.add(F.mul(u.a, v.b), F.mul(u.b, v.a))),
                          F.add(F.mul(u.a, v.a), F.mul(F.mul(u.b, v.b), al)));
    return {first, second};
  }

  elem_t eval(elem_t x, elem_t y) const override {
    return codec_.join(eval_pair(codec_.split(x), codec_.split(y)));
  }

 private:
  DiamondSpec spec_;
  PrimeGroup dom_;
  PairCodec codec_;
};

// Budaghyan-Helleseth planar function M_s(x) = x^(q+1) + omega tr(beta x^(p^s+1))
// on K = F_{q^2}, q = p^m. Planar iff (s = 0 or v2(s) != v2(m)), omega outside
// F_q, beta a non-square of K.
struct BhSpec {
  const Field* K = nullptr;
  std::uint32_t m = 0;
  std::uint32_t s = 0;
  elem_t omega = 0;
  elem_t beta = 0;
};

inline BhSpec make_bh_spec(const Field& K, std::uint32_t s,
                           std::optional<elem_t> omega = std::nullopt,
                           std::optional<elem_t> beta = std::nullopt,
                           bool validate = true) {
  if (K.m() % 2 != 0) throw std::invalid_argument("make_bh_spec: field degree must be even");
  std::uint32_t m = K.m() / 2;
  BhSpec spec;
  spec.K = &K;
  spec.m = m;
  spec.s = s;
  if (omega) {
    spec.omega = *omega;
  } else if (m % 2 == 1) {
    // least omega in F_{p^2} with omega^(p^m) = -omega; this is the choice
    // under which the pair-coordinate product below applies
    spec.omega = 0;
    for (elem_t w = 1; w < K.q(); ++w)
      if (K.in_subfield(w, 2 % K.m()) && K.frobenius(w, m) == K.neg(w)) {
        spec.omega = w;
        break;
      }
    if (spec.omega == 0) throw std::logic_error("make_bh_spec: no antisymmetric omega");
  } else {
    spec.omega = 0;
    for (elem_t w = 1; w < K.q(); ++w)
      if (K.frobenius(w, m) != w) {
        spec.omega = w;
        break;
      }
  }
  if (beta) {
    spec.beta = *beta;
  } else if (m % 2 == 1) {
    spec.beta = K.inv(spec.omega);
  } else {
    spec.beta = 0;
    for (elem_t b = 1; b < K.q(); ++b)
      if (!K.is_square(b)) {
        spec.beta = b;
        break;
      }
  }
  if (validate) {
    if (s != 0 && v2(s) == v2(m))
      throw std::invalid_argument("make_bh_spec: need s = 0 or v2(s) != v2(m)");
    if (K.frobenius(spec.omega, m) == spec.omega)
      throw std::invalid_argument("make_bh_spec: omega lies in F_q");
    if (K.is_square(spec.beta))
      throw std::invalid_argument("make_bh_spec: beta must be a non-square");
  }
  return spec;
}

// M_s evaluated at one point of K.
inline elem_t bh_eval(const BhSpec& spec, elem_t x) {
  const Field& K = *spec.K;
  std::uint64_t q = ipow(K.p(), spec.m);
  elem_t head = K.pow(x, q + 1);
  elem_t w = K.mul(spec.beta, K.pow(x, ipow(K.p(), spec.s) % (K.q() - 1) + 1));
  elem_t tr = K.add(w, K.frobenius(w, spec.m));
  return K.add(head, K.mul(spec.omega, tr));
}

// Pair-coordinate form of the B-H product for odd m, omega^(p^m) = -omega,
// beta = omega^(-1):  (a,b) . (c,d) = (2(ac - bd w2), 2(a o_s d + b o_s c))
// where w2 = omega^2 lies in the prime subfield.
class BhPairProduct final : public Product {
 public:
  BhPairProduct(const Field& Fm, std::uint32_t s, elem_t omega_sq)
      : F_(&Fm), s_(s), w2_(omega_sq), dom_(Fm.p(), 2 * Fm.m()), codec_(Fm.q()) {
    if (w2_ >= Fm.p())
      throw std::invalid_argument("BhPairProduct: omega^2 must lie in the prime subfield");
  }

  const Field& field() const { return *F_; }
  std::uint32_t s() const { return s_; }
  elem_t omega_sq() const { return w2_; }

  elem_t size() const override { return dom_.size(); }
  const PrimeGroup& domain() const override { return dom_; }

  Pair eval_pair(Pair u, Pair v) const {
    const Field& F = *F_;
    elem_t t1 = F.sub(F.mul(u.a, v.a), F.mul(F.mul(u.b, v.b), w2_));
    elem_t t2 = F.add(albert_product(F, s_, u.a, v.b), albert_product(F, s_, u.b, v.a));
    return {F.add(t1, t1), F.add(t2, t2)};
  }

  elem_t eval(elem_t x, elem_t y) const override {
    return codec_.join(eval_pair(codec_.split(x), codec_.split(y)));
  }

 private:
  const Field* F_;
  std::uint32_t s_;
  elem_t w2_;
  PrimeGroup dom_;
  PairCodec codec_;
};

// Builds the pair-coordinate product matching `spec` (requires the defaults
// of make_bh_spec for odd m). Fm must be F_{p^m}.
inline BhPairProduct make_bh_pair_product(const BhSpec& spec, const Field& Fm) {
  const Field& K = *spec.K;
  if (spec.m % 2 == 0) throw std::invalid_argument("make_bh_pair_product: m must be odd");
  if (K.frobenius(spec.omega, spec.m) != K.neg(spec.omega))
    throw std::invalid_argument("make_bh_pair_product: omega^(p^m) != -omega");
  if (spec.beta != K.inv(spec.omega))
    throw std::invalid_argument("make_bh_pair_product: beta != omega^(-1)");
  elem_t w2 = K.mul(spec.omega, spec.omega);
  return BhPairProduct(Fm, spec.s, w2);
}

// Product given by an explicit N x N value table.
class ExplicitTableProduct final : public Product {
 public:
  ExplicitTableProduct(std::uint32_t p, std::uint32_t dim, std::vector<elem_t> table)
      : dom_(p, dim), table_(std::move(table)) {
    if (table_.size() != std::size_t(dom_.size()) * dom_.size())
      throw std::invalid_argument("ExplicitTableProduct: table size mismatch");
  }

  elem_t size() const override { return dom_.size(); }
  const PrimeGroup& domain() const override { return dom_; }
  elem_t eval(elem_t x, elem_t y) const override {
    return table_[std::size_t(x) * dom_.size() + y];
  }
  std::vector<elem_t>& table() { return table_; }

 private:
  PrimeGroup dom_;
  std::vector<elem_t> table_;
};

// Semifield lift of a presemifield: (x*a) . (a*y) := x*y, realized by
// inverting the two translation maps. Unit is a*a. Throws if a = 0 or either
// translation fails to be a bijection (i.e. the base has zero divisors).
class StarSemifield final : public Product {
 public:
  // keeps a pointer into `base`; the base product must outlive the lift
  StarSemifield(const Product&& base, elem_t a) = delete;
  StarSemifield(const Product& base, elem_t a) : base_(&base) {
    if (a == 0) throw std::invalid_argument("StarSemifield: a must be nonzero");
    elem_t n = base.size();
    inv_right_.assign(n, 0);
    inv_left_.assign(n, 0);
    std::vector<bool> seen(n, false);
    for (elem_t x = 0; x < n; ++x) {
      elem_t y = base.eval(x, a);
      if (seen[y]) throw std::invalid_argument("StarSemifield: x -> x*a is not a bijection");
      seen[y] = true;
      inv_right_[y] = x;
    }
    seen.assign(n, false);
    for (elem_t x = 0; x < n; ++x) {
      elem_t y = base.eval(a, x);
      if (seen[y]) throw std::invalid_argument("StarSemifield: y -> a*y is not a bijection");
      seen[y] = true;
      inv_left_[y] = x;
    }
    unit_ = base.eval(a, a);
  }

  elem_t unit() const { return unit_; }
  elem_t size() const override { return base_->size(); }
  const PrimeGroup& domain() const override { return base_->domain(); }
  elem_t eval(elem_t x, elem_t y) const override {
    return base_->eval(inv_right_[x], inv_left_[y]);
  }

 private:
  const Product* base_;
  std::vector<elem_t> inv_right_, inv_left_;
  elem_t unit_ = 0;
};

inline StarSemifield semifield_from_presemifield(const Product& P, elem_t a) {
  return StarSemifield(P, a);
}
inline StarSemifield semifield_from_presemifield(const Product&& P, elem_t a) = delete;

struct AxiomReport {
  bool left_distributive = false;
  bool right_distributive = false;
  bool commutative = false;
  bool no_zero_divisors = false;
  std::optional<elem_t> unit;
  bool exhaustive = true;
  std::uint64_t samples = 0;

  bool distributive() const { return left_distributive && right_distributive; }
};

// Verifies the presemifield axioms. Domains up to 2^16 elements are scanned
// exhaustively; distributivity is established by checking additivity against
// every basis increment, which is equivalent to the full triple scan because
// every group element is a sum of basis elements. Larger domains fall back to
// a seeded sample, flagged in the report.
inline AxiomReport check_axioms(const Product& P, std::uint64_t sample_count = 1'000'000,
                                std::uint64_t seed = 0) {
  const PrimeGroup& G = P.domain();
  const elem_t n = P.size();
  AxiomReport rep;

  if (n <= (1u << 16)) {
    rep.exhaustive = true;
    rep.left_distributive = rep.right_distributive = true;
    rep.commutative = rep.no_zero_divisors = true;

    std::vector<elem_t> col(n), base_vals(G.dim());
    // fixed right operand: additivity of x -> x*y, plus the zero-divisor scan
    for (elem_t y = 0; y < n && (rep.left_distributive || rep.no_zero_divisors); ++y) {
      for (elem_t x = 0; x < n; ++x) col[x] = P.eval(x, y);
      if (y != 0)
        for (elem_t x = 1; x < n; ++x)
          if (col[x] == 0) {
            rep.no_zero_divisors = false;
            break;
          }
      for (std::uint32_t i = 0; i < G.dim(); ++i) base_vals[i] = col[G.basis(i)];
      for (elem_t x = 0; x < n && rep.left_distributive; ++x)
        for (std::uint32_t i = 0; i < G.dim(); ++i)
          if (col[G.add(x, G.basis(i))] != G.add(col[x], base_vals[i])) {
            rep.left_distributive = false;
            break;
          }
    }
    // fixed left operand: additivity of y -> x*y
    std::vector<elem_t> row(n);
    for (elem_t x = 0; x < n && rep.right_distributive; ++x) {
      for (elem_t y = 0; y < n; ++y) row[y] = P.eval(x, y);
      for (std::uint32_t i = 0; i < G.dim(); ++i) base_vals[i] = row[G.basis(i)];
      for (elem_t y = 0; y < n && rep.right_distributive; ++y)
        for (std::uint32_t i = 0; i < G.dim(); ++i)
          if (row[G.add(y, G.basis(i))] != G.add(row[y], base_vals[i])) {
            rep.right_distributive = false;
            break;
          }
    }
    for (elem_t u = 0; u < n && rep.commutative; ++u)
      for (elem_t v = u + 1; v < n; ++v)
        if (P.eval(u, v) != P.eval(v, u)) {
          rep.commutative = false;
          break;
        }
    // unit: probe against the first basis vector, then verify fully
    for (elem_t e = 0; e < n; ++e) {
      elem_t probe = G.basis(0);
      if (P.eval(e, probe) != probe || P.eval(probe, e) != probe) continue;
      bool ok = true;
      for (elem_t x = 0; x < n && ok; ++x)
        ok = P.eval(e, x) == x && P.eval(x, e) == x;
      if (ok) {
        rep.unit = e;
        break;
      }
    }
    return rep;
  }

  rep.exhaustive = false;
  rep.samples = sample_count;
  rep.left_distributive = rep.right_distributive = true;
  rep.commutative = rep.no_zero_divisors = true;
  std::mt19937_64 rng(seed);
  auto draw = [&] { return static_cast<elem_t>(rng() % n); };
  for (std::uint64_t i = 0; i < sample_count; ++i) {
    elem_t x = draw(), y = draw(), z = draw();
    if (P.eval(G.add(x, y), z) != G.add(P.eval(x, z), P.eval(y, z)))
      rep.left_distributive = false;
    if (P.eval(x, G.add(y, z)) != G.add(P.eval(x, y), P.eval(x, z)))
      rep.right_distributive = false;
    if (P.eval(x, y) != P.eval(y, x)) rep.commutative = false;
    if (x != 0 && y != 0 && P.eval(x, y) == 0) rep.no_zero_divisors = false;
  }
  return rep;
}

}  // namespace semifield
