#pragma once

// Shared low-level pieces: small integer helpers and the additive group of
// F_p^dim in the canonical index encoding (index = sum_i digit_i * p^i).

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace semifield {

inline constexpr const char* kVersion = "0.1.0";

// Canonical element index. Every field element, pair and function value in
// this library is addressed by one of these.
using elem_t = std::uint32_t;

inline std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

// 2-adic valuation; callers guard s > 0.
inline unsigned v2(std::uint64_t s) {
  return static_cast<unsigned>(std::countr_zero(s));
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Additive group of F_p^dim. Addition is digit-wise mod p, so the group of a
// pair domain (F_q x F_q with pair index a + q*b) is just PrimeGroup(p, 2m).
//
// For p = 2 addition is XOR. For odd p with at most 2^20 elements the group
// carries split lookup tables (low/high digit halves), so add() is two table
// hits; beyond that it falls back to a digit loop.
class PrimeGroup {
 public:
  PrimeGroup() = default;

  PrimeGroup(std::uint32_t p, std::uint32_t dim) : p_(p), dim_(dim) {
    if (p < 2 || dim < 1) throw std::invalid_argument("PrimeGroup: need p >= 2, dim >= 1");
    std::uint64_t n = ipow(p, dim);
    if (n > (1ull << 24)) throw std::invalid_argument("PrimeGroup: p^dim exceeds 2^24");
    n_ = static_cast<elem_t>(n);
    if (p_ == 2) return;
    if (n_ <= (1u << 20)) build_tables();
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t dim() const { return dim_; }
  elem_t size() const { return n_; }

  elem_t add(elem_t a, elem_t b) const {
    if (p_ == 2) return a ^ b;
    if (!lo_.empty())
      return lo_tab_[std::size_t(lo_[a]) * s_ + lo_[b]] +
             s_ * hi_tab_[std::size_t(hi_[a]) * s2_ + hi_[b]];
    return add_slow(a, b);
  }

  elem_t neg(elem_t a) const {
    if (p_ == 2) return a;
    if (!neg_.empty()) return neg_[a];
    return neg_slow(a);
  }

  elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }

  // Digit-wise multiplication by the scalar c in F_p.
  elem_t scale(elem_t a, std::uint32_t c) const {
    c %= p_;
    elem_t r = 0, out = a;
    std::uint64_t w = 1;
    for (std::uint32_t i = 0; i < dim_; ++i) {
      std::uint32_t d = out % p_;
      out /= p_;
      r += static_cast<elem_t>(w * ((std::uint64_t(d) * c) % p_));
      w *= p_;
    }
    return r;
  }

  std::uint32_t digit(elem_t a, std::uint32_t i) const {
    return (a / static_cast<elem_t>(ipow(p_, i))) % p_;
  }

  elem_t basis(std::uint32_t i) const { return static_cast<elem_t>(ipow(p_, i)); }

 private:
  void build_tables() {
    std::uint32_t h = (dim_ + 1) / 2;
    s_ = static_cast<elem_t>(ipow(p_, h));
    s2_ = static_cast<elem_t>(ipow(p_, dim_ - h));
    lo_.resize(n_);
    hi_.resize(n_);
    for (elem_t a = 0; a < n_; ++a) {
      lo_[a] = a % s_;
      hi_[a] = a / s_;
    }
    lo_tab_ = digit_add_table(s_, h);
    hi_tab_ = digit_add_table(s2_, dim_ - h);
    neg_.resize(n_);
    for (elem_t a = 0; a < n_; ++a) neg_[a] = neg_slow(a);
  }

  std::vector<elem_t> digit_add_table(elem_t s, std::uint32_t digits) const {
    std::vector<elem_t> t(std::size_t(s) * s);
    for (elem_t a = 0; a < s; ++a)
      for (elem_t b = 0; b < s; ++b) {
        elem_t r = 0, x = a, y = b;
        std::uint64_t w = 1;
        for (std::uint32_t i = 0; i < digits; ++i) {
          std::uint32_t d = (x % p_ + y % p_) % p_;
          x /= p_;
          y /= p_;
          r += static_cast<elem_t>(w * d);
          w *= p_;
        }
        t[std::size_t(a) * s + b] = r;
      }
    return t;
  }

  elem_t add_slow(elem_t a, elem_t b) const {
    elem_t r = 0;
    std::uint64_t w = 1;
    for (std::uint32_t i = 0; i < dim_; ++i) {
      std::uint32_t d = (a % p_ + b % p_) % p_;
      a /= p_;
      b /= p_;
      r += static_cast<elem_t>(w * d);
      w *= p_;
    }
    return r;
  }

  elem_t neg_slow(elem_t a) const {
    elem_t r = 0;
    std::uint64_t w = 1;
    for (std::uint32_t i = 0; i < dim_; ++i) {
      std::uint32_t d = a % p_;
      a /= p_;
      r += static_cast<elem_t>(w * ((p_ - d) % p_));
      w *= p_;
    }
    return r;
  }

  std::uint32_t p_ = 0, dim_ = 0;
  elem_t n_ = 0;
  elem_t s_ = 0, s2_ = 0;
  std::vector<elem_t> lo_, hi_, lo_tab_, hi_tab_, neg_;
};

}  // namespace semifield
