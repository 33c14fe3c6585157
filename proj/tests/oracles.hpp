#pragma once

// Test-only oracles, independent of the library's fast paths.

#include <cstdint>
#include <random>
#include <vector>

#include "semifield/base.hpp"
#include "semifield/vecfn.hpp"

namespace oracles {

// Dense GF(2) elimination on the explicitly materialized developed matrix.
inline std::uint32_t dense_rank(std::uint32_t dim, const std::vector<semifield::elem_t>& pts) {
  std::uint32_t n = 1u << dim;
  std::size_t W = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(W, 0));
  for (std::uint32_t u = 0; u < n; ++u)
    for (semifield::elem_t g : pts) {
      std::uint32_t c = u ^ g;
      rows[u][c >> 6] |= 1ull << (c & 63);
    }
  std::vector<int> piv(n, -1);
  std::uint32_t rank = 0;
  for (std::uint32_t r = 0; r < n; ++r) {
    auto& row = rows[r];
    for (std::uint32_t c = 0; c < n; ++c) {
      if (!(row[c >> 6] & (1ull << (c & 63)))) continue;
      if (piv[c] >= 0) {
        auto& p = rows[piv[c]];
        for (std::size_t w = c >> 6; w < W; ++w) row[w] ^= p[w];
      } else {
        piv[c] = static_cast<int>(r);
        ++rank;
        break;
      }
    }
  }
  return rank;
}

inline std::vector<semifield::elem_t> graph_points(const semifield::VecFn& f) {
  std::vector<semifield::elem_t> pts(f.size());
  for (semifield::elem_t x = 0; x < f.size(); ++x) pts[x] = x | (f.table[x] << f.dim);
  return pts;
}

// Random invertible dim x dim GF(2) matrix as row bitmasks.
inline std::vector<std::uint32_t> random_invertible(std::uint32_t dim, std::mt19937_64& rng) {
  while (true) {
    std::vector<std::uint32_t> m(dim);
    for (auto& r : m) r = static_cast<std::uint32_t>(rng()) & ((1u << dim) - 1);
    auto copy = m;
    std::uint32_t rank = 0;
    for (std::uint32_t c = 0; c < dim; ++c) {
      std::uint32_t pr = rank;
      while (pr < dim && !(copy[pr] & (1u << c))) ++pr;
      if (pr == dim) continue;
      std::swap(copy[rank], copy[pr]);
      for (std::uint32_t r = 0; r < dim; ++r)
        if (r != rank && (copy[r] & (1u << c))) copy[r] ^= copy[rank];
      ++rank;
    }
    if (rank == dim) return m;
  }
}

inline semifield::elem_t apply_matrix(const std::vector<std::uint32_t>& m, semifield::elem_t v) {
  semifield::elem_t out = 0;
  for (std::size_t r = 0; r < m.size(); ++r)
    out |= static_cast<semifield::elem_t>(std::popcount(m[r] & v) & 1) << r;
  return out;
}

}  // namespace oracles
