#pragma once

// GF(2) rank of the group-developed incidence matrix of a point set
// S in F_2^dim: rows and columns are indexed by the group, A[u][v] = 1 iff
// u ^ v lies in S. For a function f this is applied to the graph
// {(x, f(x))} in F_2^(2d), giving the Gamma rank, a CCZ invariant.
//
// The matrix is materialized bit-packed (2^(2*dim) bits; 512 MiB at the
// dim = 16 cap) and echelonized in place, eight columns at a time with a
// 256-entry combination table, so each row takes one XOR per column block
// instead of eight.

#include <bit>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <thread>
#include <vector>

#include "semifield/base.hpp"
#include "semifield/vecfn.hpp"

namespace semifield {

namespace gf2 {

inline void xor_tail(std::uint64_t* dst, const std::uint64_t* src, std::size_t from,
                     std::size_t words) {
  for (std::size_t w = from; w < words; ++w) dst[w] ^= src[w];
}

}  // namespace gf2

inline std::uint32_t gamma_rank_of_set(std::uint32_t dim, const std::vector<elem_t>& points,
                                       unsigned threads = 1) {
  if (dim < 1 || dim > 16)
    throw std::invalid_argument("gamma_rank_of_set: dim must be in 1..16");
  const std::uint32_t n = 1u << dim;
  const std::size_t words = (n + 63) / 64;
  for (elem_t g : points)
    if (g >= n) throw std::invalid_argument("gamma_rank_of_set: point outside the group");

  // row u has ones exactly at columns u ^ g
  std::vector<std::uint64_t> buf(std::size_t(n) * words, 0);
  std::vector<std::uint64_t*> row(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    row[u] = buf.data() + std::size_t(u) * words;
    for (elem_t g : points) {
      std::uint32_t cx = u ^ g;
      row[u][cx >> 6] |= 1ull << (cx & 63);
    }
  }

  auto block_bits = [&](const std::uint64_t* r, std::uint32_t c0, std::uint32_t kk) {
    return static_cast<std::uint32_t>((r[c0 >> 6] >> (c0 & 63)) & ((1u << kk) - 1));
  };

  std::uint32_t rank = 0;
  std::vector<std::uint64_t> table;
  std::vector<std::uint32_t> combo_pivot(8);

  for (std::uint32_t c0 = 0; c0 < n && rank < n; c0 += 8) {
    const std::uint32_t kk = std::min<std::uint32_t>(8, n - c0);
    const std::size_t w0 = c0 >> 6;

    // collect up to kk pivots, reducing each scanned row in place
    std::uint32_t found = 0;
    std::uint32_t pivcol[8];
    std::uint32_t scan_end = n;
    for (std::uint32_t rpos = rank; rpos < n; ++rpos) {
      std::uint64_t* cur = row[rpos];
      std::uint32_t v = block_bits(cur, c0, kk);
      for (std::uint32_t j = 0; j < found && v; ++j) {
        if (v & (1u << (pivcol[j] - c0))) {
          gf2::xor_tail(cur, row[rank + j], w0, words);
          v = block_bits(cur, c0, kk);
        }
      }
      if (v) {
        pivcol[found] = c0 + std::countr_zero(v);
        std::swap(row[rank + found], row[rpos]);
        ++found;
        if (found == kk) {
          scan_end = rpos + 1;
          break;
        }
      }
    }

    if (found == kk && kk > 0) {
      // Gauss-Jordan among the pivot rows: identity on the block columns
      for (std::uint32_t j = 0; j < kk; ++j)
        for (std::uint32_t j2 = 0; j2 < kk; ++j2) {
          if (j2 == j) continue;
          if (row[rank + j2][pivcol[j] >> 6] & (1ull << (pivcol[j] & 63)))
            gf2::xor_tail(row[rank + j2], row[rank + j], w0, words);
        }
      // every block pattern v is cleared by one precomputed combination
      for (std::uint32_t j = 0; j < kk; ++j) combo_pivot[pivcol[j] - c0] = j;
      const std::size_t tail = words - w0;
      table.assign((std::size_t(1) << kk) * tail, 0);
      for (std::uint32_t v = 1; v < (1u << kk); ++v) {
        std::uint32_t low = v & (v - 1);
        std::uint32_t bit = std::countr_zero(v);
        const std::uint64_t* base = table.data() + std::size_t(low) * tail;
        const std::uint64_t* piv = row[rank + combo_pivot[bit]] + w0;
        std::uint64_t* dst = table.data() + std::size_t(v) * tail;
        for (std::size_t w = 0; w < tail; ++w) dst[w] = base[w] ^ piv[w];
      }

      auto clear_rows = [&](std::uint32_t begin, std::uint32_t step) {
        for (std::uint32_t rpos = begin; rpos < n; rpos += step) {
          std::uint64_t* cur = row[rpos];
          std::uint32_t v = block_bits(cur, c0, kk);
          if (!v) continue;
          const std::uint64_t* src = table.data() + std::size_t(v) * tail;
          for (std::size_t w = 0; w < tail; ++w) cur[w0 + w] ^= src[w];
        }
      };
      if (threads <= 1 || n - scan_end < 4096) {
        clear_rows(scan_end, 1);
      } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
          pool.emplace_back([&, t] { clear_rows(scan_end + t, threads); });
        for (auto& th : pool) th.join();
      }
    }
    rank += found;
  }
  return rank;
}

// Gamma rank of a function table over F_2: rank of dev of the graph
// {(x, f(x))} inside F_2^(2 dim).
inline std::uint32_t gamma_rank(const VecFn& f, unsigned threads = 1) {
  if (f.p != 2) throw std::invalid_argument("gamma_rank: characteristic 2 only");
  if (2 * f.dim > 16)
    throw std::invalid_argument("gamma_rank: group dimension exceeds the 2^16 cap");
  std::vector<elem_t> points(f.size());
  for (elem_t x = 0; x < f.size(); ++x) points[x] = x | (f.table[x] << f.dim);
  return gamma_rank_of_set(2 * f.dim, points, threads);
}

}  // namespace semifield
