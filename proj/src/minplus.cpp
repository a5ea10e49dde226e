#include "mincycle/minplus.hpp"

#include <algorithm>
#include <stdexcept>

#include "mincycle/detail/parallel.hpp"

namespace mincycle {

namespace {

constexpr std::int64_t kInf = WeightMatrix::kInf;
// Sums of one finite and one infinite operand land above this; real values
// stay far below it (the weight cap is enforced at graph construction).
constexpr std::int64_t kClamp = kInf / 2;

std::vector<std::int64_t> transpose(const WeightMatrix& b) {
  int n = b.size();
  std::vector<std::int64_t> bt(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    const std::int64_t* row = b.row(k);
    for (int j = 0; j < n; ++j) bt[static_cast<std::size_t>(j) * n + k] = row[j];
  }
  return bt;
}

void product_rows_kernel(const WeightMatrix& a, const std::vector<std::int64_t>& bt,
                         WeightMatrix& c, const std::vector<int>& rows,
                         std::size_t lo, std::size_t hi) {
  const int n = a.size();
  constexpr int tile = MinPlusOptions::kTile;
  for (std::size_t r = lo; r < hi; ++r) {
    const int i = rows[r];
    const std::int64_t* ar = a.row(i);
    std::int64_t* cr = c.row(i);
    std::fill(cr, cr + n, kInf);
    for (int k0 = 0; k0 < n; k0 += tile) {
      const int k1 = std::min(n, k0 + tile);
      for (int j = 0; j < n; ++j) {
        const std::int64_t* btj = bt.data() + static_cast<std::size_t>(j) * n;
        std::int64_t best = cr[j];
        for (int k = k0; k < k1; ++k) {
          std::int64_t cand = ar[k] + btj[k];
          best = cand < best ? cand : best;
        }
        cr[j] = best;
      }
    }
    for (int j = 0; j < n; ++j)
      if (cr[j] >= kClamp) cr[j] = kInf;
  }
}

}  // namespace

WeightMatrix distance_product(const WeightMatrix& a, const WeightMatrix& b,
                              const MinPlusOptions& opt) {
  if (a.size() != b.size()) throw std::invalid_argument("distance_product: dimension mismatch");
  const int n = a.size();
  WeightMatrix c(n);
  std::vector<int> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = i;
  auto bt = transpose(b);
  detail::run_chunked(opt.threads, rows.size(), [&](std::size_t lo, std::size_t hi) {
    product_rows_kernel(a, bt, c, rows, lo, hi);
  });
  return c;
}

WeightMatrix distance_product_rows(const WeightMatrix& a, const WeightMatrix& b,
                                   const std::vector<int>& rows,
                                   const MinPlusOptions& opt) {
  if (a.size() != b.size()) throw std::invalid_argument("distance_product: dimension mismatch");
  const int n = a.size();
  WeightMatrix c(n);
  for (int i = 0; i < n; ++i)
    std::copy(a.row(i), a.row(i) + n, c.row(i));
  auto bt = transpose(b);
  detail::run_chunked(opt.threads, rows.size(), [&](std::size_t lo, std::size_t hi) {
    product_rows_kernel(a, bt, c, rows, lo, hi);
  });
  return c;
}

std::optional<MinTriangle> min_triangle(const WeightMatrix& a, const MinPlusOptions& opt) {
  const int n = a.size();
  WeightMatrix p = distance_product(a, a, opt);
  MinTriangle best;
  std::int64_t best_w = kInf;
  for (int i = 0; i < n; ++i) {
    const std::int64_t* pi = p.row(i);
    for (int j = 0; j < n; ++j) {
      std::int64_t closing = a.at(j, i);
      if (WeightMatrix::is_inf(closing) || WeightMatrix::is_inf(pi[j])) continue;
      std::int64_t w = closing + pi[j];
      if (w < best_w) {
        best_w = w;
        best.i = i;
        best.j = j;
      }
    }
  }
  if (best.i < 0) return std::nullopt;
  // recover the middle vertex in O(n)
  const std::int64_t two_path = p.at(best.i, best.j);
  for (int k = 0; k < n; ++k) {
    if (k == best.i || k == best.j) continue;
    if (!WeightMatrix::is_inf(a.at(best.i, k)) && !WeightMatrix::is_inf(a.at(k, best.j)) &&
        a.at(best.i, k) + a.at(k, best.j) == two_path) {
      best.k = k;
      best.weight = best_w;
      return best;
    }
  }
  return std::nullopt;  // unreachable for a consistent matrix
}

bool threshold_triangle_exists(const WeightMatrix& d12, const WeightMatrix& d31,
                               const WeightMatrix& closing, std::int64_t t) {
  const int n = d12.size();
  if (d31.size() != n || closing.size() != n)
    throw std::invalid_argument("threshold_triangle_exists: dimension mismatch");
  const int words = (n + 63) / 64;
  // closing_bits[b]: bitset over c of finite closing edges (b in V2, c in V3)
  std::vector<std::uint64_t> closing_bits(static_cast<std::size_t>(n) * words, 0);
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      if (!WeightMatrix::is_inf(closing.at(b, c)))
        closing_bits[static_cast<std::size_t>(b) * words + c / 64] |= 1ull << (c % 64);
  // t31_bits[a]: bitset over c with d31[c][a] <= t
  std::vector<std::uint64_t> t31_bits(static_cast<std::size_t>(n) * words, 0);
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      if (d31.at(c, a) <= t)
        t31_bits[static_cast<std::size_t>(a) * words + c / 64] |= 1ull << (c % 64);

  std::vector<std::uint64_t> reach(words);
  for (int a = 0; a < n; ++a) {
    std::fill(reach.begin(), reach.end(), 0);
    for (int b = 0; b < n; ++b) {
      if (d12.at(a, b) > t) continue;
      const std::uint64_t* cb = closing_bits.data() + static_cast<std::size_t>(b) * words;
      for (int w = 0; w < words; ++w) reach[w] |= cb[w];
    }
    const std::uint64_t* ta = t31_bits.data() + static_cast<std::size_t>(a) * words;
    for (int w = 0; w < words; ++w)
      if (reach[w] & ta[w]) return true;
  }
  return false;
}

}  // namespace mincycle
