#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mincycle/weight_matrix.hpp"

namespace mincycle {

/// Worker count used by the blocked kernels. 0 means "one worker".
/// Results are bit-identical regardless of the count.
struct MinPlusOptions {
  int threads = 0;
  static constexpr int kTile = 64;
};

/// Distance (min,+) product C[i][j] = min_k A[i][k] + B[k][j], saturating at
/// the infinity sentinel. Row-major tiled kernel over a transposed copy of B.
WeightMatrix distance_product(const WeightMatrix& a, const WeightMatrix& b,
                              const MinPlusOptions& opt = {});

/// Rectangular variant: computes only the rows listed in `rows`; all other
/// rows of the result are copied from `a` unchanged.
WeightMatrix distance_product_rows(const WeightMatrix& a, const WeightMatrix& b,
                                   const std::vector<int>& rows,
                                   const MinPlusOptions& opt = {});

struct MinTriangle {
  int i = -1, j = -1, k = -1;
  std::int64_t weight = 0;
};

/// Minimum-weight triangle of a symmetric adjacency matrix with an infinite
/// diagonal: min over i,j of A[j][i] + (A*A)[i][j], with the middle vertex k
/// recovered by a linear scan.
std::optional<MinTriangle> min_triangle(const WeightMatrix& a,
                                        const MinPlusOptions& opt = {});

/// Tripartite reachability check for the threshold binary search: true iff
/// there are a, b, c with d12[a][b] <= t, closing[b][c] finite and
/// d31[c][a] <= t. Boolean (OR,AND) product over machine-word bit rows.
bool threshold_triangle_exists(const WeightMatrix& d12, const WeightMatrix& d31,
                               const WeightMatrix& closing, std::int64_t t);

}  // namespace mincycle
