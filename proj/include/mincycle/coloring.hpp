#pragma once

#include <cstdint>
#include <vector>

namespace mincycle {

/// Two-coloring of vertices used to gate instance edges.
struct Coloring {
  std::vector<std::uint8_t> color;  // 0 = C1, 1 = C2
  std::uint64_t provenance = 0;     // seed or deterministic-family index

  bool is_c1(int v) const { return color[v] == 0; }
  bool is_c2(int v) const { return color[v] == 1; }
};

/// Default trial count: ceil(48 ln max(n,2)), which drives the per-instance
/// failure probability (15/16)^trials below n^-3.
int default_coloring_trials(int n);

/// `trials` independent uniform colorings; identical for a fixed seed.
std::vector<Coloring> sample_colorings(int n, int trials, std::uint64_t seed);

/// A family guaranteed to realize the pattern (C1,C2,C2,C1) on every ordered
/// quadruple of at most 4 distinct vertices: a 4-perfect family composed with
/// all 16 maps {1..4} -> {C1,C2}. For n <= 96 the 4-perfect family is built
/// greedily and verified exhaustively; above that a multiplicative hash
/// family is spot-verified and patched. Throws above the cap (2^16).
std::vector<Coloring> deterministic_colorings(int n);

constexpr int kDeterministicColoringCap = 1 << 16;

}  // namespace mincycle
