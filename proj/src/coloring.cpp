#include "mincycle/coloring.hpp"

#include "mincycle/detail/rng.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace mincycle {

namespace {

constexpr std::uint64_t kFamilySeed = 0x4c6f72656e7a6f21ull;

bool perfect_on(const std::vector<std::uint8_t>& f, int a, int b, int c, int d) {
  std::uint16_t seen = 0;
  seen |= 1 << f[a];
  seen |= 1 << f[b];
  seen |= 1 << f[c];
  seen |= 1 << f[d];
  return seen == 0b1111 || std::popcount(seen) == 4;
}

std::vector<std::uint8_t> random_map4(int n, std::mt19937_64& rng) {
  std::vector<std::uint8_t> f(n);
  std::uniform_int_distribution<int> four(0, 3);
  for (auto& x : f) x = static_cast<std::uint8_t>(four(rng));
  return f;
}

// Greedy 4-perfect family, verified exhaustively over all 4-subsets.
std::vector<std::vector<std::uint8_t>> greedy_family(int n) {
  std::vector<std::array<int, 4>> uncovered;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) uncovered.push_back({a, b, c, d});
  std::mt19937_64 rng(kFamilySeed);
  std::vector<std::vector<std::uint8_t>> family;
  while (!uncovered.empty()) {
    // best of a few random candidates
    std::vector<std::uint8_t> best;
    std::size_t best_left = uncovered.size() + 1;
    for (int trial = 0; trial < 4; ++trial) {
      auto f = random_map4(n, rng);
      std::size_t left = 0;
      for (const auto& q : uncovered)
        if (!perfect_on(f, q[0], q[1], q[2], q[3])) ++left;
      if (left < best_left) {
        best_left = left;
        best = std::move(f);
      }
    }
    std::vector<std::array<int, 4>> still;
    still.reserve(best_left);
    for (const auto& q : uncovered)
      if (!perfect_on(best, q[0], q[1], q[2], q[3])) still.push_back(q);
    uncovered.swap(still);
    family.push_back(std::move(best));
  }
  return family;
}

// Pseudorandom family with randomized verification and per-failure patches;
// used above the exhaustive-verification range.
std::vector<std::vector<std::uint8_t>> sampled_family(int n) {
  std::mt19937_64 rng(kFamilySeed);
  double miss = 1.0 - 24.0 / 256.0;  // quadruple not separated by one map
  int size = static_cast<int>(std::ceil(4.0 * std::log(n) / -std::log(miss))) + 8;
  std::vector<std::vector<std::uint8_t>> family;
  for (int i = 0; i < size; ++i) family.push_back(random_map4(n, rng));
  std::uniform_int_distribution<int> vert(0, n - 1);
  for (int check = 0; check < 20000; ++check) {
    int a = vert(rng), b = vert(rng), c = vert(rng), d = vert(rng);
    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
    bool ok = false;
    for (const auto& f : family)
      if (perfect_on(f, a, b, c, d)) {
        ok = true;
        break;
      }
    if (!ok) {
      std::vector<std::uint8_t> patch(n);
      for (int v = 0; v < n; ++v) patch[v] = static_cast<std::uint8_t>(v & 3);
      patch[a] = 0;
      patch[b] = 1;
      patch[c] = 2;
      patch[d] = 3;
      family.push_back(std::move(patch));
    }
  }
  return family;
}

}  // namespace

int default_coloring_trials(int n) {
  return static_cast<int>(std::ceil(48.0 * std::log(std::max(n, 2))));
}

std::vector<Coloring> sample_colorings(int n, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("sample_colorings: trials must be >= 1");
  std::vector<Coloring> out;
  out.reserve(trials);
  for (int i = 0; i < trials; ++i) {
    std::mt19937_64 rng(detail::mix(seed ^ detail::mix(static_cast<std::uint64_t>(i))));
    Coloring c;
    c.provenance = static_cast<std::uint64_t>(i);
    c.color.resize(n);
    for (int v = 0; v < n; ++v) c.color[v] = static_cast<std::uint8_t>(rng() & 1);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Coloring> deterministic_colorings(int n) {
  if (n > kDeterministicColoringCap)
    throw std::invalid_argument("deterministic_colorings: n exceeds the cap");
  std::vector<std::vector<std::uint8_t>> family;
  if (n <= 4) {
    std::vector<std::uint8_t> id(n);
    for (int v = 0; v < n; ++v) id[v] = static_cast<std::uint8_t>(v);
    family.push_back(std::move(id));
  } else if (n <= 96) {
    family = greedy_family(n);
  } else {
    family = sampled_family(n);
  }
  // compose with all 16 maps {0..3} -> {C1,C2}; the member separating a
  // quadruple then realizes every color pattern on it
  std::vector<Coloring> out;
  out.reserve(family.size() * 16);
  std::uint64_t idx = 0;
  for (const auto& f : family)
    for (int mask = 0; mask < 16; ++mask) {
      Coloring c;
      c.provenance = idx++;
      c.color.resize(n);
      for (int v = 0; v < n; ++v)
        c.color[v] = static_cast<std::uint8_t>((mask >> f[v]) & 1);
      out.push_back(std::move(c));
    }
  return out;
}

}  // namespace mincycle
