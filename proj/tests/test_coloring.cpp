#include <doctest.h>

#include <cmath>
#include <random>

#include "mincycle/coloring.hpp"

using namespace mincycle;

TEST_CASE("trial count formula") {
  CHECK(default_coloring_trials(64) == 200);  // ceil(48 ln 64)
  CHECK(default_coloring_trials(2) == static_cast<int>(std::ceil(48 * std::log(2.0))));
  CHECK(default_coloring_trials(1) == default_coloring_trials(2));
}

TEST_CASE("sampled colorings are seed-deterministic") {
  auto a = sample_colorings(20, 50, 7);
  auto b = sample_colorings(20, 50, 7);
  REQUIRE(a.size() == 50);
  for (int i = 0; i < 50; ++i) CHECK(a[i].color == b[i].color);
  auto c = sample_colorings(20, 50, 8);
  bool any_diff = false;
  for (int i = 0; i < 50; ++i) any_diff = any_diff || a[i].color != c[i].color;
  CHECK(any_diff);
}

TEST_CASE("witness pattern frequency is about 1/16") {
  const int trials = 100000;
  int hits = 0;
  for (const Coloring& chi : sample_colorings(8, trials, 3))
    if (chi.is_c1(0) && chi.is_c2(2) && chi.is_c2(5) && chi.is_c1(7)) ++hits;
  const double f = static_cast<double>(hits) / trials;
  CHECK(std::abs(f - 1.0 / 16.0) <= 0.005);
}

TEST_CASE("deterministic family realizes all patterns on n=4") {
  auto fam = deterministic_colorings(4);
  CHECK(fam.size() % 16 == 0);
  bool seen[16] = {};
  for (const Coloring& chi : fam) {
    int pattern = 0;
    for (int v = 0; v < 4; ++v) pattern |= chi.is_c2(v) << v;
    seen[pattern] = true;
  }
  for (bool s : seen) CHECK(s);
}

TEST_CASE("deterministic family hits the gate pattern on random quadruples") {
  auto fam = deterministic_colorings(10);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 1000; ++trial) {
    int q[4];
    for (int i = 0; i < 4; ++i) {
      bool fresh;
      do {
        q[i] = static_cast<int>(rng() % 10);
        fresh = true;
        for (int j = 0; j < i; ++j) fresh = fresh && q[j] != q[i];
      } while (!fresh);
    }
    bool realized = false;
    for (const Coloring& chi : fam)
      if (chi.is_c1(q[0]) && chi.is_c2(q[1]) && chi.is_c2(q[2]) && chi.is_c1(q[3])) {
        realized = true;
        break;
      }
    CHECK(realized);
  }
}
