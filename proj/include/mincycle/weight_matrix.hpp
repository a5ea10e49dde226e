#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace mincycle {

/// Square matrix over the (min,+) semiring. Entries are 64-bit integers with
/// a dedicated +infinity sentinel; additions involving the sentinel saturate,
/// so inf + negative stays inf.
class WeightMatrix {
 public:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

  WeightMatrix() = default;
  explicit WeightMatrix(int n, std::int64_t fill = kInf)
      : n_(n), a_(static_cast<std::size_t>(n) * n, fill) {}

  int size() const { return n_; }

  std::int64_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  std::int64_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  const std::int64_t* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * n_; }
  std::int64_t* row(int i) { return a_.data() + static_cast<std::size_t>(i) * n_; }

  static bool is_inf(std::int64_t v) { return v >= kInf; }

  /// Saturating semiring addition.
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    if (a >= kInf || b >= kInf) return kInf;
    return a + b;
  }

  /// Entrywise equality with all values >= kInf identified.
  friend bool operator==(const WeightMatrix& x, const WeightMatrix& y) {
    if (x.n_ != y.n_) return false;
    for (std::size_t i = 0; i < x.a_.size(); ++i) {
      std::int64_t a = x.a_[i], b = y.a_[i];
      if (a >= kInf && b >= kInf) continue;
      if (a != b) return false;
    }
    return true;
  }

 private:
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

}  // namespace mincycle
