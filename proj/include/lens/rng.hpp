#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "lens/types.hpp"

namespace lens {

/// Deterministic 64-bit generator (splitmix64 increment/mix). Pure integer
/// arithmetic, so streams are identical across platforms and compilers.
/// Substreams derived with split(tag) depend only on (seed, tag), never on
/// how much of the parent stream was consumed.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : seed_(seed), state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  SplitMix64 split(uint64_t tag) const {
    SplitMix64 mixer(seed_ ^ (0xd1b54a32d192ed03ull * (tag + 1)));
    return SplitMix64(mixer.next());
  }

  /// Uniform in [0, bound) without modulo bias.
  uint64_t below(uint64_t bound) {
    if (bound == 0) return 0;
    const uint64_t limit = bound * (UINT64_MAX / bound);
    uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = uniform();
    while (u <= 0.0) u = uniform();
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    spare_ = r * std::sin(2.0 * std::numbers::pi * v);
    have_spare_ = true;
    return r * std::cos(2.0 * std::numbers::pi * v);
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

  /// k distinct indices drawn from [0, n), in draw order.
  std::vector<size_t> sample_without_replacement(size_t n, size_t k) {
    std::vector<size_t> pool(n);
    for (size_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<size_t> out;
    out.reserve(k);
    for (size_t i = 0; i < k && !pool.empty(); ++i) {
      const size_t j = below(pool.size());
      out.push_back(pool[j]);
      pool[j] = pool.back();
      pool.pop_back();
    }
    return out;
  }

  Mat normal_matrix(Index rows, Index cols, Scalar scale) {
    Mat m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j)
        m(i, j) = scale * static_cast<Scalar>(normal());
    return m;
  }

  Vec normal_vector(Index n, Scalar scale) {
    Vec v(n);
    for (Index i = 0; i < n; ++i) v(i) = scale * static_cast<Scalar>(normal());
    return v;
  }

 private:
  uint64_t seed_;
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace lens
