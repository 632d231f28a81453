#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace ncsp {

/// mt19937_64 with bounded draws and shuffles defined here rather than by the
/// standard library's distributions, so fixed seeds give the same instances on
/// every toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform in [lo, hi].
  long long between(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return (engine_() >> 63) != 0; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t j = v.size(); j > 1; --j) std::swap(v[j - 1], v[below(j)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ncsp
