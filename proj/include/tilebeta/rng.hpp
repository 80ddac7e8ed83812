#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace tilebeta {

/// Reproducible generator: mt19937_64 with explicit rejection sampling, so
/// identical seeds give identical draws on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  static std::string name() { return "mt19937_64/rejection"; }

  std::uint64_t next() { return eng_(); }

  /// Uniform draw from [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform draw from [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace tilebeta
