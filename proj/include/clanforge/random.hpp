#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace clanforge {

/// Seeded generator with a fully specified output stream.
///
/// The engine is std::mt19937_64, whose sequence the standard fixes exactly.
/// The standard distributions are implementation-defined, so integer and
/// real draws are derived here from raw engine output instead.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform real in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace clanforge
