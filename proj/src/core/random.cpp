#include "clanforge/random.hpp"

namespace clanforge {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection keeps the draw unbiased: values under `threshold` would make
  // the low residues more likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace clanforge
