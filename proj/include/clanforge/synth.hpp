#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "clanforge/graph.hpp"
#include "clanforge/random.hpp"

namespace clanforge {

/// G(n, m): m distinct edges drawn uniformly without replacement from the
/// n(n-1)/2 unordered pairs. Node ids are 0..n-1.
Graph generate_uniform(std::size_t n, std::size_t m, std::uint64_t seed);

/// Degree sequence with P(k) proportional to k^-exponent on 1..n-1.
/// An odd total is made even by incrementing the first degree below n-1.
std::vector<std::size_t> sample_powerlaw_degrees(std::size_t n, double exponent, Rng& rng);

/// Configuration model over a power-law degree sequence. Stubs are shuffled
/// and paired in order; self-loops and repeated pairs are discarded rather
/// than rewired. Requires exponent > 2.
Graph generate_powerlaw(std::size_t n, double exponent, std::uint64_t seed);

}  // namespace clanforge
