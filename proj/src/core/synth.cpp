#include "clanforge/synth.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "clanforge/error.hpp"

namespace clanforge {

namespace {

using IndexPair = std::pair<NodeIndex, NodeIndex>;

std::uint64_t pair_key(NodeIndex u, NodeIndex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

IndexPair random_pair(std::size_t n, Rng& rng) {
  while (true) {
    auto u = static_cast<NodeIndex>(rng.below(n));
    auto v = static_cast<NodeIndex>(rng.below(n));
    if (u != v) return u < v ? IndexPair{u, v} : IndexPair{v, u};
  }
}

}  // namespace

Graph generate_uniform(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "generator needs n >= 1");
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > pairs) {
    fail(ErrorCode::InvalidArgument, "m = " + std::to_string(m) + " exceeds the " +
                                         std::to_string(pairs) + " available pairs");
  }
  Rng rng(seed);
  std::vector<IndexPair> edges;
  edges.reserve(m);
  if (m <= pairs / 2) {
    std::unordered_set<std::uint64_t> taken;
    taken.reserve(m * 2);
    while (edges.size() < m) {
      auto e = random_pair(n, rng);
      if (taken.insert(pair_key(e.first, e.second)).second) edges.push_back(e);
    }
  } else {
    // Dense case: draw the complement instead, then enumerate what is left.
    std::unordered_set<std::uint64_t> excluded;
    while (excluded.size() < pairs - m) {
      auto e = random_pair(n, rng);
      excluded.insert(pair_key(e.first, e.second));
    }
    for (NodeIndex u = 0; u < n; ++u) {
      for (NodeIndex v = u + 1; v < n; ++v) {
        if (!excluded.contains(pair_key(u, v))) edges.emplace_back(u, v);
      }
    }
  }
  return Graph::from_index_pairs(n, edges);
}

std::vector<std::size_t> sample_powerlaw_degrees(std::size_t n, double exponent, Rng& rng) {
  std::vector<std::size_t> degrees(n, 0);
  if (n < 2) return degrees;
  const std::size_t kmax = n - 1;
  std::vector<double> cdf(kmax);
  double total = 0.0;
  for (std::size_t k = 1; k <= kmax; ++k) {
    total += std::pow(static_cast<double>(k), -exponent);
    cdf[k - 1] = total;
  }
  std::size_t sum = 0;
  for (auto& d : degrees) {
    const double u = rng.unit() * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    d = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()) + 1, kmax);
    sum += d;
  }
  if (sum % 2 == 1) {
    auto it = std::find_if(degrees.begin(), degrees.end(), [kmax](auto d) { return d < kmax; });
    if (it != degrees.end()) {
      ++*it;
    } else {
      --degrees.front();
    }
  }
  return degrees;
}

Graph generate_powerlaw(std::size_t n, double exponent, std::uint64_t seed) {
  if (!(exponent > 2.0)) {
    fail(ErrorCode::InvalidArgument, "power-law exponent must exceed 2");
  }
  if (n == 0) fail(ErrorCode::InvalidArgument, "generator needs n >= 1");
  Rng rng(seed);
  const auto degrees = sample_powerlaw_degrees(n, exponent, rng);
  std::vector<NodeIndex> stubs;
  for (NodeIndex v = 0; v < n; ++v) stubs.insert(stubs.end(), degrees[v], v);
  rng.shuffle(std::span<NodeIndex>(stubs));
  std::vector<IndexPair> edges;
  edges.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) edges.emplace_back(stubs[i], stubs[i + 1]);
  // from_index_pairs drops the self-loops and collapses the multi-edges
  return Graph::from_index_pairs(n, edges);
}

}  // namespace clanforge
