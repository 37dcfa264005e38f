#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "clanforge/graph.hpp"

namespace clanforge {

struct ScoreVector {
  std::vector<double> scores;  // indexed by node
  std::string algorithm;
  double damping = 0.0;        // pagerank only
  double tolerance = 0.0;      // pagerank only
  std::size_t iterations = 0;
  bool converged = true;
  double final_delta = 0.0;    // last L1 change (pagerank)
  bool normalized = false;     // betweenness only
};

struct PageRankOptions {
  double damping = 0.85;
  double tolerance = 1e-10;
  std::size_t max_iterations = 200;
};

/// Power iteration with each undirected edge read as two directed links.
/// Degree-0 nodes spread their mass uniformly. Stops once the L1 change
/// drops below the tolerance; hitting max_iterations returns the current
/// vector with `converged == false`.
ScoreVector pagerank(const Graph& g, const PageRankOptions& options = {});

/// Exact betweenness by dependency accumulation over every source, with each
/// unordered pair counted once. Normalised scores divide by (n-1)(n-2)/2.
ScoreVector betweenness(const Graph& g, bool normalized = false);

/// Node indices ordered by descending score; ties by ascending index (and
/// therefore ascending character id).
std::vector<NodeIndex> rank_by_score(const std::vector<double>& scores);

}  // namespace clanforge
