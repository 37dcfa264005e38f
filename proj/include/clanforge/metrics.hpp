#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "clanforge/graph.hpp"
#include "clanforge/partition.hpp"

namespace clanforge {

struct DegreePoint {
  std::size_t degree = 0;
  double fraction = 0.0;
};

struct DegreeDistribution {
  std::vector<DegreePoint> pmf;   // observed degrees, ascending
  std::vector<DegreePoint> ccdf;  // fraction of nodes with degree >= k
  double mean_degree = 0.0;       // 2m / n
};

/// Throws Domain on an empty graph.
DegreeDistribution degree_distribution(const Graph& g);

struct ComponentReport {
  Partition partition;  // block ids by first appearance in index order
  BlockId largest_block = 0;
  std::size_t largest_size = 0;
  std::size_t largest_edge_count = 0;

  NodeSet largest_nodes() const;
};

ComponentReport connected_components(const Graph& g);

/// Local clustering of one node; 0 when degree < 2.
double local_clustering(const Graph& g, NodeIndex v);

/// Mean local clustering over all nodes.
double average_clustering(const Graph& g);

enum class PathMode { Exact, Sampled };

struct PathOptions {
  PathMode mode = PathMode::Exact;
  std::size_t sample_sources = 200;
  std::uint64_t seed = 0;
};

/// Mean hop distance over pairs of the subgraph induced by `nodes`.
/// Exact mode averages every unordered pair; sampled mode averages the pairs
/// (s, v) for `sample_sources` distinct seeded sources s. Throws Disconnected
/// naming an unreachable pair, and Domain for fewer than two nodes.
double average_shortest_path(const Graph& g, std::span<const NodeIndex> nodes,
                             const PathOptions& options = {});

struct SmallWorldThresholds {
  double path_factor = 2.0;        // measured <d> <= factor * ln n / ln <k>
  double clustering_factor = 10.0; // measured C >= factor * random C
};

struct SmallWorldReport {
  double measured_avg_path = 0.0;
  double expected_avg_path = 0.0;
  double measured_clustering = 0.0;
  double random_clustering = 0.0;
  bool verdict = false;
};

/// Pure form of the small-world test. Throws Domain when mean_degree <= 1.
SmallWorldReport assess_small_world(std::size_t node_count, double mean_degree,
                                    double measured_avg_path, double measured_clustering,
                                    double random_clustering,
                                    const SmallWorldThresholds& thresholds = {});

/// Measures clustering on the whole graph and the average path on its largest
/// component, then applies assess_small_world with the graph's n and <k>.
SmallWorldReport small_world_report(const Graph& g, double random_clustering,
                                    const PathOptions& path = {},
                                    const SmallWorldThresholds& thresholds = {});

}  // namespace clanforge
