#include "clanforge/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "clanforge/error.hpp"
#include "clanforge/parallel.hpp"
#include "clanforge/random.hpp"

namespace clanforge {

DegreeDistribution degree_distribution(const Graph& g) {
  if (g.empty()) fail(ErrorCode::Domain, "degree distribution of an empty graph");
  std::map<std::size_t, std::size_t> counts;
  for (NodeIndex v = 0; v < g.node_count(); ++v) ++counts[g.degree(v)];

  const double n = static_cast<double>(g.node_count());
  DegreeDistribution dist;
  dist.mean_degree = 2.0 * static_cast<double>(g.edge_count()) / n;
  std::size_t at_least = g.node_count();
  for (const auto& [k, c] : counts) {
    dist.pmf.push_back({k, static_cast<double>(c) / n});
    dist.ccdf.push_back({k, static_cast<double>(at_least) / n});
    at_least -= c;
  }
  return dist;
}

NodeSet ComponentReport::largest_nodes() const {
  NodeSet out;
  for (std::size_t v = 0; v < partition.size(); ++v) {
    if (partition.block_of(v) == largest_block) out.push_back(static_cast<NodeIndex>(v));
  }
  return out;
}

ComponentReport connected_components(const Graph& g) {
  constexpr BlockId kUnset = std::numeric_limits<BlockId>::max();
  const std::size_t n = g.node_count();
  std::vector<BlockId> label(n, kUnset);
  std::vector<std::size_t> sizes;
  std::vector<NodeIndex> stack;
  for (NodeIndex s = 0; s < n; ++s) {
    if (label[s] != kUnset) continue;
    const auto block = static_cast<BlockId>(sizes.size());
    sizes.push_back(0);
    label[s] = block;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeIndex u = stack.back();
      stack.pop_back();
      ++sizes[block];
      for (NodeIndex v : g.neighbors(u)) {
        if (label[v] == kUnset) {
          label[v] = block;
          stack.push_back(v);
        }
      }
    }
  }

  ComponentReport report;
  if (!sizes.empty()) {
    auto largest = std::max_element(sizes.begin(), sizes.end());
    report.largest_block = static_cast<BlockId>(largest - sizes.begin());
    report.largest_size = *largest;
  }
  std::size_t twice_edges = 0;
  for (NodeIndex v = 0; v < n; ++v) {
    if (label[v] == report.largest_block) twice_edges += g.degree(v);
  }
  report.largest_edge_count = twice_edges / 2;
  report.partition = Partition(std::move(label));
  return report;
}

double local_clustering(const Graph& g, NodeIndex v) {
  const auto nb = g.neighbors(v);
  const std::size_t k = nb.size();
  if (k < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t i = 0; i < k; ++i) {
    // count neighbours of nb[i] that are in nb and greater than nb[i]
    auto other = g.neighbors(nb[i]);
    auto a = std::upper_bound(nb.begin(), nb.end(), nb[i]);
    auto b = std::upper_bound(other.begin(), other.end(), nb[i]);
    while (a != nb.end() && b != other.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++links;
        ++a;
        ++b;
      }
    }
  }
  return 2.0 * static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
}

double average_clustering(const Graph& g) {
  if (g.empty()) return 0.0;
  double sum = 0.0;
  for (NodeIndex v = 0; v < g.node_count(); ++v) sum += local_clustering(g, v);
  return sum / static_cast<double>(g.node_count());
}

namespace {

struct SourceResult {
  std::uint64_t distance_sum = 0;
  std::size_t reached = 0;
  NodeIndex unreachable = 0;
};

SourceResult bfs_from(const Graph& g, NodeIndex source, std::vector<std::uint32_t>& dist,
                      std::vector<NodeIndex>& queue) {
  constexpr auto kInf = std::numeric_limits<std::uint32_t>::max();
  std::fill(dist.begin(), dist.end(), kInf);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  SourceResult r;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeIndex u = queue[head];
    r.distance_sum += dist[u];
    for (NodeIndex v : g.neighbors(u)) {
      if (dist[v] == kInf) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  r.reached = queue.size();
  if (r.reached < g.node_count()) {
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      if (dist[v] == kInf) {
        r.unreachable = v;
        break;
      }
    }
  }
  return r;
}

}  // namespace

double average_shortest_path(const Graph& g, std::span<const NodeIndex> nodes,
                             const PathOptions& options) {
  const Graph sub = g.induced(nodes);
  const std::size_t n = sub.node_count();
  if (n < 2) fail(ErrorCode::Domain, "average shortest path needs at least two nodes");

  std::vector<NodeIndex> sources(n);
  std::iota(sources.begin(), sources.end(), NodeIndex{0});
  if (options.mode == PathMode::Sampled && options.sample_sources < n) {
    if (options.sample_sources == 0) {
      fail(ErrorCode::InvalidArgument, "sampled path mode needs at least one source");
    }
    Rng rng(options.seed);
    // partial Fisher-Yates: the first k slots become a uniform k-subset
    for (std::size_t i = 0; i < options.sample_sources; ++i) {
      std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
      std::swap(sources[i], sources[j]);
    }
    sources.resize(options.sample_sources);
    std::sort(sources.begin(), sources.end());
  }

  std::vector<SourceResult> results(sources.size());
  const std::size_t workers = std::min<std::size_t>(thread_limit(), sources.size());
  // one scratch buffer pair per worker slot, claimed by chunk
  const std::size_t chunk = (sources.size() + workers - 1) / workers;
  parallel_for(workers, [&](std::size_t w) {
    std::vector<std::uint32_t> dist(n);
    std::vector<NodeIndex> queue;
    queue.reserve(n);
    const std::size_t end = std::min(sources.size(), (w + 1) * chunk);
    for (std::size_t i = w * chunk; i < end; ++i) {
      results[i] = bfs_from(sub, sources[i], dist, queue);
    }
  });

  long double total = 0;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (results[i].reached < n) {
      fail(ErrorCode::Disconnected,
           "node set is disconnected: no path between " +
               std::to_string(sub.id_of(sources[i])) + " and " +
               std::to_string(sub.id_of(results[i].unreachable)));
    }
    total += static_cast<long double>(results[i].distance_sum);
  }
  const long double pairs =
      static_cast<long double>(sources.size()) * static_cast<long double>(n - 1);
  return static_cast<double>(total / pairs);
}

SmallWorldReport assess_small_world(std::size_t node_count, double mean_degree,
                                    double measured_avg_path, double measured_clustering,
                                    double random_clustering,
                                    const SmallWorldThresholds& thresholds) {
  if (!(mean_degree > 1.0)) {
    fail(ErrorCode::Domain, "small-world test needs mean degree > 1 (got " +
                                std::to_string(mean_degree) + ")");
  }
  SmallWorldReport r;
  r.measured_avg_path = measured_avg_path;
  r.expected_avg_path = std::log(static_cast<double>(node_count)) / std::log(mean_degree);
  r.measured_clustering = measured_clustering;
  r.random_clustering = random_clustering;
  r.verdict = measured_avg_path <= thresholds.path_factor * r.expected_avg_path &&
              measured_clustering >= thresholds.clustering_factor * random_clustering;
  return r;
}

SmallWorldReport small_world_report(const Graph& g, double random_clustering,
                                    const PathOptions& path,
                                    const SmallWorldThresholds& thresholds) {
  const auto dist = degree_distribution(g);
  if (!(dist.mean_degree > 1.0)) {
    fail(ErrorCode::Domain, "small-world test needs mean degree > 1");
  }
  const auto components = connected_components(g);
  const double avg_path = average_shortest_path(g, components.largest_nodes(), path);
  return assess_small_world(g.node_count(), dist.mean_degree, avg_path, average_clustering(g),
                            random_clustering, thresholds);
}

}  // namespace clanforge
