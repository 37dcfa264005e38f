#include "clanforge/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "clanforge/error.hpp"
#include "clanforge/parallel.hpp"

namespace clanforge {

ScoreVector pagerank(const Graph& g, const PageRankOptions& options) {
  if (!(options.damping > 0.0 && options.damping < 1.0)) {
    fail(ErrorCode::InvalidArgument, "pagerank damping must lie in (0, 1)");
  }
  if (g.empty()) fail(ErrorCode::InvalidArgument, "pagerank of an empty graph");

  const std::size_t n = g.node_count();
  const double d = options.damping;
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> rank(n, inv_n), next(n), share(n);

  ScoreVector out;
  out.algorithm = "pagerank";
  out.damping = d;
  out.tolerance = options.tolerance;
  out.converged = false;

  for (std::size_t it = 0; it < options.max_iterations; ++it) {
    double dangling = 0.0;
    for (NodeIndex v = 0; v < n; ++v) {
      const std::size_t k = g.degree(v);
      if (k == 0) {
        dangling += rank[v];
        share[v] = 0.0;
      } else {
        share[v] = rank[v] / static_cast<double>(k);
      }
    }
    const double base = (1.0 - d) * inv_n + d * dangling * inv_n;
    double total = 0.0;
    for (NodeIndex v = 0; v < n; ++v) {
      double in = 0.0;
      for (NodeIndex u : g.neighbors(v)) in += share[u];
      next[v] = base + d * in;
      total += next[v];
    }
    double delta = 0.0;
    for (NodeIndex v = 0; v < n; ++v) {
      next[v] /= total;
      delta += std::abs(next[v] - rank[v]);
    }
    rank.swap(next);
    out.iterations = it + 1;
    out.final_delta = delta;
    if (delta < options.tolerance) {
      out.converged = true;
      break;
    }
  }
  out.scores = std::move(rank);
  return out;
}

namespace {

// Sources are split into a fixed number of chunks regardless of the thread
// count, so the floating-point reduction order never changes.
constexpr std::size_t kBetweennessChunks = 64;

void accumulate_source(const Graph& g, NodeIndex s, std::vector<double>& acc,
                       std::vector<std::int64_t>& dist, std::vector<double>& sigma,
                       std::vector<double>& delta, std::vector<NodeIndex>& order) {
  std::fill(dist.begin(), dist.end(), -1);
  std::fill(sigma.begin(), sigma.end(), 0.0);
  std::fill(delta.begin(), delta.end(), 0.0);
  order.clear();
  dist[s] = 0;
  sigma[s] = 1.0;
  order.push_back(s);
  for (std::size_t head = 0; head < order.size(); ++head) {
    NodeIndex u = order[head];
    for (NodeIndex v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        order.push_back(v);
      }
      if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
    }
  }
  // Reverse BFS order visits every node after all of its successors.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeIndex w = *it;
    for (NodeIndex v : g.neighbors(w)) {
      if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
    }
    if (w != s) acc[w] += delta[w];
  }
}

}  // namespace

ScoreVector betweenness(const Graph& g, bool normalized) {
  const std::size_t n = g.node_count();
  const std::size_t chunks = std::min(kBetweennessChunks, std::max<std::size_t>(n, 1));
  const std::size_t per_chunk = (n + chunks - 1) / chunks;
  std::vector<std::vector<double>> partial(chunks, std::vector<double>(n, 0.0));

  parallel_for(chunks, [&](std::size_t c) {
    std::vector<std::int64_t> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<NodeIndex> order;
    order.reserve(n);
    const std::size_t end = std::min(n, (c + 1) * per_chunk);
    for (std::size_t s = c * per_chunk; s < end; ++s) {
      accumulate_source(g, static_cast<NodeIndex>(s), partial[c], dist, sigma, delta, order);
    }
  });

  ScoreVector out;
  out.algorithm = "betweenness";
  out.normalized = normalized;
  out.scores.assign(n, 0.0);
  for (const auto& p : partial) {
    for (std::size_t v = 0; v < n; ++v) out.scores[v] += p[v];
  }
  double scale = 0.5;  // every unordered pair was visited from both ends
  if (normalized && n > 2) {
    scale /= static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
  }
  for (double& x : out.scores) x *= scale;
  return out;
}

std::vector<NodeIndex> rank_by_score(const std::vector<double>& scores) {
  std::vector<NodeIndex> order(scores.size());
  std::iota(order.begin(), order.end(), NodeIndex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&scores](NodeIndex a, NodeIndex b) { return scores[a] > scores[b]; });
  return order;
}

}  // namespace clanforge
