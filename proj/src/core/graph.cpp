#include "clanforge/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "clanforge/error.hpp"

namespace clanforge {

namespace {

using IndexPair = std::pair<NodeIndex, NodeIndex>;

// Sorts, deduplicates, and returns how many entries were dropped.
std::size_t normalize_edges(std::vector<IndexPair>& edges) {
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  auto last = std::unique(edges.begin(), edges.end());
  std::size_t dropped = static_cast<std::size_t>(edges.end() - last);
  edges.erase(last, edges.end());
  return dropped;
}

}  // namespace

Graph::Graph(std::vector<CharId> ids, std::vector<IndexPair> unique_edges)
    : ids_(std::move(ids)) {
  const std::size_t n = ids_.size();
  if (n > std::numeric_limits<NodeIndex>::max()) {
    fail(ErrorCode::InvalidArgument, "graph too large for 32-bit node indices");
  }
  std::vector<std::size_t> deg(n, 0);
  for (const auto& [u, v] : unique_edges) {
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
  targets_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // unique_edges is sorted by (u, v), so both directions land in order.
  for (const auto& [u, v] : unique_edges) targets_[cursor[u]++] = v;
  for (const auto& [u, v] : unique_edges) targets_[cursor[v]++] = u;
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
              targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
  }
}

Graph Graph::build(std::span<const EdgePair> edges, std::span<const CharId> extra_nodes) {
  std::vector<CharId> ids;
  ids.reserve(edges.size() * 2 + extra_nodes.size());
  for (const auto& e : edges) {
    ids.push_back(e.a);
    ids.push_back(e.b);
  }
  ids.insert(ids.end(), extra_nodes.begin(), extra_nodes.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  auto index = [&ids](CharId id) {
    return static_cast<NodeIndex>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };

  IngestSummary summary;
  summary.pairs_read = edges.size();
  std::vector<IndexPair> pairs;
  pairs.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.a == e.b) {
      ++summary.self_loops;
      continue;
    }
    pairs.emplace_back(index(e.a), index(e.b));
  }
  summary.duplicates = normalize_edges(pairs);

  Graph g(std::move(ids), std::move(pairs));
  g.summary_ = summary;
  return g;
}

Graph Graph::from_index_pairs(std::size_t node_count, std::span<const IndexPair> pairs) {
  std::vector<CharId> ids(node_count);
  for (std::size_t i = 0; i < node_count; ++i) ids[i] = static_cast<CharId>(i);
  IngestSummary summary;
  summary.pairs_read = pairs.size();
  std::vector<IndexPair> kept;
  kept.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    if (u >= node_count || v >= node_count) {
      fail(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
    if (u == v) {
      ++summary.self_loops;
      continue;
    }
    kept.emplace_back(u, v);
  }
  summary.duplicates = normalize_edges(kept);
  Graph g(std::move(ids), std::move(kept));
  g.summary_ = summary;
  return g;
}

bool Graph::has_edge(NodeIndex u, NodeIndex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<NodeIndex> Graph::index_of(CharId id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<NodeIndex>(it - ids_.begin());
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(node_count());
  for (std::size_t v = 0; v < d.size(); ++v) d[v] = degree(static_cast<NodeIndex>(v));
  return d;
}

std::vector<IndexPair> Graph::index_edges() const {
  std::vector<IndexPair> out;
  out.reserve(edge_count());
  for (NodeIndex u = 0; u < node_count(); ++u) {
    for (NodeIndex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::remove_nodes(std::span<const NodeIndex> removed) const {
  std::vector<bool> drop(node_count(), false);
  for (NodeIndex v : removed) {
    if (v >= node_count()) {
      fail(ErrorCode::InvalidArgument, "node index " + std::to_string(v) + " out of range");
    }
    drop[v] = true;
  }
  NodeSet keep;
  keep.reserve(node_count());
  for (NodeIndex v = 0; v < node_count(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced(keep);
}

Graph Graph::induced(std::span<const NodeIndex> keep) const {
  constexpr NodeIndex kAbsent = std::numeric_limits<NodeIndex>::max();
  std::vector<NodeIndex> remap(node_count(), kAbsent);
  std::vector<NodeIndex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<CharId> ids;
  ids.reserve(sorted.size());
  for (NodeIndex v : sorted) {
    if (v >= node_count()) {
      fail(ErrorCode::InvalidArgument, "node index " + std::to_string(v) + " out of range");
    }
    remap[v] = static_cast<NodeIndex>(ids.size());
    ids.push_back(ids_[v]);
  }
  std::vector<IndexPair> edges;
  for (NodeIndex u : sorted) {
    for (NodeIndex v : neighbors(u)) {
      if (u < v && remap[v] != kAbsent) edges.emplace_back(remap[u], remap[v]);
    }
  }
  return Graph(std::move(ids), std::move(edges));
}

}  // namespace clanforge
