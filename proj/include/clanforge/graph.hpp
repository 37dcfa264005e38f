#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace clanforge {

using NodeIndex = std::uint32_t;
using CharId = std::int64_t;

// Internal node indices; any order, duplicates are tolerated by consumers.
using NodeSet = std::vector<NodeIndex>;

struct EdgePair {
  CharId a = 0;
  CharId b = 0;
  friend bool operator==(const EdgePair&, const EdgePair&) = default;
};

struct IngestSummary {
  std::size_t pairs_read = 0;
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;  // repeated or reversed pairs collapsed
};

/// Immutable undirected simple graph in compressed sparse row form.
///
/// Node indices are assigned by ascending external character id, so index
/// order and id order coincide. Every tie rule downstream that is phrased in
/// terms of "ascending id" can therefore compare indices directly.
class Graph {
public:
  Graph() = default;

  /// Builds from character-id pairs. Self-loops are dropped but their id
  /// still becomes a node; repeated and reversed pairs collapse.
  static Graph build(std::span<const EdgePair> edges,
                     std::span<const CharId> extra_nodes = {});

  /// Builds over ids 0..n-1 from index pairs (used by the generators).
  static Graph from_index_pairs(std::size_t node_count,
                                std::span<const std::pair<NodeIndex, NodeIndex>> pairs);

  std::size_t node_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }
  bool empty() const noexcept { return ids_.empty(); }

  std::span<const NodeIndex> neighbors(NodeIndex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeIndex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeIndex u, NodeIndex v) const;

  CharId id_of(NodeIndex v) const { return ids_[v]; }
  std::optional<NodeIndex> index_of(CharId id) const;
  std::span<const CharId> ids() const noexcept { return ids_; }

  std::vector<std::size_t> degrees() const;

  /// Edges as index pairs with first < second, in ascending order.
  std::vector<std::pair<NodeIndex, NodeIndex>> index_edges() const;

  /// Copy without the given nodes; remaining nodes keep their external ids.
  Graph remove_nodes(std::span<const NodeIndex> removed) const;

  /// Subgraph induced by `keep`.
  Graph induced(std::span<const NodeIndex> keep) const;

  const IngestSummary& ingest_summary() const noexcept { return summary_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.ids_ == b.ids_ && a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

private:
  Graph(std::vector<CharId> ids,
        std::vector<std::pair<NodeIndex, NodeIndex>> unique_edges);

  std::vector<CharId> ids_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeIndex> targets_;
  IngestSummary summary_;
};

inline Graph build_graph(std::span<const EdgePair> edges) { return Graph::build(edges); }

}  // namespace clanforge
