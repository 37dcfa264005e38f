#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "clanforge/graph.hpp"
#include "clanforge/partition.hpp"
#include "clanforge/players.hpp"

namespace clanforge {

inline constexpr double kDefaultTeleport = 0.15;

struct MapScore {
  double codelength = 0.0;         // bits, index + module
  double index_codelength = 0.0;
  double module_codelength = 0.0;
};

/// Two-level map equation
///   L(M) = q H(Q) + sum_i p_i H(P^i)
/// for an undirected graph. Node visit rates are PageRank with damping
/// 1 - teleport; a link u->v carries flow p_u / k_u, and module exit and
/// enter rates are the flows crossing the module boundary. Teleportation
/// steps are not coded.
MapScore map_equation(const Graph& g, const Partition& p, double teleport = kDefaultTeleport);

struct DetectionResult {
  Partition partition;
  double codelength = 0.0;
  /// Codelength after every accepted move, in order.
  std::vector<double> trace;
  std::size_t levels = 0;
};

inline constexpr double kMinCodelengthGain = 1e-10;

/// Greedy agglomerative map-equation optimisation: singletons, then seeded
/// random-order local moves to the neighbouring module with the largest
/// codelength decrease, then aggregation into super-nodes, until no move
/// gains more than kMinCodelengthGain bits. Deterministic for a given seed.
DetectionResult detect_communities_traced(const Graph& g, std::uint64_t seed,
                                          double teleport = kDefaultTeleport);

inline Partition detect_communities(const Graph& g, std::uint64_t seed,
                                    double teleport = kDefaultTeleport) {
  return detect_communities_traced(g, seed, teleport).partition;
}

enum class NmiNorm { Mean, Max };

/// Normalised mutual information (natural logarithms). Mean normalisation is
/// 2I / (H1 + H2), max normalisation I / max(H1, H2). Two zero-entropy
/// partitions score 1. Throws InvalidArgument on a size mismatch.
double nmi(std::span<const BlockId> a, std::span<const BlockId> b, NmiNorm norm = NmiNorm::Mean);

inline double nmi(const Partition& a, const Partition& b, NmiNorm norm = NmiNorm::Mean) {
  return nmi(a.blocks(), b.blocks(), norm);
}

enum class ClanlessPolicy { Singleton, Drop, OneBlock };

struct NodePartition {
  NodeSet nodes;        // graph indices covered, ascending
  Partition partition;  // item i describes nodes[i]
};

/// Clan membership as a partition over `nodes` (every graph node when
/// empty). Characters without a record count as clanless.
NodePartition clans_to_partition(const Graph& g, const PlayerTable& players,
                                 ClanlessPolicy policy, std::span<const NodeIndex> nodes = {});

}  // namespace clanforge
