#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "clanforge/community.hpp"
#include "clanforge/graph.hpp"
#include "clanforge/partition.hpp"
#include "clanforge/players.hpp"

namespace clanforge {

/// Clan capacities and standings. Sizes count every member in the player
/// table, including characters outside the friendship graph.
struct ClanTable {
  std::map<ClanId, std::size_t> sizes;
  std::map<ClanId, double> points;

  static ClanTable from_players(const PlayerTable& players);
};

struct RecommendConfig {
  std::size_t max_clan_size = 0;            // required, >= 1
  std::optional<double> points_balance;     // reject clans with more points
  std::size_t max_rounds = 100;
  std::uint64_t seed = 0;                   // community re-detection
  double teleport = kDefaultTeleport;
  bool reuse_partition = false;             // restrict instead of re-detect
};

enum class Outcome { Clan, AlreadyInClan, NoRecommendation };

enum class NoRecommendationReason { None, NoCommunitySignal, NoClanInCommunity, MaxRoundsExhausted };

const char* to_string(Outcome o);
const char* to_string(NoRecommendationReason r);

struct Recommendation {
  CharId player = 0;
  Outcome outcome = Outcome::NoRecommendation;
  std::optional<ClanId> clan;
  NoRecommendationReason reason = NoRecommendationReason::None;
  std::size_t rounds_used = 0;
  std::vector<ClanId> rejected;  // full or over-balance clans, in order
};

/// Community-based clan recommendation with full-clan removal and retry.
///
/// A clanless player is offered the clan with the most members in the
/// player's community (clanless members do not vote; ties go to the lower
/// clan id). A clan at or above max_clan_size, or above points_balance when
/// configured, has all of its members removed from a per-query residual copy
/// of the graph; the player's community is then recomputed and the count
/// repeated.
///
/// Residual graphs and their communities depend only on the set of removed
/// clans, so they are cached across queries. Results never depend on query
/// order.
class Recommender {
public:
  Recommender(const Graph& g, const PlayerTable& players, ClanTable clans,
              Partition communities, RecommendConfig config);
  ~Recommender();

  Recommendation recommend(CharId player);

  /// One recommendation per clanless graph node, ascending by id.
  std::vector<Recommendation> recommend_all();

  const Partition& communities() const;

private:
  struct Residual;
  const Residual& residual(const std::vector<ClanId>& removed);

  const Graph& graph_;
  const PlayerTable& players_;
  ClanTable clans_;
  Partition communities_;
  RecommendConfig config_;
  std::map<std::vector<ClanId>, std::unique_ptr<Residual>> cache_;
};

Recommendation recommend_clan(const Graph& g, const PlayerTable& players,
                              const Partition& communities, const ClanTable& clans,
                              CharId player, const RecommendConfig& config);

/// Detects communities once (when not supplied) and recommends for every
/// clanless node of the graph.
std::vector<Recommendation> batch_recommend(const Graph& g, const PlayerTable& players,
                                            const ClanTable& clans,
                                            const RecommendConfig& config,
                                            std::optional<Partition> communities = std::nullopt);

}  // namespace clanforge
