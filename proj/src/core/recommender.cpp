#include "clanforge/recommender.hpp"

#include <algorithm>
#include <string>

#include "clanforge/error.hpp"

namespace clanforge {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Clan: return "clan";
    case Outcome::AlreadyInClan: return "already-in-clan";
    case Outcome::NoRecommendation: return "no-recommendation";
  }
  return "?";
}

const char* to_string(NoRecommendationReason r) {
  switch (r) {
    case NoRecommendationReason::None: return "";
    case NoRecommendationReason::NoCommunitySignal: return "no-community-signal";
    case NoRecommendationReason::NoClanInCommunity: return "no-clan-in-community";
    case NoRecommendationReason::MaxRoundsExhausted: return "max-rounds-exhausted";
  }
  return "?";
}

ClanTable ClanTable::from_players(const PlayerTable& players) {
  ClanTable t;
  for (const auto& r : players.records()) {
    if (r.clan_id) ++t.sizes[*r.clan_id];
  }
  return t;
}

struct Recommender::Residual {
  Graph graph;
  std::vector<std::optional<ClanId>> clan;  // per residual node
  Partition communities;
  std::vector<std::vector<NodeIndex>> members;
};

Recommender::Recommender(const Graph& g, const PlayerTable& players, ClanTable clans,
                         Partition communities, RecommendConfig config)
    : graph_(g),
      players_(players),
      clans_(std::move(clans)),
      communities_(std::move(communities)),
      config_(config) {
  if (config_.max_clan_size < 1) fail(ErrorCode::InvalidArgument, "max_clan_size must be >= 1");
  if (config_.max_rounds < 1) fail(ErrorCode::InvalidArgument, "max_rounds must be >= 1");
  if (communities_.size() != g.node_count()) {
    fail(ErrorCode::InvalidArgument, "community partition does not cover the graph");
  }
}

Recommender::~Recommender() = default;

const Partition& Recommender::communities() const { return communities_; }

const Recommender::Residual& Recommender::residual(const std::vector<ClanId>& removed) {
  auto it = cache_.find(removed);
  if (it != cache_.end()) return *it->second;

  auto r = std::make_unique<Residual>();
  NodeSet keep;
  for (NodeIndex v = 0; v < graph_.node_count(); ++v) {
    auto clan = players_.clan_of(graph_.id_of(v));
    if (!clan || !std::binary_search(removed.begin(), removed.end(), *clan)) keep.push_back(v);
  }
  if (removed.empty()) {
    r->graph = graph_;
    r->communities = communities_;
  } else {
    r->graph = graph_.induced(keep);
    r->communities = config_.reuse_partition
                         ? restrict_partition(communities_, keep)
                         : detect_communities(r->graph, config_.seed, config_.teleport);
  }
  r->clan.reserve(r->graph.node_count());
  for (NodeIndex v = 0; v < r->graph.node_count(); ++v) {
    r->clan.push_back(players_.clan_of(r->graph.id_of(v)));
  }
  r->members = r->communities.members();
  return *cache_.emplace(removed, std::move(r)).first->second;
}

Recommendation Recommender::recommend(CharId player) {
  if (!graph_.index_of(player)) {
    fail(ErrorCode::NotFound, "player " + std::to_string(player) + " is not in the graph");
  }
  Recommendation rec;
  rec.player = player;
  if (auto clan = players_.clan_of(player)) {
    rec.outcome = Outcome::AlreadyInClan;
    rec.clan = clan;
    return rec;
  }

  std::vector<ClanId> removed;
  for (std::size_t round = 1; round <= config_.max_rounds; ++round) {
    rec.rounds_used = round;
    const Residual& r = residual(removed);
    // A clanless player is never removed, so the lookup always succeeds.
    const NodeIndex p = *r.graph.index_of(player);

    std::map<ClanId, std::size_t> votes;
    for (NodeIndex v : r.members[r.communities.block_of(p)]) {
      if (v != p && r.clan[v]) ++votes[*r.clan[v]];
    }
    if (votes.empty()) {
      rec.outcome = Outcome::NoRecommendation;
      rec.reason = r.graph.degree(p) == 0 ? NoRecommendationReason::NoCommunitySignal
                                          : NoRecommendationReason::NoClanInCommunity;
      return rec;
    }
    ClanId best = votes.begin()->first;
    std::size_t best_votes = 0;
    for (const auto& [clan, count] : votes) {
      if (count > best_votes) {
        best = clan;
        best_votes = count;
      }
    }

    const auto size_it = clans_.sizes.find(best);
    const std::size_t size = size_it == clans_.sizes.end() ? 0 : size_it->second;
    bool rejected = size >= config_.max_clan_size;
    if (config_.points_balance) {
      auto pts = clans_.points.find(best);
      if (pts != clans_.points.end() && pts->second > *config_.points_balance) rejected = true;
    }
    if (!rejected) {
      rec.outcome = Outcome::Clan;
      rec.clan = best;
      return rec;
    }
    rec.rejected.push_back(best);
    removed.insert(std::upper_bound(removed.begin(), removed.end(), best), best);
  }
  rec.outcome = Outcome::NoRecommendation;
  rec.reason = NoRecommendationReason::MaxRoundsExhausted;
  return rec;
}

std::vector<Recommendation> Recommender::recommend_all() {
  std::vector<Recommendation> out;
  for (NodeIndex v = 0; v < graph_.node_count(); ++v) {
    const CharId id = graph_.id_of(v);
    if (!players_.clan_of(id)) out.push_back(recommend(id));
  }
  return out;
}

Recommendation recommend_clan(const Graph& g, const PlayerTable& players,
                              const Partition& communities, const ClanTable& clans,
                              CharId player, const RecommendConfig& config) {
  Recommender r(g, players, clans, communities, config);
  return r.recommend(player);
}

std::vector<Recommendation> batch_recommend(const Graph& g, const PlayerTable& players,
                                            const ClanTable& clans,
                                            const RecommendConfig& config,
                                            std::optional<Partition> communities) {
  Partition p = communities ? std::move(*communities)
                            : detect_communities(g, config.seed, config.teleport);
  Recommender r(g, players, clans, std::move(p), config);
  return r.recommend_all();
}

}  // namespace clanforge
