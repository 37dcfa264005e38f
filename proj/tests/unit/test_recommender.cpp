#include <algorithm>

#include "doctest.h"
#include "clanforge/community.hpp"
#include "clanforge/error.hpp"
#include "clanforge/recommender.hpp"
#include "fixtures.hpp"

using namespace clanforge;

namespace {

// Node 0 is clanless and sits in an 8-clique with five members of clan 1
// and two of clan 2. A clanless triangle 20-22 and an isolated node 30
// complete the graph.
struct Village {
  Graph graph;
  PlayerTable players;
  ClanTable clans;
};

Village village() {
  std::vector<CharId> clique{0, 1, 2, 3, 4, 5, 6, 7};
  std::vector<EdgePair> e;
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j) e.push_back({clique[i], clique[j]});
  e.push_back({20, 21});
  e.push_back({21, 22});
  e.push_back({22, 20});
  std::vector<CharId> extra{30};
  Village v;
  v.graph = Graph::build(e, extra);
  std::vector<PlayerRecord> recs;
  for (CharId id : {0, 1, 2, 3, 4, 5, 6, 7, 20, 21, 22, 30}) {
    PlayerRecord r;
    r.char_id = id;
    if (id >= 1 && id <= 5) r.clan_id = 1;
    if (id == 6 || id == 7) r.clan_id = 2;
    recs.push_back(r);
  }
  v.players = PlayerTable(std::move(recs));
  v.clans = ClanTable::from_players(v.players);
  return v;
}

RecommendConfig config(std::size_t max_size) {
  RecommendConfig c;
  c.max_clan_size = max_size;
  c.seed = 1;
  return c;
}

}  // namespace

TEST_SUITE("recommend") {

TEST_CASE("clan sizes count the player table") {
  auto v = village();
  CHECK(v.clans.sizes.at(1) == 5);
  CHECK(v.clans.sizes.at(2) == 2);
}

TEST_CASE("dominant clan in the community") {
  auto v = village();
  auto p = detect_communities(v.graph, 1);
  auto r = recommend_clan(v.graph, v.players, p, v.clans, 0, config(40));
  CHECK(r.outcome == Outcome::Clan);
  CHECK(r.clan == ClanId{1});
  CHECK(r.rounds_used == 1);
  CHECK(r.rejected.empty());
}

TEST_CASE("a full clan is removed and the next one offered") {
  auto v = village();
  auto p = detect_communities(v.graph, 1);
  auto r = recommend_clan(v.graph, v.players, p, v.clans, 0, config(5));
  CHECK(r.outcome == Outcome::Clan);
  CHECK(r.clan == ClanId{2});
  CHECK(r.rounds_used == 2);
  CHECK(r.rejected == std::vector<ClanId>{1});
}

TEST_CASE("points balance rejects rich clans") {
  auto v = village();
  v.clans.points[1] = 1000.0;
  v.clans.points[2] = 10.0;
  auto cfg = config(40);
  cfg.points_balance = 500.0;
  auto r = recommend_clan(v.graph, v.players, detect_communities(v.graph, 1), v.clans, 0, cfg);
  CHECK(r.clan == ClanId{2});
  CHECK(r.rejected == std::vector<ClanId>{1});
}

TEST_CASE("round budget") {
  auto v = village();
  auto cfg = config(5);
  cfg.max_rounds = 1;
  auto r = recommend_clan(v.graph, v.players, detect_communities(v.graph, 1), v.clans, 0, cfg);
  CHECK(r.outcome == Outcome::NoRecommendation);
  CHECK(r.reason == NoRecommendationReason::MaxRoundsExhausted);
  CHECK(r.rounds_used == 1);
}

TEST_CASE("no-recommendation reasons and members") {
  auto v = village();
  auto p = detect_communities(v.graph, 1);
  Recommender rec(v.graph, v.players, v.clans, p, config(40));

  auto member = rec.recommend(3);
  CHECK(member.outcome == Outcome::AlreadyInClan);
  CHECK(member.clan == ClanId{1});
  CHECK(member.rounds_used == 0);

  auto lonely = rec.recommend(30);
  CHECK(lonely.outcome == Outcome::NoRecommendation);
  CHECK(lonely.reason == NoRecommendationReason::NoCommunitySignal);

  auto clanless = rec.recommend(21);
  CHECK(clanless.reason == NoRecommendationReason::NoClanInCommunity);

  CHECK_THROWS_AS(rec.recommend(999), Error);

  auto all = rec.recommend_all();
  std::vector<CharId> ids;
  for (const auto& r : all) ids.push_back(r.player);
  CHECK(ids == std::vector<CharId>{0, 20, 21, 22, 30});
}

TEST_CASE("configuration errors") {
  auto v = village();
  auto p = detect_communities(v.graph, 1);
  CHECK_THROWS_AS(Recommender(v.graph, v.players, v.clans, p, config(0)), Error);
  Partition wrong(std::vector<BlockId>{0, 0});
  CHECK_THROWS_AS(Recommender(v.graph, v.players, v.clans, wrong, config(5)), Error);
}

TEST_CASE("hidden members get their planted clan back") {
  auto planted = fixtures::planted_clans(21);
  auto clans = ClanTable::from_players(planted.players);
  auto recs = batch_recommend(planted.graph, planted.players, clans, config(1000));
  std::size_t hits = 0;
  for (const auto& r : recs) {
    const NodeIndex v = *planted.graph.index_of(r.player);
    if (r.clan && *r.clan == planted.truth[v]) ++hits;
  }
  REQUIRE_FALSE(recs.empty());
  CHECK(static_cast<double>(hits) / static_cast<double>(recs.size()) > 0.8);
}

TEST_CASE("capacity and balance are never violated") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto planted = fixtures::planted_clans(seed);
    auto clans = ClanTable::from_players(planted.players);
    for (auto& [clan, size] : clans.sizes) clans.points[clan] = static_cast<double>(clan % 7) * 100.0;
    for (std::size_t cap : {18, 22, 26}) {
      auto cfg = config(cap);
      cfg.points_balance = 400.0;
      for (const auto& r : batch_recommend(planted.graph, planted.players, clans, cfg)) {
        if (r.outcome != Outcome::Clan) continue;
        CHECK(clans.sizes.at(*r.clan) < cap);
        CHECK(clans.points.at(*r.clan) <= 400.0);
        CHECK(std::find(r.rejected.begin(), r.rejected.end(), *r.clan) == r.rejected.end());
      }
    }
  }
}

TEST_CASE("query order does not matter") {
  auto planted = fixtures::planted_clans(6);
  auto clans = ClanTable::from_players(planted.players);
  auto p = detect_communities(planted.graph, 6);
  auto cfg = config(22);
  Recommender forward(planted.graph, planted.players, clans, p, cfg);
  auto all = forward.recommend_all();
  Recommender backward(planted.graph, planted.players, clans, p, cfg);
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    auto again = backward.recommend(it->player);
    CHECK(again.clan == it->clan);
    CHECK(again.rounds_used == it->rounds_used);
    CHECK(again.reason == it->reason);
  }
}

TEST_CASE("reusing the partition restricts instead of re-detecting") {
  auto v = village();
  auto cfg = config(5);
  cfg.reuse_partition = true;
  auto r = recommend_clan(v.graph, v.players, detect_communities(v.graph, 1), v.clans, 0, cfg);
  CHECK(r.clan == ClanId{2});
}

}  // TEST_SUITE
