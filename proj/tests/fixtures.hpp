#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "clanforge/graph.hpp"
#include "clanforge/players.hpp"
#include "clanforge/random.hpp"
#include "clanforge/synth.hpp"

namespace fixtures {

using clanforge::CharId;
using clanforge::EdgePair;
using clanforge::Graph;

inline Graph from_pairs(std::initializer_list<std::pair<CharId, CharId>> pairs) {
  std::vector<EdgePair> e;
  for (auto [a, b] : pairs) e.push_back({a, b});
  return Graph::build(e);
}

inline Graph from_pairs(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
                        std::size_t n = 0) {
  std::vector<EdgePair> e;
  for (auto [a, b] : pairs) e.push_back({a, b});
  std::vector<CharId> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<CharId>(i);
  return Graph::build(e, all);
}

// Star with the centre at id 0 and leaves 1..k.
inline Graph star(int k) {
  std::vector<EdgePair> e;
  for (int i = 1; i <= k; ++i) e.push_back({0, i});
  return Graph::build(e);
}

// Cliques of `size` nodes each; clique c holds ids c*size .. c*size+size-1.
// Consecutive cliques are joined by one edge between their first nodes.
inline Graph joined_cliques(int count, int size) {
  std::vector<EdgePair> e;
  for (int c = 0; c < count; ++c) {
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) e.push_back({c * size + i, c * size + j});
    if (c > 0) e.push_back({(c - 1) * size, c * size});
  }
  return Graph::build(e);
}

struct PlantedClans {
  Graph graph;
  clanforge::PlayerTable players;        // hidden members have no clan
  std::vector<clanforge::ClanId> truth;  // per node index
  std::vector<bool> hidden;              // per node index
};

// Clan-planted network: each clan block is a uniform random graph, plus
// sparse uniform edges between blocks. A `hide_fraction` of players lose
// their clan label.
inline PlantedClans planted_clans(std::uint64_t seed, int clans = 10, int clan_size = 40,
                                  std::size_t intra_edges = 160, std::size_t inter_edges = 100,
                                  double hide_fraction = 0.4) {
  clanforge::Rng rng(seed * 7919 + 17);
  std::vector<EdgePair> edges;
  for (int c = 0; c < clans; ++c) {
    Graph block = clanforge::generate_uniform(clan_size, intra_edges, seed * 1000 + c);
    for (auto [u, v] : block.index_edges()) {
      edges.push_back({c * clan_size + static_cast<CharId>(u), c * clan_size + static_cast<CharId>(v)});
    }
  }
  const std::uint64_t n = static_cast<std::uint64_t>(clans) * clan_size;
  for (std::size_t added = 0; added < inter_edges;) {
    auto a = static_cast<CharId>(rng.below(n));
    auto b = static_cast<CharId>(rng.below(n));
    if (a / clan_size == b / clan_size) continue;
    edges.push_back({a, b});
    ++added;
  }

  PlantedClans out;
  std::vector<CharId> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<CharId>(i);
  out.graph = Graph::build(edges, all);

  std::vector<clanforge::PlayerRecord> records;
  for (std::size_t i = 0; i < n; ++i) {
    clanforge::PlayerRecord r;
    r.char_id = static_cast<CharId>(i);
    const clanforge::ClanId clan = 100 + static_cast<clanforge::ClanId>(i / clan_size);
    out.truth.push_back(clan);
    const bool hide = rng.unit() < hide_fraction;
    out.hidden.push_back(hide);
    if (!hide) r.clan_id = clan;
    r.online_time = 3600.0 * static_cast<double>(rng.below(100));
    r.kills = static_cast<std::int64_t>(rng.below(50));
    records.push_back(r);
  }
  out.players = clanforge::PlayerTable(std::move(records));
  return out;
}

}  // namespace fixtures
