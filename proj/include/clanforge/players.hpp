#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clanforge/graph.hpp"

namespace clanforge {

using ClanId = std::int64_t;

struct PlayerRecord {
  CharId char_id = 0;
  std::optional<ClanId> clan_id;
  double online_time = 0.0;  // seconds
  std::int64_t kills = 0;
  std::int64_t level = 0;
  std::string status;
};

/// Per-character metadata, keyed by unique character id. May contain
/// characters that never appear in the friendship graph.
class PlayerTable {
public:
  PlayerTable() = default;
  explicit PlayerTable(std::vector<PlayerRecord> records);

  std::size_t size() const noexcept { return records_.size(); }
  std::span<const PlayerRecord> records() const noexcept { return records_; }
  const PlayerRecord* find(CharId id) const;

  std::optional<ClanId> clan_of(CharId id) const {
    const PlayerRecord* r = find(id);
    return r ? r->clan_id : std::nullopt;
  }

private:
  std::vector<PlayerRecord> records_;  // sorted by char_id
};

}  // namespace clanforge
