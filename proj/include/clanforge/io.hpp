#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "clanforge/graph.hpp"
#include "clanforge/players.hpp"

namespace clanforge {

/// Two ids per line, separated by whitespace or a comma. Lines starting
/// with '#' and blank lines are skipped. Errors name the 1-based line.
std::vector<EdgePair> load_edge_list(std::istream& in);

/// CSV with a header naming char_id, clan_id, online_time, kills, level and
/// optionally status, in any column order. An empty clan_id means no clan.
PlayerTable load_metadata(std::istream& in);

/// CSV `clan_id,points` with a header row.
std::map<ClanId, double> load_clan_points(std::istream& in);

/// Path helpers; "-" reads standard input.
std::vector<EdgePair> read_edge_list_file(const std::string& path);
PlayerTable read_metadata_file(const std::string& path);
std::map<ClanId, double> read_clan_points_file(const std::string& path);

/// One "a b" line per edge, ascending by index. Isolated nodes are not
/// representable in the format and are omitted.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace clanforge
