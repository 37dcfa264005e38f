#include "clanforge/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <istream>
#include <ostream>
#include <string_view>

#include "clanforge/error.hpp"

namespace clanforge {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

template <typename T>
bool parse_number(std::string_view token, T& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && first != last;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(',', start);
    fields.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

template <typename Fn>
auto with_input(const std::string& path, Fn&& fn) {
  if (path == "-") return fn(std::cin);
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  return fn(in);
}

}  // namespace

std::vector<EdgePair> load_edge_list(std::istream& in) {
  std::vector<EdgePair> pairs;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ',' || line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ',' && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tokens.size() != 2) {
      fail(ErrorCode::Parse, at_line(line_no) + "expected two ids, found " +
                                 std::to_string(tokens.size()) + " fields");
    }
    EdgePair e;
    if (!parse_number(tokens[0], e.a) || !parse_number(tokens[1], e.b)) {
      const auto& bad = parse_number(tokens[0], e.a) ? tokens[1] : tokens[0];
      fail(ErrorCode::Parse, at_line(line_no) + "non-integer token '" + std::string(bad) + "'");
    }
    pairs.push_back(e);
  }
  return pairs;
}

PlayerTable load_metadata(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::vector<std::string_view> header;
  std::string header_line;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!trim(raw).empty()) {
      header_line = raw;
      header = split_csv(trim(header_line));
      break;
    }
  }
  if (header.empty()) fail(ErrorCode::Parse, "metadata: missing header row");

  auto column = [&header](std::string_view name) -> std::ptrdiff_t {
    auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : it - header.begin();
  };
  const auto c_id = column("char_id");
  const auto c_clan = column("clan_id");
  const auto c_time = column("online_time");
  const auto c_kills = column("kills");
  const auto c_level = column("level");
  const auto c_status = column("status");
  for (auto [name, col] : {std::pair{"char_id", c_id}, {"clan_id", c_clan},
                           {"online_time", c_time}, {"kills", c_kills}, {"level", c_level}}) {
    if (col < 0) fail(ErrorCode::Parse, std::string("metadata: header lacks column '") + name + "'");
  }

  std::vector<PlayerRecord> records;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    auto fields = split_csv(line);
    if (fields.size() < header.size()) {
      fail(ErrorCode::Parse, at_line(line_no) + "expected " + std::to_string(header.size()) +
                                 " fields, found " + std::to_string(fields.size()));
    }
    auto field = [&fields](std::ptrdiff_t col) { return fields[static_cast<std::size_t>(col)]; };

    PlayerRecord r;
    if (!parse_number(field(c_id), r.char_id)) {
      fail(ErrorCode::Parse, at_line(line_no) + "bad char_id '" + std::string(field(c_id)) + "'");
    }
    if (!field(c_clan).empty()) {
      ClanId clan = 0;
      if (!parse_number(field(c_clan), clan)) {
        fail(ErrorCode::Parse, at_line(line_no) + "bad clan_id '" + std::string(field(c_clan)) + "'");
      }
      r.clan_id = clan;
    }
    if (!parse_number(field(c_time), r.online_time)) {
      fail(ErrorCode::Parse, at_line(line_no) + "bad online_time '" + std::string(field(c_time)) + "'");
    }
    if (!parse_number(field(c_kills), r.kills)) {
      fail(ErrorCode::Parse, at_line(line_no) + "bad kills '" + std::string(field(c_kills)) + "'");
    }
    if (!parse_number(field(c_level), r.level)) {
      fail(ErrorCode::Parse, at_line(line_no) + "bad level '" + std::string(field(c_level)) + "'");
    }
    if (r.online_time < 0 || r.kills < 0 || r.level < 0) {
      fail(ErrorCode::Parse, at_line(line_no) + "negative online_time, kills or level");
    }
    if (c_status >= 0) r.status = std::string(field(c_status));
    records.push_back(std::move(r));
  }
  return PlayerTable(std::move(records));
}

std::map<ClanId, double> load_clan_points(std::istream& in) {
  std::map<ClanId, double> points;
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    auto fields = split_csv(line);
    ClanId clan = 0;
    double value = 0;
    if (fields.size() != 2 || !parse_number(fields[0], clan) || !parse_number(fields[1], value)) {
      fail(ErrorCode::Parse, at_line(line_no) + "expected 'clan_id,points'");
    }
    if (!points.emplace(clan, value).second) {
      fail(ErrorCode::Parse, at_line(line_no) + "duplicate clan_id " + std::to_string(clan));
    }
  }
  return points;
}

std::vector<EdgePair> read_edge_list_file(const std::string& path) {
  return with_input(path, [](std::istream& in) { return load_edge_list(in); });
}

PlayerTable read_metadata_file(const std::string& path) {
  return with_input(path, [](std::istream& in) { return load_metadata(in); });
}

std::map<ClanId, double> read_clan_points_file(const std::string& path) {
  return with_input(path, [](std::istream& in) { return load_clan_points(in); });
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& [u, v] : g.index_edges()) {
    out << g.id_of(u) << ' ' << g.id_of(v) << '\n';
  }
}

PlayerTable::PlayerTable(std::vector<PlayerRecord> records) : records_(std::move(records)) {
  std::stable_sort(records_.begin(), records_.end(),
                   [](const auto& a, const auto& b) { return a.char_id < b.char_id; });
  auto dup = std::adjacent_find(records_.begin(), records_.end(), [](const auto& a, const auto& b) {
    return a.char_id == b.char_id;
  });
  if (dup != records_.end()) {
    fail(ErrorCode::Parse, "duplicate char_id " + std::to_string(dup->char_id));
  }
}

const PlayerRecord* PlayerTable::find(CharId id) const {
  auto it = std::lower_bound(records_.begin(), records_.end(), id,
                             [](const PlayerRecord& r, CharId v) { return r.char_id < v; });
  return (it != records_.end() && it->char_id == id) ? &*it : nullptr;
}

}  // namespace clanforge
