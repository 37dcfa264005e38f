// clanforge command-line front end. Talks to the library only through the C API.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "clanforge/clanforge.h"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct Failure : std::runtime_error {
  cf_status status;
  Failure(cf_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(cf_status s) {
  if (s != CF_OK) throw Failure(s, cf_last_error());
}

struct GraphFree { void operator()(cf_graph* g) const { cf_graph_free(g); } };
struct PlayersFree { void operator()(cf_players* p) const { cf_players_free(p); } };
struct CohortsFree { void operator()(cf_cohorts* c) const { cf_cohorts_free(c); } };
struct ClansFree { void operator()(cf_clan_table* t) const { cf_clan_table_free(t); } };
using GraphPtr = std::unique_ptr<cf_graph, GraphFree>;
using PlayersPtr = std::unique_ptr<cf_players, PlayersFree>;
using CohortsPtr = std::unique_ptr<cf_cohorts, CohortsFree>;
using ClansPtr = std::unique_ptr<cf_clan_table, ClansFree>;

GraphPtr read_graph(const std::string& path) {
  cf_graph* g = nullptr;
  check(cf_graph_read_edge_list(path.c_str(), &g));
  return GraphPtr(g);
}

PlayersPtr read_players(const std::string& path) {
  cf_players* p = nullptr;
  check(cf_players_read(path.c_str(), &p));
  return PlayersPtr(p);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

fs::path temp_for(const fs::path& target) {
  return target.string() + ".tmp." + std::to_string(::getpid());
}

void write_atomic(const fs::path& target, const std::string& content) {
  const fs::path tmp = temp_for(target);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure(CF_ERR_IO, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Failure(CF_ERR_IO, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Failure(CF_ERR_IO, "cannot move output into place: " + target.string());
  }
}

void write_json(const fs::path& target, const ordered_json& j) {
  write_atomic(target, j.dump(2) + "\n");
}

void prepare_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw Failure(CF_ERR_IO, "cannot create " + dir.string());
}

std::vector<int64_t> node_ids(const cf_graph* g) {
  std::vector<int64_t> ids(cf_graph_node_count(g));
  for (size_t i = 0; i < ids.size(); ++i) check(cf_graph_node_id(g, i, &ids[i]));
  return ids;
}

std::vector<cf_degree_point> degree_points(const cf_graph* g, double* mean) {
  size_t count = 0;
  check(cf_degree_distribution(g, nullptr, 0, &count, mean));
  std::vector<cf_degree_point> pts(count);
  check(cf_degree_distribution(g, pts.data(), pts.size(), &count, mean));
  return pts;
}

std::string distribution_csv(const std::vector<cf_degree_point>& pts, bool ccdf) {
  std::string s = "degree,fraction\n";
  for (const auto& p : pts) s += std::to_string(p.degree) + "," + fmt(ccdf ? p.ccdf : p.pmf) + "\n";
  return s;
}

// Runs a computation whose failure should become a null field with a reason.
template <class F>
std::optional<std::string> attempt(F&& f) {
  try {
    f();
    return std::nullopt;
  } catch (const Failure& e) {
    return std::string(e.what());
  }
}

ordered_json or_null(const std::optional<std::string>& reason) {
  return reason ? ordered_json(*reason) : ordered_json(nullptr);
}

// ---- analyze

struct AnalyzeArgs {
  std::string edges, metadata, out;
  uint64_t seed = 0;
  std::string path_mode = "auto";
  size_t sample_sources = 200;
  size_t exact_threshold = 5000;
  uint64_t xmin = 1;
};

void run_analyze(const AnalyzeArgs& a) {
  GraphPtr g = read_graph(a.edges);
  const size_t n = cf_graph_node_count(g.get());
  const size_t m = cf_graph_edge_count(g.get());
  if (n == 0) throw Failure(CF_ERR_DOMAIN, "edge list contains no nodes");
  prepare_dir(a.out);

  cf_ingest_summary ingest{};
  check(cf_graph_ingest_summary(g.get(), &ingest));
  double mean = 0.0;
  const auto pts = degree_points(g.get(), &mean);

  ordered_json j;
  j["input"] = {{"edges", a.edges},
                {"pairs_read", ingest.pairs_read},
                {"self_loops_dropped", ingest.self_loops},
                {"duplicates_dropped", ingest.duplicates}};
  j["seed"] = a.seed;
  j["nodes"] = n;
  j["links"] = m;
  j["mean_degree"] = mean;
  char shown[32];
  std::snprintf(shown, sizeof shown, "%.1f", mean);
  j["mean_degree_display"] = shown;

  std::vector<uint32_t> labels(n);
  cf_component_report comp{};
  check(cf_connected_components(g.get(), labels.data(), &comp));
  j["components"] = {{"count", comp.component_count},
                     {"largest_size", comp.largest_size},
                     {"largest_links", comp.largest_edge_count},
                     {"largest_fraction", static_cast<double>(comp.largest_size) / n}};

  double clustering = 0.0;
  check(cf_average_clustering(g.get(), &clustering));

  // Average path over the largest component.
  std::vector<size_t> giant;
  for (size_t i = 0; i < n; ++i)
    if (labels[i] == comp.largest_label) giant.push_back(i);
  cf_path_mode mode = giant.size() > a.exact_threshold ? CF_PATH_SAMPLED : CF_PATH_EXACT;
  if (a.path_mode == "exact") mode = CF_PATH_EXACT;
  if (a.path_mode == "sampled") mode = CF_PATH_SAMPLED;
  std::optional<double> path;
  auto path_err = attempt([&] {
    double v = 0.0;
    check(cf_average_shortest_path(g.get(), giant.data(), giant.size(), mode, a.sample_sources,
                                   a.seed, &v));
    path = v;
  });
  j["average_path"] = {{"value", path ? ordered_json(*path) : ordered_json(nullptr)},
                       {"mode", mode == CF_PATH_EXACT ? "exact" : "sampled"},
                       {"sample_sources", mode == CF_PATH_SAMPLED ? ordered_json(a.sample_sources)
                                                                  : ordered_json(nullptr)},
                       {"scope", "largest_component"},
                       {"scope_nodes", giant.size()},
                       {"error", or_null(path_err)}};

  std::vector<uint64_t> degrees;
  {
    std::vector<size_t> d(n);
    check(cf_graph_degrees(g.get(), d.data()));
    degrees.assign(d.begin(), d.end());
  }
  cf_fit_report fit{};
  auto fit_err = attempt([&] { check(cf_fit_gamma_mle(degrees.data(), degrees.size(), a.xmin, &fit)); });
  if (fit_err) {
    j["powerlaw"] = {{"gamma", nullptr}, {"xmin", a.xmin}, {"n", nullptr}, {"error", *fit_err}};
  } else {
    j["powerlaw"] = {{"gamma", fit.gamma}, {"xmin", fit.xmin}, {"n", fit.sample_count}, {"error", nullptr}};
  }

  cf_graph* raw = nullptr;
  check(cf_generate_uniform(n, m, a.seed, &raw));
  GraphPtr random(raw);
  double random_mean = 0.0;
  const auto random_pts = degree_points(random.get(), &random_mean);
  double random_clustering = 0.0;
  check(cf_average_clustering(random.get(), &random_clustering));
  j["clustering"] = {{"average", clustering}, {"random_baseline", random_clustering}};
  j["random_baseline"] = {{"kind", "uniform"},
                          {"seed", a.seed},
                          {"nodes", n},
                          {"links", m},
                          {"mean_degree", random_mean},
                          {"clustering", random_clustering}};

  cf_small_world_report sw{};
  std::optional<std::string> sw_err;
  if (!path) {
    sw_err = "average path unavailable";
  } else {
    sw_err = attempt([&] {
      check(cf_assess_small_world(n, mean, *path, clustering, random_clustering, 0, 0, &sw));
    });
  }
  if (sw_err) {
    j["small_world"] = {{"verdict", nullptr}, {"error", *sw_err}};
  } else {
    j["small_world"] = {{"verdict", sw.verdict != 0},
                        {"measured_avg_path", sw.measured_avg_path},
                        {"expected_avg_path", sw.expected_avg_path},
                        {"measured_clustering", sw.measured_clustering},
                        {"random_clustering", sw.random_clustering},
                        {"error", nullptr}};
  }

  if (!a.metadata.empty()) {
    PlayersPtr players = read_players(a.metadata);
    size_t in_graph = 0, with_clan = 0;
    for (size_t i = 0; i < cf_players_count(players.get()); ++i) {
      cf_player_record r{};
      check(cf_players_at(players.get(), i, &r));
      size_t idx = 0;
      if (cf_graph_node_index(g.get(), r.char_id, &idx) == CF_OK) ++in_graph;
      with_clan += r.has_clan != 0;
    }
    j["players"] = {{"records", cf_players_count(players.get())},
                    {"in_graph", in_graph},
                    {"with_clan", with_clan}};
  }

  const fs::path out(a.out);
  write_atomic(out / "degree_pmf.csv", distribution_csv(pts, false));
  write_atomic(out / "degree_ccdf.csv", distribution_csv(pts, true));
  write_atomic(out / "random_pmf.csv", distribution_csv(random_pts, false));
  write_atomic(out / "random_ccdf.csv", distribution_csv(random_pts, true));
  if (!fit_err) {
    std::vector<uint64_t> ks;
    for (const auto& p : pts)
      if (p.degree >= 1) ks.push_back(p.degree);
    std::vector<double> model(ks.size());
    check(cf_model_pmf(fit.gamma, ks.data(), ks.size(), model.data()));
    std::string s = "degree,value\n";
    for (size_t i = 0; i < ks.size(); ++i) s += std::to_string(ks[i]) + "," + fmt(model[i]) + "\n";
    write_atomic(out / "powerlaw_model.csv", s);
  }
  write_json(out / "summary.json", j);
}

// ---- groups

struct GroupsArgs {
  std::string edges, metadata, out, method = "alg1";
  bool strict = false, correlate = false, count_nonplayers = false;
  double hardcore_fraction = 0.07, peripheral_fraction = 0.14;
};

const char* cohort_name(uint8_t c) {
  switch (c) {
    case CF_COHORT_HARDCORE: return "hardcore";
    case CF_COHORT_CASUAL: return "casual";
    default: return "peripheral";
  }
}

void run_groups(const GroupsArgs& a) {
  if ((a.correlate || a.count_nonplayers) && a.metadata.empty()) {
    throw Failure(CF_ERR_INVALID_ARGUMENT, "--metadata is required for correlations and --count-nonplayers");
  }
  GraphPtr g = read_graph(a.edges);
  const size_t n = cf_graph_node_count(g.get());
  const auto ids = node_ids(g.get());
  prepare_dir(a.out);
  const fs::path out(a.out);

  ordered_json j;
  j["method"] = a.method;
  cf_cohorts* raw = nullptr;
  std::vector<double> scores;
  if (a.method == "alg1") {
    check(cf_classify_groups(g.get(), a.strict ? 1 : 0, &raw));
    j["strict"] = a.strict;
  } else {
    scores.resize(n);
    check(cf_pagerank(g.get(), 0.85, 1e-10, 200, scores.data(), nullptr));
    check(cf_classify_by_score(scores.data(), n, a.hardcore_fraction, a.peripheral_fraction, &raw));
    j["hardcore_fraction"] = a.hardcore_fraction;
    j["peripheral_fraction"] = a.peripheral_fraction;
    j["hardcore_target"] = static_cast<size_t>(std::ceil(a.hardcore_fraction * n - 1e-9));
    j["peripheral_target"] = static_cast<size_t>(std::ceil(a.peripheral_fraction * n - 1e-9));
  }
  CohortsPtr cohorts(raw);

  std::vector<uint8_t> labels(n);
  check(cf_cohorts_labels(cohorts.get(), labels.data()));
  size_t sizes[3];
  check(cf_cohorts_sizes(cohorts.get(), sizes));
  j["nodes"] = n;
  j["sizes"] = {{"hardcore", sizes[0]}, {"casual", sizes[1]}, {"peripheral", sizes[2]}};

  std::string csv = "char_id,cohort\n";
  for (size_t i = 0; i < n; ++i) csv += std::to_string(ids[i]) + "," + cohort_name(labels[i]) + "\n";
  write_atomic(out / "cohorts.csv", csv);

  if (a.method == "alg1") {
    std::vector<cf_removal_step> steps(cf_cohorts_trace_length(cohorts.get()));
    check(cf_cohorts_trace(cohorts.get(), steps.data()));
    std::string t = "step,removed_id,scc_size,diss_count\n";
    for (size_t i = 0; i < steps.size(); ++i) {
      t += std::to_string(i + 1) + "," + std::to_string(ids[steps[i].removed]) + "," +
           std::to_string(steps[i].scc_size) + "," + std::to_string(steps[i].diss_count) + "\n";
    }
    write_atomic(out / "removal_trace.csv", t);
    size_t scc = 0, diss = 0;
    check(cf_cohorts_final_state(cohorts.get(), &scc, &diss));
    j["final_scc_size"] = scc;
    j["final_diss_count"] = diss;
  } else {
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) { return scores[x] > scores[y]; });
    std::string s = "char_id,score\n";
    for (size_t i : order) s += std::to_string(ids[i]) + "," + fmt(scores[i]) + "\n";
    write_atomic(out / "scores.csv", s);
  }

  if (!a.metadata.empty()) {
    PlayersPtr players = read_players(a.metadata);
    ordered_json corr;
    const std::pair<cf_metric, const char*> metrics[] = {{CF_METRIC_ONLINE_TIME, "online_time"},
                                                          {CF_METRIC_KILLS, "kills"}};
    for (uint8_t c = 0; c < 3; ++c) {
      ordered_json row;
      for (auto [metric, name] : metrics) {
        double r = 0.0;
        auto err = attempt([&] {
          check(cf_correlate_cohort(g.get(), cohorts.get(), static_cast<cf_cohort>(c), players.get(), metric, &r));
        });
        row[name] = err ? ordered_json{{"r", nullptr}, {"error", *err}}
                        : ordered_json{{"r", r}, {"error", nullptr}};
      }
      corr[cohort_name(c)] = row;
    }
    j["correlations"] = {{"method", "point-biserial"}, {"cohorts", corr}};
    if (!scores.empty()) {
      ordered_json row;
      for (auto [metric, name] : metrics) {
        double r = 0.0;
        auto err = attempt([&] { check(cf_correlate_scores(g.get(), scores.data(), players.get(), metric, &r)); });
        row[name] = err ? ordered_json{{"r", nullptr}, {"error", *err}}
                        : ordered_json{{"r", r}, {"error", nullptr}};
      }
      j["score_correlations"] = {{"method", "pearson"}, {"metrics", row}};
    }

    if (a.count_nonplayers) {
      // Characters with a record but no friendship count as peripheral.
      size_t outside = 0;
      const size_t total_records = cf_players_count(players.get());
      for (size_t i = 0; i < total_records; ++i) {
        cf_player_record r{};
        check(cf_players_at(players.get(), i, &r));
        size_t idx = 0;
        if (cf_graph_node_index(g.get(), r.char_id, &idx) != CF_OK) ++outside;
      }
      const size_t population = n + outside;
      const double denom = population ? static_cast<double>(population) : 1.0;
      j["population"] = {{"total", population},
                         {"outside_graph", outside},
                         {"hardcore", sizes[0]},
                         {"casual", sizes[1]},
                         {"peripheral", sizes[2] + outside},
                         {"hardcore_fraction", sizes[0] / denom},
                         {"casual_fraction", sizes[1] / denom},
                         {"peripheral_fraction", (sizes[2] + outside) / denom}};
    }
  }
  write_json(out / "groups.json", j);
}

// ---- communities

struct CommunitiesArgs {
  std::string edges, metadata, out, clanless = "singleton", norm = "mean";
  uint64_t seed = 0;
  double teleport = 0.15;
};

void run_communities(const CommunitiesArgs& a) {
  GraphPtr g = read_graph(a.edges);
  const size_t n = cf_graph_node_count(g.get());
  const auto ids = node_ids(g.get());
  prepare_dir(a.out);
  const fs::path out(a.out);

  std::vector<uint32_t> blocks(n);
  size_t block_count = 0;
  double codelength = 0.0;
  check(cf_detect_communities(g.get(), a.seed, a.teleport, blocks.data(), &block_count, &codelength));

  std::string csv = "char_id,block_id\n";
  for (size_t i = 0; i < n; ++i) csv += std::to_string(ids[i]) + "," + std::to_string(blocks[i]) + "\n";
  write_atomic(out / "communities.csv", csv);

  ordered_json j;
  j["seed"] = a.seed;
  j["teleport"] = a.teleport;
  j["communities"] = {{"count", block_count}, {"codelength_bits", codelength}};
  j["normalization"] = a.norm == "max" ? "max" : "mean";
  const cf_nmi_norm norm = a.norm == "max" ? CF_NMI_MAX : CF_NMI_MEAN;

  if (a.metadata.empty()) {
    j["all_players"] = {{"nmi", nullptr}, {"error", "no metadata supplied"}};
    j["members_only"] = {{"nmi", nullptr}, {"error", "no metadata supplied"}};
  } else {
    PlayersPtr players = read_players(a.metadata);
    auto compare = [&](cf_clanless_policy policy, const char* label) {
      std::vector<size_t> nodes(n);
      std::vector<uint32_t> clans(n);
      size_t count = 0;
      check(cf_clans_to_partition(g.get(), players.get(), policy, nodes.data(), clans.data(), &count));
      std::vector<uint32_t> mine(count);
      for (size_t i = 0; i < count; ++i) mine[i] = blocks[nodes[i]];
      double value = 0.0;
      auto err = attempt([&] { check(cf_nmi(mine.data(), clans.data(), count, norm, &value)); });
      return ordered_json{{"nmi", err ? ordered_json(nullptr) : ordered_json(value)},
                          {"sources", {"communities", "clans"}},
                          {"clanless", label},
                          {"nodes", count},
                          {"error", or_null(err)}};
    };
    const bool lump = a.clanless == "one-block";
    j["all_players"] = compare(lump ? CF_CLANLESS_ONE_BLOCK : CF_CLANLESS_SINGLETON,
                               lump ? "one-block" : "singleton");
    j["members_only"] = compare(CF_CLANLESS_DROP, "dropped");
  }
  write_json(out / "nmi.json", j);
}

// ---- recommend

struct RecommendArgs {
  std::string edges, metadata, out, clan_points;
  size_t max_clan_size = 0, max_rounds = 100;
  std::optional<double> points_balance;
  std::optional<int64_t> player;
  uint64_t seed = 0;
  double teleport = 0.15;
  bool reuse_partition = false;
};

std::string recommendation_row(const cf_recommendation& r) {
  std::string row = std::to_string(r.player) + "," + cf_outcome_string(r.outcome) + ",";
  if (r.has_clan) row += std::to_string(r.clan_id);
  row += "," + std::to_string(r.rounds_used) + ",";
  if (r.reason != CF_REASON_NONE) row += cf_reason_string(r.reason);
  return row + "\n";
}

void run_recommend(const RecommendArgs& a) {
  GraphPtr g = read_graph(a.edges);
  PlayersPtr players = read_players(a.metadata);
  cf_clan_table* raw = nullptr;
  check(cf_clan_table_from_players(players.get(), &raw));
  ClansPtr clans(raw);
  if (!a.clan_points.empty()) check(cf_clan_table_read_points(clans.get(), a.clan_points.c_str()));

  cf_recommend_config cfg;
  cf_recommend_config_init(&cfg);
  cfg.max_clan_size = a.max_clan_size;
  cfg.max_rounds = a.max_rounds;
  cfg.seed = a.seed;
  cfg.teleport = a.teleport;
  cfg.reuse_partition = a.reuse_partition ? 1 : 0;
  if (a.points_balance) {
    cfg.has_points_balance = 1;
    cfg.points_balance = *a.points_balance;
  }

  std::vector<cf_recommendation> recs;
  if (a.player) {
    cf_recommendation r{};
    check(cf_recommend_clan(g.get(), players.get(), clans.get(), nullptr, *a.player, &cfg, &r));
    recs.push_back(r);
  } else {
    size_t count = 0;
    recs.resize(cf_graph_node_count(g.get()));
    check(cf_batch_recommend(g.get(), players.get(), clans.get(), nullptr, &cfg, recs.data(),
                             recs.size(), &count));
    recs.resize(count);
  }
  prepare_dir(a.out);
  std::string csv = "char_id,outcome,clan_id,rounds_used,reason\n";
  for (const auto& r : recs) csv += recommendation_row(r);
  write_atomic(fs::path(a.out) / "recommendations.csv", csv);
}

// ---- generate

struct GenerateArgs {
  std::string kind, out;
  size_t n = 0;
  std::optional<size_t> m;
  std::optional<double> gamma;
  uint64_t seed = 0;
};

void run_generate(const GenerateArgs& a) {
  cf_graph* raw = nullptr;
  if (a.kind == "uniform") {
    if (!a.m) throw Failure(CF_ERR_INVALID_ARGUMENT, "--kind uniform needs --m");
    check(cf_generate_uniform(a.n, *a.m, a.seed, &raw));
  } else {
    if (!a.gamma) throw Failure(CF_ERR_INVALID_ARGUMENT, "--kind powerlaw needs --gamma");
    check(cf_generate_powerlaw(a.n, *a.gamma, a.seed, &raw));
  }
  GraphPtr g(raw);
  const fs::path target(a.out);
  if (target.has_parent_path()) prepare_dir(target.parent_path());
  const fs::path tmp = temp_for(target);
  check(cf_graph_write_edge_list(g.get(), tmp.c_str()));
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Failure(CF_ERR_IO, "cannot move output into place: " + target.string());
  }
}

void apply_thread_env() {
  const char* env = std::getenv("CLANFORGE_THREADS");
  if (!env || !*env) return;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v > 4096) throw Failure(CF_ERR_INVALID_ARGUMENT, std::string("bad CLANFORGE_THREADS: ") + env);
  cf_set_thread_limit(static_cast<unsigned>(v));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Friendship-network analysis and clan recommendation"};
  app.set_version_flag("--version", std::string(cf_version()));
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Network summary and degree plot data");
  analyze->add_option("--edges", an.edges, "Edge list (- for stdin)")->required();
  analyze->add_option("--metadata", an.metadata, "Player metadata CSV");
  analyze->add_option("--out", an.out, "Output directory")->required();
  analyze->add_option("--seed", an.seed, "Seed for the random baseline and path sampling")->required();
  analyze->add_option("--path-mode", an.path_mode, "auto, exact or sampled")
      ->check(CLI::IsMember({"auto", "exact", "sampled"}));
  analyze->add_option("--sample-sources", an.sample_sources, "BFS sources in sampled mode")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--exact-threshold", an.exact_threshold,
                      "Largest component size above which auto mode samples");
  analyze->add_option("--xmin", an.xmin, "Lower cutoff for the exponent fit")->check(CLI::PositiveNumber);

  GroupsArgs gr;
  auto* groups = app.add_subcommand("groups", "Hardcore / casual / peripheral cohorts");
  groups->add_option("--edges", gr.edges)->required();
  groups->add_option("--metadata", gr.metadata);
  groups->add_option("--out", gr.out)->required();
  groups->add_option("--method", gr.method, "alg1 (hub removal) or pagerank")
      ->check(CLI::IsMember({"alg1", "pagerank"}));
  groups->add_flag("--strict", gr.strict, "Stop when the largest component no longer exceeds the isolated set");
  groups->add_option("--hardcore-fraction", gr.hardcore_fraction);
  groups->add_option("--peripheral-fraction", gr.peripheral_fraction);
  groups->add_flag("--correlate", gr.correlate, "Require correlations against metadata");
  groups->add_flag("--count-nonplayers", gr.count_nonplayers,
                   "Report the breakdown over every character in the metadata");

  CommunitiesArgs co;
  auto* communities = app.add_subcommand("communities", "Map-equation communities and clan NMI");
  communities->add_option("--edges", co.edges)->required();
  communities->add_option("--metadata", co.metadata);
  communities->add_option("--out", co.out)->required();
  communities->add_option("--seed", co.seed)->required();
  communities->add_option("--teleport", co.teleport);
  communities->add_option("--clanless", co.clanless, "singleton or one-block")
      ->check(CLI::IsMember({"singleton", "one-block"}));
  communities->add_option("--nmi-norm", co.norm, "mean or max")->check(CLI::IsMember({"mean", "max"}));

  RecommendArgs re;
  auto* recommend = app.add_subcommand("recommend", "Clan recommendations for clanless players");
  recommend->add_option("--edges", re.edges)->required();
  recommend->add_option("--metadata", re.metadata)->required();
  recommend->add_option("--out", re.out)->required();
  recommend->add_option("--max-clan-size", re.max_clan_size)->required()->check(CLI::PositiveNumber);
  recommend->add_option("--points-balance", re.points_balance);
  recommend->add_option("--max-rounds", re.max_rounds)->check(CLI::PositiveNumber);
  recommend->add_option("--player", re.player, "Single character id");
  recommend->add_option("--seed", re.seed)->required();
  recommend->add_option("--teleport", re.teleport);
  recommend->add_option("--clan-points", re.clan_points, "CSV clan_id,points");
  recommend->add_flag("--reuse-partition", re.reuse_partition,
                      "Restrict the first partition instead of re-detecting after removals");

  GenerateArgs ge;
  auto* generate = app.add_subcommand("generate", "Synthetic edge lists");
  generate->add_option("--kind", ge.kind)->required()->check(CLI::IsMember({"uniform", "powerlaw"}));
  generate->add_option("--n", ge.n)->required();
  generate->add_option("--m", ge.m);
  generate->add_option("--gamma", ge.gamma);
  generate->add_option("--seed", ge.seed)->required();
  generate->add_option("--out", ge.out)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    apply_thread_env();
    if (*analyze) run_analyze(an);
    if (*groups) run_groups(gr);
    if (*communities) run_communities(co);
    if (*recommend) run_recommend(re);
    if (*generate) run_generate(ge);
  } catch (const Failure& e) {
    std::cerr << "clanforge: " << cf_status_string(e.status) << ": " << e.what() << "\n";
    return e.status == CF_ERR_INVALID_ARGUMENT ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "clanforge: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
