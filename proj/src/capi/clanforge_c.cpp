#include "clanforge/clanforge.h"

#include <algorithm>
#include <exception>
#include <fstream>
#include <new>
#include <string>

#include "clanforge/centrality.hpp"
#include "clanforge/cohorts.hpp"
#include "clanforge/community.hpp"
#include "clanforge/error.hpp"
#include "clanforge/io.hpp"
#include "clanforge/metrics.hpp"
#include "clanforge/parallel.hpp"
#include "clanforge/powerlaw.hpp"
#include "clanforge/recommender.hpp"
#include "clanforge/synth.hpp"

struct cf_graph {
  clanforge::Graph graph;
};
struct cf_players {
  clanforge::PlayerTable table;
};
struct cf_cohorts {
  clanforge::CohortAssignment assignment;
};
struct cf_clan_table {
  clanforge::ClanTable table;
};

namespace {

using namespace clanforge;

thread_local std::string g_last_error;

cf_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return CF_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return CF_ERR_PARSE;
    case ErrorCode::Io: return CF_ERR_IO;
    case ErrorCode::Domain: return CF_ERR_DOMAIN;
    case ErrorCode::NotFound: return CF_ERR_NOT_FOUND;
    case ErrorCode::Disconnected: return CF_ERR_DISCONNECTED;
  }
  return CF_ERR_INTERNAL;
}

cf_status set_error(cf_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `fn` and converts any exception into a status code.
template <typename Fn>
cf_status guarded(Fn&& fn) noexcept {
  try {
    g_last_error.clear();
    fn();
    return CF_OK;
  } catch (const Error& e) {
    return set_error(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(CF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(CF_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(CF_ERR_INTERNAL, "unknown exception");
  }
}

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::InvalidArgument, what);
}

NodeSet to_node_set(const Graph& g, const size_t* indices, size_t count) {
  require(indices != nullptr || count == 0, "null index array");
  NodeSet out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    if (indices[i] >= g.node_count()) {
      fail(ErrorCode::InvalidArgument, "node index " + std::to_string(indices[i]) + " out of range");
    }
    out.push_back(static_cast<NodeIndex>(indices[i]));
  }
  return out;
}

Partition partition_from(const uint32_t* blocks, size_t n) {
  require(blocks != nullptr || n == 0, "null block array");
  return Partition(std::vector<BlockId>(blocks, blocks + n));
}

RecommendConfig to_config(const cf_recommend_config* cfg) {
  require(cfg != nullptr, "null config");
  RecommendConfig c;
  c.max_clan_size = cfg->max_clan_size;
  if (cfg->has_points_balance) c.points_balance = cfg->points_balance;
  c.max_rounds = cfg->max_rounds;
  c.seed = cfg->seed;
  c.teleport = cfg->teleport;
  c.reuse_partition = cfg->reuse_partition != 0;
  return c;
}

cf_recommendation to_c(const Recommendation& r) {
  cf_recommendation out{};
  out.player = r.player;
  switch (r.outcome) {
    case Outcome::Clan: out.outcome = CF_OUTCOME_CLAN; break;
    case Outcome::AlreadyInClan: out.outcome = CF_OUTCOME_ALREADY_IN_CLAN; break;
    case Outcome::NoRecommendation: out.outcome = CF_OUTCOME_NONE; break;
  }
  out.has_clan = r.clan.has_value();
  out.clan_id = r.clan.value_or(0);
  out.reason = static_cast<cf_no_rec_reason>(r.reason);
  out.rounds_used = r.rounds_used;
  return out;
}

Metric to_metric(cf_metric m) {
  require(m == CF_METRIC_ONLINE_TIME || m == CF_METRIC_KILLS, "unknown metric");
  return m == CF_METRIC_KILLS ? Metric::Kills : Metric::OnlineTime;
}

}  // namespace

extern "C" {

const char* cf_status_string(cf_status status) {
  switch (status) {
    case CF_OK: return "ok";
    case CF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CF_ERR_PARSE: return "parse error";
    case CF_ERR_IO: return "i/o error";
    case CF_ERR_DOMAIN: return "domain error";
    case CF_ERR_NOT_FOUND: return "not found";
    case CF_ERR_DISCONNECTED: return "disconnected";
    case CF_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case CF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cf_last_error(void) { return g_last_error.c_str(); }

const char* cf_version(void) { return "0.1.0"; }

void cf_set_thread_limit(unsigned limit) { set_thread_limit(limit); }

// ---- graphs

cf_status cf_graph_read_edge_list(const char* path, cf_graph** out) {
  return guarded([&] {
    require(path && out, "null argument");
    auto edges = read_edge_list_file(path);
    *out = new cf_graph{Graph::build(edges)};
  });
}

cf_status cf_graph_from_pairs(const int64_t* ids, size_t pair_count, cf_graph** out) {
  return guarded([&] {
    require(out && (ids || pair_count == 0), "null argument");
    std::vector<EdgePair> edges(pair_count);
    for (size_t i = 0; i < pair_count; ++i) edges[i] = {ids[2 * i], ids[2 * i + 1]};
    *out = new cf_graph{Graph::build(edges)};
  });
}

void cf_graph_free(cf_graph* g) { delete g; }

size_t cf_graph_node_count(const cf_graph* g) { return g ? g->graph.node_count() : 0; }

size_t cf_graph_edge_count(const cf_graph* g) { return g ? g->graph.edge_count() : 0; }

cf_status cf_graph_ingest_summary(const cf_graph* g, cf_ingest_summary* out) {
  return guarded([&] {
    require(g && out, "null argument");
    const auto& s = g->graph.ingest_summary();
    *out = {s.pairs_read, s.self_loops, s.duplicates};
  });
}

cf_status cf_graph_node_id(const cf_graph* g, size_t index, int64_t* id) {
  return guarded([&] {
    require(g && id, "null argument");
    require(index < g->graph.node_count(), "node index out of range");
    *id = g->graph.id_of(static_cast<NodeIndex>(index));
  });
}

cf_status cf_graph_node_index(const cf_graph* g, int64_t id, size_t* index) {
  return guarded([&] {
    require(g && index, "null argument");
    auto i = g->graph.index_of(id);
    if (!i) fail(ErrorCode::NotFound, "character " + std::to_string(id) + " is not in the graph");
    *index = *i;
  });
}

cf_status cf_graph_degrees(const cf_graph* g, size_t* degrees) {
  return guarded([&] {
    require(g && (degrees || g->graph.empty()), "null argument");
    for (NodeIndex v = 0; v < g->graph.node_count(); ++v) degrees[v] = g->graph.degree(v);
  });
}

cf_status cf_graph_remove_nodes(const cf_graph* g, const size_t* indices, size_t count,
                                cf_graph** out) {
  return guarded([&] {
    require(g && out, "null argument");
    auto set = to_node_set(g->graph, indices, count);
    *out = new cf_graph{g->graph.remove_nodes(set)};
  });
}

cf_status cf_graph_induced(const cf_graph* g, const size_t* indices, size_t count,
                           cf_graph** out) {
  return guarded([&] {
    require(g && out, "null argument");
    auto set = to_node_set(g->graph, indices, count);
    *out = new cf_graph{g->graph.induced(set)};
  });
}

cf_status cf_graph_write_edge_list(const cf_graph* g, const char* path) {
  return guarded([&] {
    require(g && path, "null argument");
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) fail(ErrorCode::Io, std::string("cannot write '") + path + "'");
    write_edge_list(file, g->graph);
    file.flush();
    if (!file) fail(ErrorCode::Io, std::string("write failed for '") + path + "'");
  });
}

cf_status cf_generate_uniform(size_t n, size_t m, uint64_t seed, cf_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new cf_graph{generate_uniform(n, m, seed)};
  });
}

cf_status cf_generate_powerlaw(size_t n, double exponent, uint64_t seed, cf_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new cf_graph{generate_powerlaw(n, exponent, seed)};
  });
}

// ---- players

namespace {
void fill_record(const PlayerRecord& r, cf_player_record* out) {
  out->char_id = r.char_id;
  out->has_clan = r.clan_id.has_value();
  out->clan_id = r.clan_id.value_or(0);
  out->online_time = r.online_time;
  out->kills = r.kills;
  out->level = r.level;
}
}  // namespace

cf_status cf_players_read(const char* path, cf_players** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new cf_players{read_metadata_file(path)};
  });
}

void cf_players_free(cf_players* p) { delete p; }

size_t cf_players_count(const cf_players* p) { return p ? p->table.size() : 0; }

cf_status cf_players_at(const cf_players* p, size_t i, cf_player_record* out) {
  return guarded([&] {
    require(p && out, "null argument");
    require(i < p->table.size(), "record index out of range");
    fill_record(p->table.records()[i], out);
  });
}

cf_status cf_players_find(const cf_players* p, int64_t char_id, cf_player_record* out) {
  return guarded([&] {
    require(p && out, "null argument");
    const PlayerRecord* r = p->table.find(char_id);
    if (!r) fail(ErrorCode::NotFound, "no record for character " + std::to_string(char_id));
    fill_record(*r, out);
  });
}

// ---- metrics

cf_status cf_degree_distribution(const cf_graph* g, cf_degree_point* points, size_t capacity,
                                 size_t* count, double* mean_degree) {
  cf_status buffer = CF_OK;
  cf_status s = guarded([&] {
    require(g && count, "null argument");
    auto dist = degree_distribution(g->graph);
    *count = dist.pmf.size();
    if (mean_degree) *mean_degree = dist.mean_degree;
    if (!points) return;
    if (capacity < dist.pmf.size()) {
      buffer = CF_ERR_BUFFER_TOO_SMALL;
      return;
    }
    for (size_t i = 0; i < dist.pmf.size(); ++i) {
      points[i] = {dist.pmf[i].degree, dist.pmf[i].fraction, dist.ccdf[i].fraction};
    }
  });
  if (s == CF_OK && buffer != CF_OK) return set_error(buffer, "degree buffer too small");
  return s;
}

cf_status cf_connected_components(const cf_graph* g, uint32_t* labels, cf_component_report* out) {
  return guarded([&] {
    require(g && out, "null argument");
    auto r = connected_components(g->graph);
    out->component_count = r.partition.block_count();
    out->largest_label = r.largest_block;
    out->largest_size = r.largest_size;
    out->largest_edge_count = r.largest_edge_count;
    if (labels) std::copy(r.partition.blocks().begin(), r.partition.blocks().end(), labels);
  });
}

cf_status cf_average_clustering(const cf_graph* g, double* out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = average_clustering(g->graph);
  });
}

cf_status cf_average_shortest_path(const cf_graph* g, const size_t* nodes, size_t count,
                                   cf_path_mode mode, size_t sample_sources, uint64_t seed,
                                   double* out) {
  return guarded([&] {
    require(g && out, "null argument");
    require(mode == CF_PATH_EXACT || mode == CF_PATH_SAMPLED, "unknown path mode");
    auto set = to_node_set(g->graph, nodes, count);
    PathOptions opts;
    opts.mode = mode == CF_PATH_SAMPLED ? PathMode::Sampled : PathMode::Exact;
    opts.sample_sources = sample_sources;
    opts.seed = seed;
    *out = average_shortest_path(g->graph, set, opts);
  });
}

cf_status cf_assess_small_world(size_t node_count, double mean_degree, double measured_avg_path,
                                double measured_clustering, double random_clustering,
                                double path_factor, double clustering_factor,
                                cf_small_world_report* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    SmallWorldThresholds t;
    if (path_factor > 0) t.path_factor = path_factor;
    if (clustering_factor > 0) t.clustering_factor = clustering_factor;
    auto r = assess_small_world(node_count, mean_degree, measured_avg_path, measured_clustering,
                                random_clustering, t);
    *out = {r.measured_avg_path, r.expected_avg_path, r.measured_clustering, r.random_clustering,
            r.verdict ? 1 : 0};
  });
}

// ---- power law

cf_status cf_fit_gamma_mle(const uint64_t* degrees, size_t count, uint64_t xmin,
                           cf_fit_report* out) {
  return guarded([&] {
    require(out && (degrees || count == 0), "null argument");
    auto r = fit_gamma_mle(std::span<const uint64_t>(degrees, count), xmin);
    *out = {r.gamma, r.xmin, r.sample_count};
  });
}

cf_status cf_model_pmf(double gamma, const uint64_t* degrees, size_t count, double* out) {
  return guarded([&] {
    require((degrees && out) || count == 0, "null argument");
    auto v = model_pmf(gamma, std::span<const uint64_t>(degrees, count));
    std::copy(v.begin(), v.end(), out);
  });
}

// ---- centrality

cf_status cf_pagerank(const cf_graph* g, double damping, double tolerance, size_t max_iterations,
                      double* scores, cf_pagerank_info* info) {
  return guarded([&] {
    require(g && scores, "null argument");
    auto r = pagerank(g->graph, {damping, tolerance, max_iterations});
    std::copy(r.scores.begin(), r.scores.end(), scores);
    if (info) *info = {r.iterations, r.converged ? 1 : 0, r.final_delta};
  });
}

cf_status cf_betweenness(const cf_graph* g, int normalized, double* scores) {
  return guarded([&] {
    require(g && (scores || g->graph.empty()), "null argument");
    auto r = betweenness(g->graph, normalized != 0);
    std::copy(r.scores.begin(), r.scores.end(), scores);
  });
}

// ---- communities

cf_status cf_map_equation(const cf_graph* g, const uint32_t* blocks, double teleport,
                          cf_map_score* out) {
  return guarded([&] {
    require(g && out, "null argument");
    auto s = map_equation(g->graph, partition_from(blocks, g->graph.node_count()), teleport);
    *out = {s.codelength, s.index_codelength, s.module_codelength};
  });
}

cf_status cf_detect_communities(const cf_graph* g, uint64_t seed, double teleport,
                                uint32_t* blocks, size_t* block_count, double* codelength) {
  return guarded([&] {
    require(g && (blocks || g->graph.empty()), "null argument");
    auto r = detect_communities_traced(g->graph, seed, teleport);
    std::copy(r.partition.blocks().begin(), r.partition.blocks().end(), blocks);
    if (block_count) *block_count = r.partition.block_count();
    if (codelength) *codelength = r.codelength;
  });
}

cf_status cf_nmi(const uint32_t* a, const uint32_t* b, size_t count, cf_nmi_norm norm,
                 double* out) {
  return guarded([&] {
    require(a && b && out, "null argument");
    *out = nmi(std::span<const BlockId>(a, count), std::span<const BlockId>(b, count),
               norm == CF_NMI_MAX ? NmiNorm::Max : NmiNorm::Mean);
  });
}

cf_status cf_clans_to_partition(const cf_graph* g, const cf_players* p, cf_clanless_policy policy,
                                size_t* nodes, uint32_t* blocks, size_t* count) {
  return guarded([&] {
    require(g && p && nodes && blocks && count, "null argument");
    ClanlessPolicy pol = ClanlessPolicy::Singleton;
    if (policy == CF_CLANLESS_DROP) pol = ClanlessPolicy::Drop;
    if (policy == CF_CLANLESS_ONE_BLOCK) pol = ClanlessPolicy::OneBlock;
    auto r = clans_to_partition(g->graph, p->table, pol);
    std::copy(r.nodes.begin(), r.nodes.end(), nodes);
    std::copy(r.partition.blocks().begin(), r.partition.blocks().end(), blocks);
    *count = r.nodes.size();
  });
}

// ---- cohorts

cf_status cf_classify_groups(const cf_graph* g, int strict, cf_cohorts** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new cf_cohorts{classify_groups(g->graph, strict != 0)};
  });
}

cf_status cf_classify_by_score(const double* scores, size_t count, double hardcore_fraction,
                               double peripheral_fraction, cf_cohorts** out) {
  return guarded([&] {
    require(out && (scores || count == 0), "null argument");
    std::vector<double> s(scores, scores + count);
    *out = new cf_cohorts{classify_by_score(s, hardcore_fraction, peripheral_fraction)};
  });
}

void cf_cohorts_free(cf_cohorts* c) { delete c; }

size_t cf_cohorts_node_count(const cf_cohorts* c) { return c ? c->assignment.label.size() : 0; }

cf_status cf_cohorts_labels(const cf_cohorts* c, uint8_t* labels) {
  return guarded([&] {
    require(c && (labels || c->assignment.label.empty()), "null argument");
    for (size_t i = 0; i < c->assignment.label.size(); ++i) {
      labels[i] = static_cast<uint8_t>(c->assignment.label[i]);
    }
  });
}

cf_status cf_cohorts_sizes(const cf_cohorts* c, size_t sizes[3]) {
  return guarded([&] {
    require(c && sizes, "null argument");
    sizes[0] = c->assignment.hardcore.size();
    sizes[1] = c->assignment.casual.size();
    sizes[2] = c->assignment.peripheral.size();
  });
}

size_t cf_cohorts_trace_length(const cf_cohorts* c) {
  return c ? c->assignment.removal_trace.size() : 0;
}

cf_status cf_cohorts_trace(const cf_cohorts* c, cf_removal_step* steps) {
  return guarded([&] {
    require(c && (steps || c->assignment.removal_trace.empty()), "null argument");
    for (size_t i = 0; i < c->assignment.removal_trace.size(); ++i) {
      const auto& s = c->assignment.removal_trace[i];
      steps[i] = {s.removed, s.scc_size, s.diss_count};
    }
  });
}

cf_status cf_cohorts_final_state(const cf_cohorts* c, size_t* scc_size, size_t* diss_count) {
  return guarded([&] {
    require(c && scc_size && diss_count, "null argument");
    *scc_size = c->assignment.final_scc_size;
    *diss_count = c->assignment.final_diss_count;
  });
}

cf_status cf_correlate_cohort(const cf_graph* g, const cf_cohorts* c, cf_cohort cohort,
                              const cf_players* p, cf_metric metric, double* r) {
  return guarded([&] {
    require(g && c && p && r, "null argument");
    require(cohort >= CF_COHORT_HARDCORE && cohort <= CF_COHORT_PERIPHERAL, "unknown cohort");
    *r = correlate_cohort(g->graph, c->assignment, static_cast<Cohort>(cohort), p->table,
                          to_metric(metric))
             .r;
  });
}

cf_status cf_correlate_scores(const cf_graph* g, const double* scores, const cf_players* p,
                              cf_metric metric, double* r) {
  return guarded([&] {
    require(g && scores && p && r, "null argument");
    std::vector<double> s(scores, scores + g->graph.node_count());
    *r = correlate_scores(g->graph, s, p->table, to_metric(metric)).r;
  });
}

// ---- recommendation

cf_status cf_clan_table_from_players(const cf_players* p, cf_clan_table** out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = new cf_clan_table{ClanTable::from_players(p->table)};
  });
}

cf_status cf_clan_table_read_points(cf_clan_table* t, const char* path) {
  return guarded([&] {
    require(t && path, "null argument");
    for (const auto& [clan, pts] : read_clan_points_file(path)) t->table.points[clan] = pts;
  });
}

cf_status cf_clan_table_set_points(cf_clan_table* t, int64_t clan_id, double points) {
  return guarded([&] {
    require(t != nullptr, "null argument");
    t->table.points[clan_id] = points;
  });
}

cf_status cf_clan_table_set_size(cf_clan_table* t, int64_t clan_id, size_t size) {
  return guarded([&] {
    require(t != nullptr, "null argument");
    t->table.sizes[clan_id] = size;
  });
}

void cf_clan_table_free(cf_clan_table* t) { delete t; }

void cf_recommend_config_init(cf_recommend_config* cfg) {
  if (!cfg) return;
  *cfg = {};
  cfg->max_rounds = 100;
  cfg->teleport = kDefaultTeleport;
}

const char* cf_outcome_string(cf_outcome o) {
  switch (o) {
    case CF_OUTCOME_CLAN: return to_string(Outcome::Clan);
    case CF_OUTCOME_ALREADY_IN_CLAN: return to_string(Outcome::AlreadyInClan);
    case CF_OUTCOME_NONE: return to_string(Outcome::NoRecommendation);
  }
  return "?";
}

const char* cf_reason_string(cf_no_rec_reason r) {
  return to_string(static_cast<NoRecommendationReason>(r));
}

namespace {
Partition communities_for(const Graph& g, const uint32_t* communities,
                          const RecommendConfig& cfg) {
  return communities ? partition_from(communities, g.node_count())
                     : detect_communities(g, cfg.seed, cfg.teleport);
}
}  // namespace

cf_status cf_recommend_clan(const cf_graph* g, const cf_players* p, const cf_clan_table* clans,
                            const uint32_t* communities, int64_t player,
                            const cf_recommend_config* cfg, cf_recommendation* out) {
  return guarded([&] {
    require(g && p && clans && out, "null argument");
    auto config = to_config(cfg);
    if (!g->graph.index_of(player)) {
      fail(ErrorCode::NotFound, "player " + std::to_string(player) + " is not in the graph");
    }
    *out = to_c(recommend_clan(g->graph, p->table, communities_for(g->graph, communities, config),
                               clans->table, player, config));
  });
}

cf_status cf_batch_recommend(const cf_graph* g, const cf_players* p, const cf_clan_table* clans,
                             const uint32_t* communities, const cf_recommend_config* cfg,
                             cf_recommendation* out, size_t capacity, size_t* count) {
  cf_status buffer = CF_OK;
  cf_status s = guarded([&] {
    require(g && p && clans && count, "null argument");
    auto config = to_config(cfg);
    size_t clanless = 0;
    for (CharId id : g->graph.ids()) {
      if (!p->table.clan_of(id)) ++clanless;
    }
    *count = clanless;
    if (!out) return;
    if (capacity < clanless) {
      buffer = CF_ERR_BUFFER_TOO_SMALL;
      return;
    }
    auto recs = batch_recommend(g->graph, p->table, clans->table, config,
                                communities_for(g->graph, communities, config));
    for (size_t i = 0; i < recs.size(); ++i) out[i] = to_c(recs[i]);
  });
  if (s == CF_OK && buffer != CF_OK) return set_error(buffer, "recommendation buffer too small");
  return s;
}

}  // extern "C"
