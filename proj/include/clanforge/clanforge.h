/*
 * clanforge C API.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a cf_status; on
 * failure cf_last_error() describes the problem for the calling thread.
 * Node indices follow ascending character id, so index order is id order.
 *
 * Array outputs use caller-provided buffers. Calls that produce a
 * variable-length result take a capacity and write the required length to
 * *count; passing a NULL buffer only queries the length, and a short buffer
 * yields CF_ERR_BUFFER_TOO_SMALL.
 */
#ifndef CLANFORGE_H
#define CLANFORGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(CLANFORGE_BUILDING_LIBRARY)
#define CF_API __attribute__((visibility("default")))
#else
#define CF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cf_status {
  CF_OK = 0,
  CF_ERR_INVALID_ARGUMENT = 1,
  CF_ERR_PARSE = 2,
  CF_ERR_IO = 3,
  CF_ERR_DOMAIN = 4,        /* result undefined for this input */
  CF_ERR_NOT_FOUND = 5,
  CF_ERR_DISCONNECTED = 6,
  CF_ERR_BUFFER_TOO_SMALL = 7,
  CF_ERR_INTERNAL = 99
} cf_status;

CF_API const char* cf_status_string(cf_status status);
CF_API const char* cf_last_error(void);
CF_API const char* cf_version(void);

/* Caps worker threads for internal parallel loops; 0 = hardware default. */
CF_API void cf_set_thread_limit(unsigned limit);

/* ---- graphs ---------------------------------------------------------- */

typedef struct cf_graph cf_graph;

typedef struct cf_ingest_summary {
  size_t pairs_read;
  size_t self_loops;
  size_t duplicates;
} cf_ingest_summary;

/* Edge-list text; path "-" reads standard input. */
CF_API cf_status cf_graph_read_edge_list(const char* path, cf_graph** out);
/* ids holds pair_count (a, b) pairs back to back. */
CF_API cf_status cf_graph_from_pairs(const int64_t* ids, size_t pair_count, cf_graph** out);
CF_API void cf_graph_free(cf_graph* g);

CF_API size_t cf_graph_node_count(const cf_graph* g);
CF_API size_t cf_graph_edge_count(const cf_graph* g);
CF_API cf_status cf_graph_ingest_summary(const cf_graph* g, cf_ingest_summary* out);
CF_API cf_status cf_graph_node_id(const cf_graph* g, size_t index, int64_t* id);
CF_API cf_status cf_graph_node_index(const cf_graph* g, int64_t id, size_t* index);
/* degrees: node_count entries */
CF_API cf_status cf_graph_degrees(const cf_graph* g, size_t* degrees);
CF_API cf_status cf_graph_remove_nodes(const cf_graph* g, const size_t* indices, size_t count,
                                       cf_graph** out);
CF_API cf_status cf_graph_induced(const cf_graph* g, const size_t* indices, size_t count,
                                  cf_graph** out);
CF_API cf_status cf_graph_write_edge_list(const cf_graph* g, const char* path);

CF_API cf_status cf_generate_uniform(size_t n, size_t m, uint64_t seed, cf_graph** out);
CF_API cf_status cf_generate_powerlaw(size_t n, double exponent, uint64_t seed, cf_graph** out);

/* ---- player metadata ------------------------------------------------- */

typedef struct cf_players cf_players;

typedef struct cf_player_record {
  int64_t char_id;
  int has_clan;
  int64_t clan_id;
  double online_time;
  int64_t kills;
  int64_t level;
} cf_player_record;

CF_API cf_status cf_players_read(const char* path, cf_players** out);
CF_API void cf_players_free(cf_players* p);
CF_API size_t cf_players_count(const cf_players* p);
CF_API cf_status cf_players_at(const cf_players* p, size_t i, cf_player_record* out);
CF_API cf_status cf_players_find(const cf_players* p, int64_t char_id, cf_player_record* out);

/* ---- metrics --------------------------------------------------------- */

typedef struct cf_degree_point {
  uint64_t degree;
  double pmf;
  double ccdf;
} cf_degree_point;

CF_API cf_status cf_degree_distribution(const cf_graph* g, cf_degree_point* points,
                                        size_t capacity, size_t* count, double* mean_degree);

typedef struct cf_component_report {
  size_t component_count;
  uint32_t largest_label;
  size_t largest_size;
  size_t largest_edge_count;
} cf_component_report;

/* labels may be NULL; otherwise node_count entries. */
CF_API cf_status cf_connected_components(const cf_graph* g, uint32_t* labels,
                                         cf_component_report* out);
CF_API cf_status cf_average_clustering(const cf_graph* g, double* out);

typedef enum cf_path_mode { CF_PATH_EXACT = 0, CF_PATH_SAMPLED = 1 } cf_path_mode;

CF_API cf_status cf_average_shortest_path(const cf_graph* g, const size_t* nodes, size_t count,
                                          cf_path_mode mode, size_t sample_sources,
                                          uint64_t seed, double* out);

typedef struct cf_small_world_report {
  double measured_avg_path;
  double expected_avg_path;
  double measured_clustering;
  double random_clustering;
  int verdict;
} cf_small_world_report;

/* path_factor / clustering_factor <= 0 select the defaults (2 and 10). */
CF_API cf_status cf_assess_small_world(size_t node_count, double mean_degree,
                                       double measured_avg_path, double measured_clustering,
                                       double random_clustering, double path_factor,
                                       double clustering_factor, cf_small_world_report* out);

/* ---- power law ------------------------------------------------------- */

typedef struct cf_fit_report {
  double gamma;
  uint64_t xmin;
  size_t sample_count;
} cf_fit_report;

CF_API cf_status cf_fit_gamma_mle(const uint64_t* degrees, size_t count, uint64_t xmin,
                                  cf_fit_report* out);
CF_API cf_status cf_model_pmf(double gamma, const uint64_t* degrees, size_t count, double* out);

/* ---- centrality ------------------------------------------------------ */

typedef struct cf_pagerank_info {
  size_t iterations;
  int converged;
  double final_delta;
} cf_pagerank_info;

/* scores: node_count entries; info may be NULL. */
CF_API cf_status cf_pagerank(const cf_graph* g, double damping, double tolerance,
                             size_t max_iterations, double* scores, cf_pagerank_info* info);
CF_API cf_status cf_betweenness(const cf_graph* g, int normalized, double* scores);

/* ---- communities ----------------------------------------------------- */

typedef struct cf_map_score {
  double codelength;
  double index_codelength;
  double module_codelength;
} cf_map_score;

/* blocks: node_count contiguous block ids. */
CF_API cf_status cf_map_equation(const cf_graph* g, const uint32_t* blocks, double teleport,
                                 cf_map_score* out);
CF_API cf_status cf_detect_communities(const cf_graph* g, uint64_t seed, double teleport,
                                       uint32_t* blocks, size_t* block_count,
                                       double* codelength);

typedef enum cf_nmi_norm { CF_NMI_MEAN = 0, CF_NMI_MAX = 1 } cf_nmi_norm;

CF_API cf_status cf_nmi(const uint32_t* a, const uint32_t* b, size_t count, cf_nmi_norm norm,
                        double* out);

typedef enum cf_clanless_policy {
  CF_CLANLESS_SINGLETON = 0,
  CF_CLANLESS_DROP = 1,
  CF_CLANLESS_ONE_BLOCK = 2
} cf_clanless_policy;

/* Clan partition over all graph nodes (minus dropped ones). nodes and blocks
 * need node_count entries; *count receives the number written. */
CF_API cf_status cf_clans_to_partition(const cf_graph* g, const cf_players* p,
                                       cf_clanless_policy policy, size_t* nodes,
                                       uint32_t* blocks, size_t* count);

/* ---- cohorts --------------------------------------------------------- */

typedef enum cf_cohort {
  CF_COHORT_HARDCORE = 0,
  CF_COHORT_CASUAL = 1,
  CF_COHORT_PERIPHERAL = 2
} cf_cohort;

typedef enum cf_metric { CF_METRIC_ONLINE_TIME = 0, CF_METRIC_KILLS = 1 } cf_metric;

typedef struct cf_removal_step {
  size_t removed;     /* node index */
  size_t scc_size;
  size_t diss_count;
} cf_removal_step;

typedef struct cf_cohorts cf_cohorts;

CF_API cf_status cf_classify_groups(const cf_graph* g, int strict, cf_cohorts** out);
CF_API cf_status cf_classify_by_score(const double* scores, size_t count,
                                      double hardcore_fraction, double peripheral_fraction,
                                      cf_cohorts** out);
CF_API void cf_cohorts_free(cf_cohorts* c);
CF_API size_t cf_cohorts_node_count(const cf_cohorts* c);
/* labels: node_count cf_cohort values as uint8_t */
CF_API cf_status cf_cohorts_labels(const cf_cohorts* c, uint8_t* labels);
CF_API cf_status cf_cohorts_sizes(const cf_cohorts* c, size_t sizes[3]);
CF_API size_t cf_cohorts_trace_length(const cf_cohorts* c);
CF_API cf_status cf_cohorts_trace(const cf_cohorts* c, cf_removal_step* steps);
CF_API cf_status cf_cohorts_final_state(const cf_cohorts* c, size_t* scc_size,
                                        size_t* diss_count);

CF_API cf_status cf_correlate_cohort(const cf_graph* g, const cf_cohorts* c, cf_cohort cohort,
                                     const cf_players* p, cf_metric metric, double* r);
CF_API cf_status cf_correlate_scores(const cf_graph* g, const double* scores,
                                     const cf_players* p, cf_metric metric, double* r);

/* ---- clan recommendation -------------------------------------------- */

typedef struct cf_clan_table cf_clan_table;

/* Sizes count every member listed in the player table. */
CF_API cf_status cf_clan_table_from_players(const cf_players* p, cf_clan_table** out);
/* CSV "clan_id,points" with header. */
CF_API cf_status cf_clan_table_read_points(cf_clan_table* t, const char* path);
CF_API cf_status cf_clan_table_set_points(cf_clan_table* t, int64_t clan_id, double points);
CF_API cf_status cf_clan_table_set_size(cf_clan_table* t, int64_t clan_id, size_t size);
CF_API void cf_clan_table_free(cf_clan_table* t);

typedef struct cf_recommend_config {
  size_t max_clan_size;
  int has_points_balance;
  double points_balance;
  size_t max_rounds;
  uint64_t seed;
  double teleport;
  int reuse_partition;
} cf_recommend_config;

/* Defaults: max_rounds 100, teleport 0.15, no points balance. max_clan_size
 * has no default and must be set. */
CF_API void cf_recommend_config_init(cf_recommend_config* cfg);

typedef enum cf_outcome {
  CF_OUTCOME_CLAN = 0,
  CF_OUTCOME_ALREADY_IN_CLAN = 1,
  CF_OUTCOME_NONE = 2
} cf_outcome;

typedef enum cf_no_rec_reason {
  CF_REASON_NONE = 0,
  CF_REASON_NO_COMMUNITY_SIGNAL = 1,
  CF_REASON_NO_CLAN_IN_COMMUNITY = 2,
  CF_REASON_MAX_ROUNDS = 3
} cf_no_rec_reason;

typedef struct cf_recommendation {
  int64_t player;
  cf_outcome outcome;
  int has_clan;
  int64_t clan_id;
  cf_no_rec_reason reason;
  size_t rounds_used;
} cf_recommendation;

CF_API const char* cf_outcome_string(cf_outcome o);
CF_API const char* cf_reason_string(cf_no_rec_reason r);

/* communities: node_count block ids, or NULL to detect with cfg->seed. */
CF_API cf_status cf_recommend_clan(const cf_graph* g, const cf_players* p,
                                   const cf_clan_table* clans, const uint32_t* communities,
                                   int64_t player, const cf_recommend_config* cfg,
                                   cf_recommendation* out);
CF_API cf_status cf_batch_recommend(const cf_graph* g, const cf_players* p,
                                    const cf_clan_table* clans, const uint32_t* communities,
                                    const cf_recommend_config* cfg, cf_recommendation* out,
                                    size_t capacity, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* CLANFORGE_H */
