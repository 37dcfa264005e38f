#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "clanforge/centrality.hpp"
#include "clanforge/graph.hpp"
#include "clanforge/players.hpp"

namespace clanforge {

enum class Cohort : unsigned char { Hardcore = 0, Casual = 1, Peripheral = 2 };

const char* to_string(Cohort c);

struct RemovalStep {
  NodeIndex removed = 0;
  std::size_t scc_size = 0;    // largest component before the removal
  std::size_t diss_count = 0;  // degree-0 nodes before the removal
};

struct CohortAssignment {
  std::vector<Cohort> label;  // per node
  NodeSet hardcore, casual, peripheral;
  std::vector<RemovalStep> removal_trace;
  std::size_t final_scc_size = 0;
  std::size_t final_diss_count = 0;

  const NodeSet& members(Cohort c) const;
};

/// Hub-removal classification. While the largest component of the residual
/// graph is at least as large as its set of degree-0 nodes (strictly larger
/// with `strict`), the highest residual-degree node (lowest id on ties) is
/// moved to Hardcore and removed. Remaining degree-0 nodes are Peripheral,
/// the rest Casual.
CohortAssignment classify_groups(const Graph& g, bool strict = false);

inline constexpr double kDefaultHardcoreFraction = 0.07;
inline constexpr double kDefaultPeripheralFraction = 0.14;

/// Score-ranked grouping: the top ceil(h*n) nodes are Hardcore, the bottom
/// ceil(p*n) Peripheral. Ranking ties break by ascending id.
CohortAssignment classify_by_score(const std::vector<double>& scores, double hardcore_fraction,
                                   double peripheral_fraction);

enum class Metric { OnlineTime, Kills };

const char* to_string(Metric m);

struct CorrelationReport {
  double r = 0.0;
  Metric metric = Metric::OnlineTime;
  std::string method;
};

/// Pearson correlation; throws Domain when either vector has zero variance.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

/// Metric value per graph node. Throws NotFound if a node lacks a record.
std::vector<double> metric_vector(const Graph& g, const PlayerTable& players, Metric metric);

/// Point-biserial correlation of cohort membership with the metric.
CorrelationReport correlate_cohort(const Graph& g, const CohortAssignment& assignment,
                                   Cohort cohort, const PlayerTable& players, Metric metric);

/// Pearson correlation of raw scores with the metric.
CorrelationReport correlate_scores(const Graph& g, const std::vector<double>& scores,
                                   const PlayerTable& players, Metric metric);

}  // namespace clanforge
