#include "clanforge/cohorts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "clanforge/error.hpp"

namespace clanforge {

const char* to_string(Cohort c) {
  switch (c) {
    case Cohort::Hardcore: return "hardcore";
    case Cohort::Casual: return "casual";
    case Cohort::Peripheral: return "peripheral";
  }
  return "?";
}

const char* to_string(Metric m) {
  return m == Metric::OnlineTime ? "online_time" : "kills";
}

const NodeSet& CohortAssignment::members(Cohort c) const {
  switch (c) {
    case Cohort::Hardcore: return hardcore;
    case Cohort::Casual: return casual;
    case Cohort::Peripheral: return peripheral;
  }
  return casual;
}

namespace {

void fill_sets(CohortAssignment& a) {
  for (NodeIndex v = 0; v < a.label.size(); ++v) {
    switch (a.label[v]) {
      case Cohort::Hardcore: a.hardcore.push_back(v); break;
      case Cohort::Casual: a.casual.push_back(v); break;
      case Cohort::Peripheral: a.peripheral.push_back(v); break;
    }
  }
}

// Largest component size among nodes not yet removed.
std::size_t largest_component(const Graph& g, const std::vector<bool>& removed,
                              std::vector<std::uint32_t>& stamp, std::uint32_t& epoch,
                              std::vector<NodeIndex>& stack) {
  ++epoch;
  std::size_t best = 0;
  for (NodeIndex s = 0; s < g.node_count(); ++s) {
    if (removed[s] || stamp[s] == epoch) continue;
    std::size_t size = 0;
    stamp[s] = epoch;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeIndex u = stack.back();
      stack.pop_back();
      ++size;
      for (NodeIndex v : g.neighbors(u)) {
        if (!removed[v] && stamp[v] != epoch) {
          stamp[v] = epoch;
          stack.push_back(v);
        }
      }
    }
    best = std::max(best, size);
  }
  return best;
}

}  // namespace

CohortAssignment classify_groups(const Graph& g, bool strict) {
  const std::size_t n = g.node_count();
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> degree = g.degrees();
  std::size_t diss = static_cast<std::size_t>(std::count(degree.begin(), degree.end(), 0));

  // (descending degree, ascending index): begin() is the next hub to remove
  auto cmp = [&degree](NodeIndex a, NodeIndex b) {
    return degree[a] != degree[b] ? degree[a] > degree[b] : a < b;
  };
  std::set<NodeIndex, decltype(cmp)> queue(cmp);
  for (NodeIndex v = 0; v < n; ++v) queue.insert(v);

  CohortAssignment out;
  out.label.assign(n, Cohort::Casual);
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t epoch = 0;
  std::vector<NodeIndex> stack;

  std::size_t scc = largest_component(g, removed, stamp, epoch, stack);
  auto keep_going = [&] {
    if (queue.empty()) return false;
    return strict ? scc > diss : scc >= diss;
  };
  while (keep_going()) {
    const NodeIndex hub = *queue.begin();
    out.removal_trace.push_back({hub, scc, diss});
    out.label[hub] = Cohort::Hardcore;
    queue.erase(queue.begin());
    removed[hub] = true;
    if (degree[hub] == 0) --diss;
    for (NodeIndex v : g.neighbors(hub)) {
      if (removed[v]) continue;
      queue.erase(v);
      if (--degree[v] == 0) ++diss;
      queue.insert(v);
    }
    degree[hub] = 0;
    scc = largest_component(g, removed, stamp, epoch, stack);
  }
  out.final_scc_size = scc;
  out.final_diss_count = diss;

  for (NodeIndex v = 0; v < n; ++v) {
    if (!removed[v] && degree[v] == 0) out.label[v] = Cohort::Peripheral;
  }
  fill_sets(out);
  return out;
}

CohortAssignment classify_by_score(const std::vector<double>& scores, double hardcore_fraction,
                                   double peripheral_fraction) {
  auto in_unit = [](double f) { return f > 0.0 && f < 1.0; };
  if (!in_unit(hardcore_fraction) || !in_unit(peripheral_fraction) ||
      !(hardcore_fraction + peripheral_fraction < 1.0)) {
    fail(ErrorCode::InvalidArgument,
         "cohort fractions must lie in (0, 1) and sum to less than 1");
  }
  const std::size_t n = scores.size();
  // The small slack stops 0.3 * 10 from rounding up to 4.
  auto count_for = [n](double f) {
    return static_cast<std::size_t>(std::ceil(f * static_cast<double>(n) - 1e-9));
  };
  const std::size_t top = std::min(n, count_for(hardcore_fraction));
  const std::size_t bottom = std::min(n - top, count_for(peripheral_fraction));

  const auto order = rank_by_score(scores);
  CohortAssignment out;
  out.label.assign(n, Cohort::Casual);
  for (std::size_t i = 0; i < top; ++i) out.label[order[i]] = Cohort::Hardcore;
  for (std::size_t i = n - bottom; i < n; ++i) out.label[order[i]] = Cohort::Peripheral;
  fill_sets(out);
  return out;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) fail(ErrorCode::InvalidArgument, "pearson: length mismatch");
  if (x.size() < 2) fail(ErrorCode::Domain, "pearson: needs at least two observations");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    fail(ErrorCode::Domain, "correlation undefined: zero variance");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> metric_vector(const Graph& g, const PlayerTable& players, Metric metric) {
  std::vector<double> out(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    const PlayerRecord* r = players.find(g.id_of(v));
    if (!r) {
      fail(ErrorCode::NotFound,
           "no metadata record for character " + std::to_string(g.id_of(v)));
    }
    out[v] = metric == Metric::OnlineTime ? r->online_time : static_cast<double>(r->kills);
  }
  return out;
}

CorrelationReport correlate_cohort(const Graph& g, const CohortAssignment& assignment,
                                   Cohort cohort, const PlayerTable& players, Metric metric) {
  if (assignment.label.size() != g.node_count()) {
    fail(ErrorCode::InvalidArgument, "cohort assignment does not match the graph");
  }
  std::vector<double> indicator(g.node_count());
  for (std::size_t v = 0; v < indicator.size(); ++v) {
    indicator[v] = assignment.label[v] == cohort ? 1.0 : 0.0;
  }
  return {pearson(indicator, metric_vector(g, players, metric)), metric, "point-biserial"};
}

CorrelationReport correlate_scores(const Graph& g, const std::vector<double>& scores,
                                   const PlayerTable& players, Metric metric) {
  if (scores.size() != g.node_count()) {
    fail(ErrorCode::InvalidArgument, "score vector does not match the graph");
  }
  return {pearson(scores, metric_vector(g, players, metric)), metric, "pearson"};
}

}  // namespace clanforge
