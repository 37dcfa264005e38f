#include "clanforge/community.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "clanforge/centrality.hpp"
#include "clanforge/error.hpp"
#include "clanforge/random.hpp"

namespace clanforge {

namespace {

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

struct Link {
  std::uint32_t target;
  double flow;
};

// Directed flow network over (super-)nodes. Self-links are dropped: flow that
// stays inside a node never crosses a module boundary.
struct FlowGraph {
  std::vector<double> node_flow;
  std::vector<std::size_t> out_offsets{0}, in_offsets{0};
  std::vector<Link> out_links, in_links;
  std::vector<double> out_total, in_total;

  std::size_t size() const { return node_flow.size(); }
  std::span<const Link> out(std::size_t s) const {
    return {out_links.data() + out_offsets[s], out_links.data() + out_offsets[s + 1]};
  }
  std::span<const Link> in(std::size_t s) const {
    return {in_links.data() + in_offsets[s], in_links.data() + in_offsets[s + 1]};
  }
};

FlowGraph make_flow_graph(std::vector<double> node_flow,
                          std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> links) {
  FlowGraph f;
  const std::size_t n = node_flow.size();
  f.node_flow = std::move(node_flow);
  f.out_total.assign(n, 0.0);
  f.in_total.assign(n, 0.0);

  std::sort(links.begin(), links.end());
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> merged;
  for (const auto& l : links) {
    if (std::get<0>(l) == std::get<1>(l)) continue;
    if (!merged.empty() && std::get<0>(merged.back()) == std::get<0>(l) &&
        std::get<1>(merged.back()) == std::get<1>(l)) {
      std::get<2>(merged.back()) += std::get<2>(l);
    } else {
      merged.push_back(l);
    }
  }

  std::vector<std::size_t> out_deg(n, 0), in_deg(n, 0);
  for (const auto& [s, t, w] : merged) {
    ++out_deg[s];
    ++in_deg[t];
  }
  f.out_offsets.assign(n + 1, 0);
  f.in_offsets.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    f.out_offsets[i + 1] = f.out_offsets[i] + out_deg[i];
    f.in_offsets[i + 1] = f.in_offsets[i] + in_deg[i];
  }
  f.out_links.resize(merged.size());
  f.in_links.resize(merged.size());
  std::vector<std::size_t> oc(f.out_offsets.begin(), f.out_offsets.end() - 1);
  std::vector<std::size_t> ic(f.in_offsets.begin(), f.in_offsets.end() - 1);
  for (const auto& [s, t, w] : merged) {
    f.out_links[oc[s]++] = {t, w};
    f.in_links[ic[t]++] = {s, w};
    f.out_total[s] += w;
    f.in_total[t] += w;
  }
  return f;
}

FlowGraph base_flow(const Graph& g, double teleport) {
  if (!(teleport > 0.0 && teleport < 1.0)) {
    fail(ErrorCode::InvalidArgument, "teleport probability must lie in (0, 1)");
  }
  PageRankOptions opts;
  opts.damping = 1.0 - teleport;
  opts.tolerance = 1e-13;
  opts.max_iterations = 10000;
  std::vector<double> rate = pagerank(g, opts).scores;

  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> links;
  links.reserve(2 * g.edge_count());
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    const double share = g.degree(u) ? rate[u] / static_cast<double>(g.degree(u)) : 0.0;
    for (NodeIndex v : g.neighbors(u)) links.emplace_back(u, v, share);
  }
  return make_flow_graph(std::move(rate), std::move(links));
}

// Per-module aggregates that determine the codelength.
struct ModuleStats {
  std::vector<double> flow, exit, enter;
  double enter_sum = 0.0;

  void compute(const FlowGraph& f, std::span<const std::uint32_t> module, std::size_t modules) {
    flow.assign(modules, 0.0);
    exit.assign(modules, 0.0);
    enter.assign(modules, 0.0);
    for (std::size_t s = 0; s < f.size(); ++s) {
      flow[module[s]] += f.node_flow[s];
      for (const Link& l : f.out(s)) {
        if (module[l.target] != module[s]) {
          exit[module[s]] += l.flow;
          enter[module[l.target]] += l.flow;
        }
      }
    }
    enter_sum = std::accumulate(enter.begin(), enter.end(), 0.0);
  }

  MapScore score(double node_entropy_term) const {
    double index = plogp(enter_sum);
    double module = -node_entropy_term;
    for (std::size_t i = 0; i < flow.size(); ++i) {
      index -= plogp(enter[i]);
      module += plogp(exit[i] + flow[i]) - plogp(exit[i]);
    }
    MapScore s;
    s.index_codelength = index;
    s.module_codelength = module;
    s.codelength = s.index_codelength + s.module_codelength;
    return s;
  }
};

double node_entropy_term(const FlowGraph& f) {
  double sum = 0.0;
  for (double p : f.node_flow) sum += plogp(p);
  return sum;
}

// Runs local moves on one level. Returns the number of accepted moves;
// `module` is updated in place and `trace` receives the running codelength.
std::size_t local_moves(const FlowGraph& f, std::vector<std::uint32_t>& module, Rng& rng,
                        double node_term, double& codelength, std::vector<double>& trace) {
  const std::size_t n = f.size();
  ModuleStats st;
  st.compute(f, module, n);

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::vector<double> out_to(n, 0.0), in_from(n, 0.0);
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> candidates;

  std::size_t total_moves = 0;
  constexpr std::size_t kMaxPasses = 10000;
  for (std::size_t pass = 0; pass < kMaxPasses; ++pass) {
    rng.shuffle(std::span<std::uint32_t>(order));
    std::size_t moves = 0;
    for (std::uint32_t s : order) {
      const std::uint32_t from = module[s];
      candidates.clear();
      auto touch = [&](std::uint32_t m) {
        if (!seen[m]) {
          seen[m] = true;
          candidates.push_back(m);
        }
      };
      touch(from);
      for (const Link& l : f.out(s)) {
        touch(module[l.target]);
        out_to[module[l.target]] += l.flow;
      }
      for (const Link& l : f.in(s)) {
        touch(module[l.target]);
        in_from[module[l.target]] += l.flow;
      }
      std::sort(candidates.begin(), candidates.end());

      const double fs = f.node_flow[s];
      const double out_s = f.out_total[s];
      const double in_s = f.in_total[s];
      const double exit_from = st.exit[from] - (out_s - out_to[from]) + in_from[from];
      const double enter_from = st.enter[from] - (in_s - in_from[from]) + out_to[from];
      const double flow_from = st.flow[from] - fs;

      double best_delta = -kMinCodelengthGain;
      std::uint32_t best = from;
      double best_exit = 0, best_enter = 0;
      for (std::uint32_t to : candidates) {
        if (to == from) continue;
        const double exit_to = st.exit[to] + (out_s - out_to[to]) - in_from[to];
        const double enter_to = st.enter[to] + (in_s - in_from[to]) - out_to[to];
        const double enter_sum =
            st.enter_sum - st.enter[from] - st.enter[to] + enter_from + enter_to;
        const double delta =
            plogp(enter_sum) - plogp(st.enter_sum) -
            (plogp(enter_from) + plogp(enter_to) - plogp(st.enter[from]) - plogp(st.enter[to])) -
            (plogp(exit_from) + plogp(exit_to) - plogp(st.exit[from]) - plogp(st.exit[to])) +
            (plogp(exit_from + flow_from) + plogp(exit_to + st.flow[to] + fs) -
             plogp(st.exit[from] + st.flow[from]) - plogp(st.exit[to] + st.flow[to]));
        if (delta < best_delta) {
          best_delta = delta;
          best = to;
          best_exit = exit_to;
          best_enter = enter_to;
        }
      }

      if (best != from) {
        st.enter_sum += (enter_from - st.enter[from]) + (best_enter - st.enter[best]);
        st.exit[from] = exit_from;
        st.enter[from] = enter_from;
        st.flow[from] = flow_from;
        st.exit[best] = best_exit;
        st.enter[best] = best_enter;
        st.flow[best] += fs;
        module[s] = best;
        codelength += best_delta;
        trace.push_back(codelength);
        ++moves;
      }

      for (std::uint32_t m : candidates) {
        seen[m] = false;
        out_to[m] = 0.0;
        in_from[m] = 0.0;
      }
    }
    total_moves += moves;
    if (moves == 0) break;
    // Re-derive the aggregates so rounding drift cannot accumulate.
    st.compute(f, module, n);
    codelength = st.score(node_term).codelength;
  }
  return total_moves;
}

// Renumbers module ids to 0..k-1 by first appearance; returns k.
std::size_t compact(std::vector<std::uint32_t>& module) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> remap(module.size(), kUnset);
  std::uint32_t next = 0;
  for (auto& m : module) {
    if (remap[m] == kUnset) remap[m] = next++;
    m = remap[m];
  }
  return next;
}

FlowGraph aggregate(const FlowGraph& f, std::span<const std::uint32_t> module, std::size_t k) {
  std::vector<double> flow(k, 0.0);
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> links;
  for (std::size_t s = 0; s < f.size(); ++s) {
    flow[module[s]] += f.node_flow[s];
    for (const Link& l : f.out(s)) {
      if (module[l.target] != module[s]) links.emplace_back(module[s], module[l.target], l.flow);
    }
  }
  return make_flow_graph(std::move(flow), std::move(links));
}

}  // namespace

MapScore map_equation(const Graph& g, const Partition& p, double teleport) {
  if (p.size() != g.node_count()) {
    fail(ErrorCode::InvalidArgument, "partition covers " + std::to_string(p.size()) +
                                         " items but the graph has " +
                                         std::to_string(g.node_count()) + " nodes");
  }
  const FlowGraph f = base_flow(g, teleport);
  std::vector<std::uint32_t> module(p.blocks().begin(), p.blocks().end());
  ModuleStats st;
  st.compute(f, module, p.block_count());
  return st.score(node_entropy_term(f));
}

DetectionResult detect_communities_traced(const Graph& g, std::uint64_t seed, double teleport) {
  DetectionResult result;
  const std::size_t n = g.node_count();
  FlowGraph level = base_flow(g, teleport);
  const double node_term = node_entropy_term(level);
  Rng rng(seed);

  // assignment[v] = super-node of original node v at the current level
  std::vector<std::uint32_t> assignment(n);
  std::iota(assignment.begin(), assignment.end(), 0u);

  std::vector<std::uint32_t> module(n);
  std::iota(module.begin(), module.end(), 0u);
  ModuleStats st;
  st.compute(level, module, n);
  double codelength = st.score(node_term).codelength;

  while (level.size() > 0) {
    module.resize(level.size());
    std::iota(module.begin(), module.end(), 0u);
    ++result.levels;
    local_moves(level, module, rng, node_term, codelength, result.trace);
    const std::size_t k = compact(module);
    for (auto& a : assignment) a = module[a];
    if (k == level.size()) break;
    level = aggregate(level, module, k);
  }

  result.partition = Partition::from_labels<std::uint32_t>(assignment);
  result.codelength = codelength;
  return result;
}

double nmi(std::span<const BlockId> a, std::span<const BlockId> b, NmiNorm norm) {
  if (a.size() != b.size()) {
    fail(ErrorCode::InvalidArgument, "nmi: partitions cover " + std::to_string(a.size()) +
                                         " and " + std::to_string(b.size()) + " nodes");
  }
  if (a.empty()) fail(ErrorCode::InvalidArgument, "nmi: empty partitions");

  std::map<BlockId, std::size_t> ca, cb;
  std::map<std::pair<BlockId, BlockId>, std::size_t> joint;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ++ca[a[i]];
    ++cb[b[i]];
    ++joint[{a[i], b[i]}];
  }
  const double n = static_cast<double>(a.size());
  auto entropy = [n](const std::map<BlockId, std::size_t>& counts) {
    double h = 0.0;
    for (const auto& [block, c] : counts) {
      const double x = static_cast<double>(c);
      h += x / n * std::log(n / x);
    }
    return h;
  };
  const double ha = entropy(ca);
  const double hb = entropy(cb);
  double mi = 0.0;
  for (const auto& [key, c] : joint) {
    const double x = static_cast<double>(c);
    const double xa = static_cast<double>(ca[key.first]);
    const double xb = static_cast<double>(cb[key.second]);
    mi += x / n * std::log((n * x) / (xa * xb));
  }

  if (ha == 0.0 && hb == 0.0) return 1.0;
  const double denom = norm == NmiNorm::Mean ? 0.5 * (ha + hb) : std::max(ha, hb);
  return std::clamp(mi / denom, 0.0, 1.0);
}

NodePartition clans_to_partition(const Graph& g, const PlayerTable& players,
                                 ClanlessPolicy policy, std::span<const NodeIndex> nodes) {
  NodeSet selected(nodes.begin(), nodes.end());
  if (selected.empty()) {
    selected.resize(g.node_count());
    std::iota(selected.begin(), selected.end(), NodeIndex{0});
  }
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

  NodePartition out;
  std::vector<BlockId> blocks;
  std::map<ClanId, BlockId> clan_block;
  std::optional<BlockId> clanless_block;
  BlockId next = 0;
  for (NodeIndex v : selected) {
    if (v >= g.node_count()) fail(ErrorCode::InvalidArgument, "node index out of range");
    auto clan = players.clan_of(g.id_of(v));
    BlockId b;
    if (clan) {
      auto [it, inserted] = clan_block.emplace(*clan, next);
      if (inserted) ++next;
      b = it->second;
    } else if (policy == ClanlessPolicy::Drop) {
      continue;
    } else if (policy == ClanlessPolicy::OneBlock) {
      if (!clanless_block) clanless_block = next++;
      b = *clanless_block;
    } else {
      b = next++;
    }
    out.nodes.push_back(v);
    blocks.push_back(b);
  }
  out.partition = Partition(std::move(blocks));
  return out;
}

}  // namespace clanforge
