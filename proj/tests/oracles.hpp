#pragma once

// Independent reference computations for the test suites. Nothing here
// shares code with the library's algorithms.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using AdjMatrix = std::vector<std::vector<bool>>;

// Small random graph as an adjacency matrix, G(n, p) style.
inline AdjMatrix random_matrix(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  AdjMatrix a(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) a[i][j] = a[j][i] = true;
    }
  }
  return a;
}

inline std::vector<std::pair<std::int64_t, std::int64_t>> matrix_edges(const AdjMatrix& a) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i][j]) out.emplace_back(i, j);
    }
  }
  return out;
}

// Floyd-Warshall distances; -1 for unreachable.
inline std::vector<std::vector<int>> all_pairs(const AdjMatrix& a) {
  const std::size_t n = a.size();
  constexpr int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

// Betweenness by listing every shortest path of every unordered pair.
inline std::vector<double> brute_betweenness(const AdjMatrix& a) {
  const std::size_t n = a.size();
  const auto d = all_pairs(a);
  std::vector<double> b(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (d[s][t] <= 1) continue;
      std::vector<std::vector<std::size_t>> paths;
      std::vector<std::size_t> path{s};
      std::function<void(std::size_t)> walk = [&](std::size_t u) {
        if (u == t) {
          paths.push_back(path);
          return;
        }
        for (std::size_t v = 0; v < n; ++v) {
          if (a[u][v] && d[s][v] == d[s][u] + 1 && d[v][t] == d[u][t] - 1) {
            path.push_back(v);
            walk(v);
            path.pop_back();
          }
        }
      };
      walk(s);
      std::vector<std::size_t> through(n, 0);
      for (const auto& p : paths)
        for (std::size_t i = 1; i + 1 < p.size(); ++i) ++through[p[i]];
      for (std::size_t v = 0; v < n; ++v) {
        b[v] += static_cast<double>(through[v]) / static_cast<double>(paths.size());
      }
    }
  }
  return b;
}

// Dense Gaussian elimination with partial pivoting: solves A x = rhs.
inline std::vector<double> solve(std::vector<std::vector<double>> a, std::vector<double> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    std::swap(rhs[c], rhs[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= a[i][i];
  return rhs;
}

// Stationary PageRank from the linear system
//   (I - d P^T) x = (1 - d)/n * 1   (graph without dangling nodes).
inline std::vector<double> pagerank_linear(const AdjMatrix& adj, double d) {
  const std::size_t n = adj.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  std::vector<double> deg(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) deg[i] += adj[i][j] ? 1.0 : 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (adj[j][i]) a[i][j] -= d / deg[j];
    }
  }
  return solve(a, std::vector<double>(n, (1.0 - d) / static_cast<double>(n)));
}

// Two-level map equation in bits, evaluated directly from the module sums
//   L = q H(Q) + sum_i (exit_i + sum_{a in i} p_a) H(P^i)
// where Q holds module enter rates and q their sum. Visit rates come from
// the linear PageRank system (no dangling nodes).
inline double map_codelength(const AdjMatrix& adj, const std::vector<int>& module, double teleport) {
  const std::size_t n = adj.size();
  const auto p = pagerank_linear(adj, 1.0 - teleport);
  int k = 0;
  for (int m : module) k = std::max(k, m + 1);
  std::vector<double> exit(k, 0.0), enter(k, 0.0), inside(k, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    double deg = 0;
    for (std::size_t v = 0; v < n; ++v) deg += adj[u][v] ? 1.0 : 0.0;
    inside[module[u]] += p[u];
    for (std::size_t v = 0; v < n; ++v)
      if (adj[u][v] && module[u] != module[v]) {
        exit[module[u]] += p[u] / deg;
        enter[module[v]] += p[u] / deg;
      }
  }
  auto h = [](const std::vector<double>& w) {
    double total = 0, out = 0;
    for (double x : w) total += x;
    if (total <= 0) return 0.0;
    for (double x : w)
      if (x > 0) out -= x / total * std::log2(x / total);
    return out;
  };
  double q = 0;
  for (double x : enter) q += x;
  double length = q * h(enter);
  for (int m = 0; m < k; ++m) {
    std::vector<double> w{exit[m]};
    for (std::size_t u = 0; u < n; ++u)
      if (module[u] == m) w.push_back(p[u]);
    length += (exit[m] + inside[m]) * h(w);
  }
  return length;
}

// Textbook two-pass Pearson correlation via explicit covariance.
inline double covariance_pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double cov = 0, vx = 0, vy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cov += (x[i] - mx) * (y[i] - my) / n;
    vx += (x[i] - mx) * (x[i] - mx) / n;
    vy += (y[i] - my) * (y[i] - my) / n;
  }
  return cov / (std::sqrt(vx) * std::sqrt(vy));
}

// NMI straight from the joint probability table, 2I/(H1+H2).
inline double table_nmi(const std::vector<int>& a, const std::vector<int>& b) {
  const double n = static_cast<double>(a.size());
  std::map<int, double> ca, cb;
  std::map<std::pair<int, int>, double> cab;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ca[a[i]] += 1;
    cb[b[i]] += 1;
    cab[{a[i], b[i]}] += 1;
  }
  double ha = 0, hb = 0, mi = 0;
  for (auto& [k, c] : ca) ha -= c / n * std::log(c / n);
  for (auto& [k, c] : cb) hb -= c / n * std::log(c / n);
  for (auto& [k, c] : cab) mi += c / n * std::log(c * n / (ca[k.first] * cb[k.second]));
  if (ha + hb == 0) return 1.0;
  return 2 * mi / (ha + hb);
}

}  // namespace oracle
