#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "clanforge/centrality.hpp"
#include "clanforge/error.hpp"
#include "clanforge/parallel.hpp"
#include "clanforge/synth.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace clanforge;

TEST_SUITE("pagerank") {

TEST_CASE("single edge splits evenly") {
  auto r = pagerank(fixtures::from_pairs({{1, 2}}));
  CHECK(r.scores[0] == doctest::Approx(0.5));
  CHECK(r.scores[1] == doctest::Approx(0.5));
  CHECK(r.converged);
}

TEST_CASE("regular graphs are uniform") {
  // cycle, complete graph, and a 3-regular prism
  std::vector<Graph> graphs{
      fixtures::from_pairs({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}),
      fixtures::joined_cliques(1, 6),
      fixtures::from_pairs({{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}),
  };
  for (const auto& g : graphs) {
    auto r = pagerank(g);
    for (double s : r.scores) CHECK(s == doctest::Approx(1.0 / g.node_count()).epsilon(1e-12));
  }
}

TEST_CASE("star K1,4 matches the linear-system oracle") {
  oracle::AdjMatrix a(5, std::vector<bool>(5, false));
  for (int leaf = 1; leaf <= 4; ++leaf) a[0][leaf] = a[leaf][0] = true;
  const auto expected = oracle::pagerank_linear(a, 0.85);
  auto r = pagerank(fixtures::star(4));
  for (int v = 0; v < 5; ++v) CHECK(std::abs(r.scores[v] - expected[v]) < 1e-6);
}

TEST_CASE("random graphs match the linear-system oracle") {
  std::mt19937_64 rng(31);
  int done = 0;
  while (done < 20) {
    auto a = oracle::random_matrix(9, 0.4, rng);
    bool dangling = false;
    for (auto& row : a) dangling |= std::none_of(row.begin(), row.end(), [](bool b) { return b; });
    if (dangling) continue;
    ++done;
    const auto expected = oracle::pagerank_linear(a, 0.85);
    auto r = pagerank(fixtures::from_pairs(oracle::matrix_edges(a), 9));
    for (int v = 0; v < 9; ++v) CHECK(std::abs(r.scores[v] - expected[v]) < 1e-9);
  }
}

TEST_CASE("scores sum to one and respect the teleport floor") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = generate_uniform(60, 70, seed);  // has isolated nodes
    auto r = pagerank(g);
    double sum = std::accumulate(r.scores.begin(), r.scores.end(), 0.0);
    CHECK(std::abs(sum - 1.0) < 1e-8);
    for (double s : r.scores) CHECK(s >= 0.15 / 60 - 1e-12);
  }
}

TEST_CASE("relabelling nodes permutes the scores") {
  std::mt19937_64 rng(4);
  Graph g = generate_uniform(40, 90, 12);
  std::vector<CharId> perm(40);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<EdgePair> relabelled;
  for (auto [u, v] : g.index_edges()) relabelled.push_back({perm[u], perm[v]});
  Graph h = Graph::build(relabelled, perm);
  auto a = pagerank(g).scores;
  auto b = pagerank(h).scores;
  for (NodeIndex v = 0; v < 40; ++v) {
    CHECK(a[v] == doctest::Approx(b[*h.index_of(perm[v])]).epsilon(1e-12));
  }
}

TEST_CASE("non-convergence is flagged, not thrown") {
  auto r = pagerank(generate_uniform(100, 300, 1), {0.85, 1e-30, 3});
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 3);
}

TEST_CASE("invalid damping") {
  CHECK_THROWS_AS(pagerank(fixtures::star(2), {1.0, 1e-10, 10}), Error);
  CHECK_THROWS_AS(pagerank(fixtures::star(2), {0.0, 1e-10, 10}), Error);
}

}  // TEST_SUITE

TEST_SUITE("betweenness") {

TEST_CASE("path and complete graph") {
  auto path = betweenness(fixtures::from_pairs({{1, 2}, {2, 3}}));
  CHECK(path.scores == std::vector<double>{0.0, 1.0, 0.0});
  auto k4 = betweenness(fixtures::joined_cliques(1, 4));
  for (double s : k4.scores) CHECK(s == 0.0);
}

TEST_CASE("normalisation divides by (n-1)(n-2)/2") {
  auto star = betweenness(fixtures::star(4), true);
  CHECK(star.scores[0] == doctest::Approx(1.0));  // 6 pairs / 6
  CHECK(star.normalized);
}

TEST_CASE("agrees with brute-force path enumeration on 100 random graphs") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> size(2, 12);
  std::uniform_real_distribution<double> density(0.15, 0.7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = size(rng);
    auto a = oracle::random_matrix(n, density(rng), rng);
    const auto expected = oracle::brute_betweenness(a);
    auto got = betweenness(fixtures::from_pairs(oracle::matrix_edges(a), n)).scores;
    for (int v = 0; v < n; ++v) CHECK(got[v] == doctest::Approx(expected[v]).epsilon(1e-12));
  }
}

TEST_CASE("trees: pairs separated by each node") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 30);
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    std::vector<std::vector<int>> adj(n);
    for (int v = 1; v < n; ++v) {
      int parent = static_cast<int>(rng() % v);
      edges.emplace_back(parent, v);
      adj[parent].push_back(v);
      adj[v].push_back(parent);
    }
    auto got = betweenness(fixtures::from_pairs(edges, n)).scores;
    for (int v = 0; v < n; ++v) {
      // sizes of the pieces left when v is deleted
      std::vector<long> pieces;
      std::vector<bool> seen(n, false);
      seen[v] = true;
      for (int start : adj[v]) {
        long count = 0;
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
          int u = stack.back();
          stack.pop_back();
          ++count;
          for (int w : adj[u])
            if (!seen[w]) {
              seen[w] = true;
              stack.push_back(w);
            }
        }
        pieces.push_back(count);
      }
      long separated = 0;
      for (std::size_t i = 0; i < pieces.size(); ++i)
        for (std::size_t j = i + 1; j < pieces.size(); ++j) separated += pieces[i] * pieces[j];
      CHECK(got[v] == doctest::Approx(static_cast<double>(separated)).epsilon(1e-12));
    }
  }
}

TEST_CASE("independent of the thread limit") {
  Graph g = generate_uniform(300, 700, 2);
  set_thread_limit(1);
  auto one = betweenness(g).scores;
  set_thread_limit(4);
  auto four = betweenness(g).scores;
  set_thread_limit(0);
  CHECK(one == four);
}

TEST_CASE("ranking breaks ties by index") {
  std::vector<double> s{0.2, 0.5, 0.2, 0.9};
  CHECK(rank_by_score(s) == std::vector<NodeIndex>{3, 1, 0, 2});
}

}  // TEST_SUITE
