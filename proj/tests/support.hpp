#pragma once

// Shared generators and brute-force oracles for the test suites.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "koenig/core.hpp"
#include "koenig/graph.hpp"
#include "koenig/hibi.hpp"

namespace testing {

using koenig::Edge;
using koenig::SimpleGraph;

inline std::uint32_t graph_code(std::size_t n, const std::vector<std::uint32_t>& adj, const std::vector<std::size_t>& perm) {
  std::uint32_t code = 0;
  std::size_t b = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++b)
      if (adj[perm[i]] >> perm[j] & 1U) code |= 1U << b;
  return code;
}

// Minimum code over relabelings that keep a degree-refined vertex partition.
inline std::uint32_t canonical_code(std::size_t n, const std::vector<std::uint32_t>& adj) {
  std::vector<std::vector<int>> inv(n);
  for (std::size_t v = 0; v < n; ++v) {
    inv[v].push_back(std::popcount(adj[v]));
    std::vector<int> nd;
    for (std::size_t w = 0; w < n; ++w)
      if (adj[v] >> w & 1U) nd.push_back(std::popcount(adj[w]));
    std::sort(nd.begin(), nd.end());
    inv[v].insert(inv[v].end(), nd.begin(), nd.end());
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return inv[a] < inv[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint32_t best = UINT32_MAX;
  auto perm = order;
  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (c == cells.size()) {
      best = std::min(best, graph_code(n, adj, perm));
      return;
    }
    auto [lo, hi] = cells[c];
    std::sort(perm.begin() + static_cast<long>(lo), perm.begin() + static_cast<long>(hi));
    do {
      self(self, c + 1);
    } while (std::next_permutation(perm.begin() + static_cast<long>(lo), perm.begin() + static_cast<long>(hi)));
  };
  rec(rec, 0);
  return best;
}

inline SimpleGraph graph_from_code(std::size_t n, std::uint32_t code) {
  std::vector<Edge> edges;
  std::size_t b = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++b)
      if (code >> b & 1U) edges.emplace_back(i, j);
  return SimpleGraph(n, std::move(edges));
}

/// One representative per isomorphism class of graphs on n vertices.
inline std::vector<SimpleGraph> all_graphs(std::size_t n) {
  std::set<std::uint32_t> codes{0};
  for (std::size_t k = 2; k <= n; ++k) {
    std::set<std::uint32_t> next;
    for (auto code : codes) {
      SimpleGraph h = graph_from_code(k - 1, code);
      for (std::uint32_t nb = 0; nb < (1U << (k - 1)); ++nb) {
        std::vector<std::uint32_t> adj(k, 0);
        for (auto [a, b] : h.edges()) {
          adj[a] |= 1U << b;
          adj[b] |= 1U << a;
        }
        for (std::size_t v = 0; v + 1 < k; ++v)
          if (nb >> v & 1U) {
            adj[v] |= 1U << (k - 1);
            adj[k - 1] |= 1U << v;
          }
        next.insert(canonical_code(k, adj));
      }
    }
    codes = std::move(next);
  }
  std::vector<SimpleGraph> out;
  for (auto c : codes) out.push_back(graph_from_code(n, c));
  return out;
}

inline std::vector<SimpleGraph> connected_graphs(std::size_t n) {
  std::vector<SimpleGraph> out;
  for (auto& g : all_graphs(n))
    if (g.components().size() == 1) out.push_back(std::move(g));
  return out;
}

/// Connected graphs on 1..max_n vertices, up to isomorphism.
inline const std::vector<SimpleGraph>& connected_graphs_upto(std::size_t max_n) {
  static std::vector<SimpleGraph> cache;
  static std::size_t cached_n = 0;
  if (cached_n != max_n) {
    cache.clear();
    for (std::size_t n = 1; n <= max_n; ++n)
      for (auto& g : connected_graphs(n)) cache.push_back(std::move(g));
    cached_n = max_n;
  }
  return cache;
}

// Brute-force oracles ------------------------------------------------------------

inline std::size_t brute_tau(const SimpleGraph& g) {
  const std::size_t n = g.num_vertices();
  std::size_t best = n;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool cover = std::all_of(g.edges().begin(), g.edges().end(),
                             [&](const Edge& e) { return (s >> e.first & 1U) || (s >> e.second & 1U); });
    if (cover) best = std::min(best, static_cast<std::size_t>(std::popcount(s)));
  }
  return best;
}

inline std::size_t brute_matching(const SimpleGraph& g) {
  const auto& e = g.edges();
  std::size_t best = 0;
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t used, std::size_t k) -> void {
    best = std::max(best, k);
    for (std::size_t j = i; j < e.size(); ++j) {
      std::uint64_t m = (std::uint64_t{1} << e[j].first) | (std::uint64_t{1} << e[j].second);
      if (!(used & m)) self(self, j + 1, used | m, k + 1);
    }
  };
  rec(rec, 0, 0, 0);
  return best;
}

// Random objects ------------------------------------------------------------------

/// Random poset on m elements: a random relation i < j for i < j, transitively
/// closed, then reduced to covers.
inline koenig::Poset random_poset(std::mt19937& rng, std::size_t m, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::uint64_t> below(m, 0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (coin(rng)) below[j] |= (std::uint64_t{1} << i) | below[i];
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (!(below[j] >> i & 1U)) continue;
      bool direct = true;
      for (std::size_t k = i + 1; k < j && direct; ++k)
        if ((below[j] >> k & 1U) && (below[k] >> i & 1U)) direct = false;
      if (direct) covers.emplace_back(i, j);
    }
  return koenig::Poset(m, std::move(covers));
}

inline koenig::Monomial random_monomial(std::mt19937& rng, std::size_t n, unsigned degree) {
  std::vector<koenig::Exponent> e(n, 0);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  for (unsigned k = 0; k < degree; ++k) ++e[var(rng)];
  return koenig::Monomial(std::move(e));
}

/// Homogeneous binomial ideal: n variables, up to 5 generators of degree <= 3.
inline koenig::IdealPresentation random_binomial_ideal(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> count(1, 5), deg(1, 3), kind(0, 4);
  std::vector<koenig::Binomial> gens;
  const int k = count(rng);
  while (static_cast<int>(gens.size()) < k) {
    const unsigned d = static_cast<unsigned>(deg(rng));
    auto u = random_monomial(rng, n, d);
    if (kind(rng) == 0) {
      gens.push_back(koenig::Binomial::monomial(u));
      continue;
    }
    auto v = random_monomial(rng, n, d);
    if (u == v) continue;
    gens.push_back(koenig::Binomial::difference(u, v));
  }
  return koenig::IdealPresentation(n, std::move(gens));
}

inline std::vector<koenig::VarIndex> random_priority(std::mt19937& rng, std::size_t n) {
  std::vector<koenig::VarIndex> p(n);
  std::iota(p.begin(), p.end(), koenig::VarIndex{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace testing
