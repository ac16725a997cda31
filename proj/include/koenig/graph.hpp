#pragma once

// Simple graphs and their edge ideals: matchings, vertex covers, König
// graphs, and the Cohen-Macaulay, type and regularity reports.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "koenig/core.hpp"
#include "koenig/koenig.hpp"
#include "koenig/simplicial.hpp"

namespace koenig {

using Edge = std::pair<std::size_t, std::size_t>;

/// Vertices 0..n-1; edges stored with first < second, sorted. At most 64 vertices.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_edge(std::size_t a, std::size_t b) const;
  std::uint64_t neighbor_mask(std::size_t v) const { return adj_[v]; }
  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const;

  /// Components of the graph with the vertices in `removed` deleted; each
  /// component sorted, components ordered by smallest vertex.
  std::vector<std::vector<std::size_t>> components(std::uint64_t removed = 0) const;
  bool is_bipartite() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

SimpleGraph complete_graph(std::size_t n);
SimpleGraph path_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);

/// "n" then one "i j" per line, 1-based; '#' comments. Or JSON {"n":..,"edges":[[i,j],..]}.
SimpleGraph parse_graph(std::string_view text);
nlohmann::json graph_json(const SimpleGraph& g);

IdealPresentation edge_ideal(const SimpleGraph& g);
std::vector<VertexSet> edge_supports(const SimpleGraph& g);

/// A maximum matching; the first one in a deterministic search.
std::vector<Edge> maximum_matching(const SimpleGraph& g);
std::size_t matching_number(const SimpleGraph& g);
std::size_t tau(const SimpleGraph& g);
bool is_koenig(const SimpleGraph& g);

struct MatchingCertificate {
  std::vector<Edge> edges;
  bool is_perfect_koenig = false;
};

std::optional<MatchingCertificate> perfect_koenig_matching(const SimpleGraph& g);

SimpleGraph build_H(const SimpleGraph& g, const std::vector<Edge>& matching);

struct G0Graph {
  SimpleGraph graph;
  /// labels[k] = smaller endpoint of the k-th matching edge.
  std::vector<std::size_t> labels;
};

G0Graph build_G0(const SimpleGraph& g, const std::vector<Edge>& matching);

/// The independence complex of a graph (Stanley-Reisner complex of its edge ideal).
SimplicialComplex independence_complex(const SimpleGraph& g);

/// König certificate of I(G) whose generators are the matching edges.
KoenigCertificate matching_certificate(const SimpleGraph& g, const std::vector<Edge>& matching);

struct EdgeCanonicalModule {
  std::vector<Edge> matching;
  SimpleGraph H;
  std::vector<VertexSet> covers;
  /// x_C for the minimal covers C of H; the single generator 1 means ω ≅ R.
  std::vector<Monomial> generators;
  std::size_t type = 0;
};

EdgeCanonicalModule canonical_module_edge(const SimpleGraph& g);

struct EdgeReport {
  std::size_t matching_number = 0;
  std::size_t tau = 0;
  bool koenig = false;
  std::uint64_t alpha = 0;
  std::uint64_t faces = 0;
  bool cohen_macaulay = false;
  std::optional<std::size_t> type;
  std::optional<int> regularity;
  std::vector<Edge> matching;
  G0Graph g0;
};

EdgeReport koenig_cm_report(const SimpleGraph& g);

}  // namespace koenig
