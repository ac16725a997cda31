#pragma once

// Binomial edge ideals J_G in K[x_1..x_n, y_1..y_n]. Variable x_i has index
// i and y_i has index n + i.

#include <optional>
#include <vector>

#include "koenig/graph.hpp"
#include "koenig/koenig.hpp"

namespace koenig {

/// f_ij = x_i y_j - x_j y_i for every edge i < j, in edge order.
IdealPresentation binomial_edge_ideal(const SimpleGraph& g);

/// lex with x_1 > ... > x_n > y_1 > ... > y_n.
MonomialOrder binomial_edge_order(std::size_t n);

/// lex with x_{sigma(1)} > ... > x_{sigma(n)} > y_{sigma(1)} > ... > y_{sigma(n)}.
MonomialOrder relabeled_binomial_edge_order(const std::vector<std::size_t>& sigma);

struct CutSetRecord {
  std::vector<std::size_t> T;
  std::size_t components = 0;
  std::size_t height = 0;
};

/// All cut sets T (T empty included), ordered by size then lexicographically.
std::vector<CutSetRecord> cut_sets(const SimpleGraph& g);

std::size_t dim_quotient(const SimpleGraph& g);
bool is_unmixed_JG(const SimpleGraph& g);

struct SemiPath {
  /// Each path listed from its smaller end point; paths ordered by first vertex.
  /// Vertices not covered by an edge are not listed.
  std::vector<std::vector<std::size_t>> paths;
  std::size_t length = 0;

  std::vector<Edge> edges() const;
};

bool is_semipath(const SimpleGraph& g, const std::vector<Edge>& edges);
SemiPath semipath_from_edges(std::size_t n, const std::vector<Edge>& edges);

/// A maximum spanning linear forest. Among maximum ones, the smallest by the
/// concatenated component vertex lists, where the end of a path compares
/// larger than any vertex (isolated vertices count as one-vertex paths).
SemiPath max_semipath(const SimpleGraph& g);

/// Certificate over the f_ij of a maximum semi-path, with the lex order
/// relabeled so every path is consecutive (the identity when it already is).
std::optional<KoenigCertificate> koenig_JG(const SimpleGraph& g);

/// Hamiltonian path of every component, or nullopt.
std::optional<std::vector<std::vector<std::size_t>>> is_traceable(const SimpleGraph& g);

struct SpecialSop {
  std::vector<LinearForm> forms;
  bool zero_dimensional = false;
  std::optional<std::uint64_t> length;
};

/// Per path v_1..v_m: x_{v_i} - y_{v_{i+1}}, x_{v_m} and y_{v_1}. Every
/// vertex of G must lie on one of the given paths (one-vertex paths allowed).
SpecialSop special_sop_JG(const SimpleGraph& g, const std::vector<std::vector<std::size_t>>& paths);

/// All components of a semi-path, one-vertex paths included.
std::vector<std::vector<std::size_t>> spanning_components(std::size_t n, const SemiPath& p);

MultiplicityReport cm_verdict_JG(const SimpleGraph& g);

struct CanonicalComponents {
  std::vector<std::size_t> path;
  std::vector<PrimeComponent> components;
  /// Those not containing another component modulo J_G.
  std::vector<PrimeComponent> irredundant;
};

/// P_T (as a prime of J_P) for T in cut(P) \ cut(G), P a Hamiltonian path of G.
CanonicalComponents canonical_components_JG(const SimpleGraph& g);

/// Generators of P_T(G): x_i, y_i for i in T, and f_ij inside each component of G \ T.
IdealPresentation prime_PT(const SimpleGraph& g, const std::vector<std::size_t>& T);
PrimeComponent prime_component_PT(const SimpleGraph& g, const std::vector<std::size_t>& T);

std::vector<std::string> binomial_edge_names(std::size_t n);

}  // namespace koenig
