#pragma once

// Vertex covers, polarization, unmixedness, Stanley-Reisner complexes and a
// rational-homology Cohen-Macaulay oracle.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "koenig/core.hpp"

namespace koenig {

/// Sorted list of vertices (0-based).
using VertexSet = std::vector<std::size_t>;

std::vector<VertexSet> supports_of(const std::vector<Monomial>& ms);

/// All inclusion-minimal transversals of the supports, sorted
/// lexicographically. With `max_size`, only those of at most that size.
/// An empty list of supports has the single cover {}.
std::vector<VertexSet> minimal_covers(const std::vector<VertexSet>& supports,
                                      std::optional<std::size_t> max_size = std::nullopt);
std::size_t minimum_cover_size(const std::vector<VertexSet>& supports);
std::vector<VertexSet> minimum_covers(const std::vector<VertexSet>& supports);

std::size_t height_monomial(const IdealPresentation& ideal);
std::size_t height_monomial(const std::vector<Monomial>& gens);

struct Polarization {
  IdealPresentation ideal;
  /// New variable k stands for x_{origin[k].first} copy number origin[k].second (1-based).
  std::vector<std::pair<VarIndex, Exponent>> origin;
};

/// x_i^a becomes x_{i,1} ... x_{i,a}. A squarefree ideal maps to itself.
Polarization polarize(const IdealPresentation& ideal);

/// All associated primes have the same height (checked on the polarization).
bool is_unmixed(const IdealPresentation& ideal);

class SimplicialComplex {
 public:
  SimplicialComplex(std::size_t n, std::vector<VertexSet> facets);

  std::size_t num_vertices() const noexcept { return n_; }
  const std::vector<VertexSet>& facets() const noexcept { return facets_; }
  /// Maximal facet size minus one; -1 for the complex {{}}.
  int dimension() const;
  bool contains(const VertexSet& face) const;

 private:
  std::size_t n_;
  std::vector<VertexSet> facets_;
};

SimplicialComplex stanley_reisner_complex(const IdealPresentation& squarefree);
SimplicialComplex stanley_reisner_complex(std::size_t n, const std::vector<VertexSet>& supports);

/// Number of faces, the empty face included.
std::uint64_t face_count(const SimplicialComplex& complex);

/// e(S/I): minimal covers of the polarization of size height I.
std::uint64_t multiplicity(const IdealPresentation& ideal);

/// x_C for every cover C.
std::vector<Monomial> alexander_dual_generators(std::size_t n, const std::vector<VertexSet>& covers);

/// Reisner's criterion over Q. At most 14 vertices.
bool reisner_cm_oracle(const SimplicialComplex& complex);

/// Reduced Betti numbers over Q, index i holds dim H~_{i-1} (so index 0 is
/// the (-1)-homology, nonzero only for the complex {{}}).
std::vector<std::uint64_t> reduced_betti_numbers(const SimplicialComplex& complex);

}  // namespace koenig
