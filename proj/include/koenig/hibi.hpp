#pragma once

// Finite posets, distributive lattices of poset ideals and their Hibi
// ideals: thinness, the König criterion under reverse lex, and the canonical
// module through cells and admissible sets.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "koenig/graph.hpp"
#include "koenig/koenig.hpp"

namespace koenig {

/// Elements 0..m-1 (m <= 64). A cover (b, a) means b < a with nothing between.
class Poset {
 public:
  Poset() = default;
  Poset(std::size_t m, std::vector<std::pair<std::size_t, std::size_t>> covers,
        std::vector<std::string> names = {});

  std::size_t size() const noexcept { return m_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept { return covers_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Strict order.
  bool less(std::size_t a, std::size_t b) const { return below_[b] >> a & 1U; }
  bool comparable(std::size_t a, std::size_t b) const { return a == b || less(a, b) || less(b, a); }
  /// Elements strictly below a.
  std::uint64_t below(std::size_t a) const { return below_[a]; }

  /// Length of the longest chain ending at the element.
  std::size_t rank(std::size_t a) const { return rank_[a]; }
  std::size_t rank() const;
  /// L_i: the elements of rank i.
  std::vector<std::vector<std::size_t>> levels() const;

 private:
  std::size_t m_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::string> names_;
  std::vector<std::uint64_t> below_;
  std::vector<std::size_t> rank_;
};

/// {"elements": m, "covers": [[b, a], ...], "names": [...]} with 1-based b < a.
Poset parse_poset(std::string_view text);
nlohmann::json poset_json(const Poset& p);

Poset chain_poset(std::size_t m);
Poset antichain_poset(std::size_t m);
/// Disjoint union of chains with the given numbers of elements.
Poset chains_poset(const std::vector<std::size_t>& lengths);

/// Every maximal chain has length rank(P).
bool is_pure(const Poset& p);

SimpleGraph incomparability_graph(const Poset& p);

struct ThinResult {
  bool thin = true;
  std::optional<std::array<std::size_t, 3>> antichain;
};

ThinResult is_thin(const Poset& p);

struct TauReport {
  std::size_t exhaustive = 0;
  std::size_t formula = 0;
};

/// tau(incom(P)) by cover search and as n - (rank + 1). Requires P pure.
TauReport tau_incom(const Poset& p);

struct DilworthReport {
  bool thin = false;
  bool levels_at_most_two = false;
  bool two_chains = false;
  bool incom_bipartite = false;

  bool agree() const { return thin == levels_at_most_two && thin == two_chains && thin == incom_bipartite; }
};

/// The four conditions computed independently. Requires P pure.
DilworthReport dilworth_equivalences(const Poset& p);

/// Minimum number of chains covering P.
std::size_t min_chain_cover(const Poset& p);

class DistributiveLattice {
 public:
  DistributiveLattice(Poset base, std::vector<std::uint32_t> ideals);

  const Poset& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return ideals_.size(); }
  std::uint32_t ideal(std::size_t i) const { return ideals_[i]; }
  const std::vector<std::uint32_t>& ideals() const noexcept { return ideals_; }
  std::size_t index_of(std::uint32_t ideal) const;

  bool leq(std::size_t i, std::size_t j) const { return (ideals_[i] & ~ideals_[j]) == 0; }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }
  bool covers(std::size_t lower, std::size_t upper) const;
  std::size_t meet(std::size_t i, std::size_t j) const { return index_of(ideals_[i] & ideals_[j]); }
  std::size_t join(std::size_t i, std::size_t j) const { return index_of(ideals_[i] | ideals_[j]); }
  std::size_t rank(std::size_t i) const;
  std::size_t rank() const { return base_.size(); }

  /// The lattice as a poset (needs size <= 64).
  Poset as_poset() const;
  /// "{a,b}" in terms of the base element names.
  std::string label(std::size_t i) const;

 private:
  Poset base_;
  std::vector<std::uint32_t> ideals_;
  std::vector<std::uint32_t> sorted_;
  std::vector<std::size_t> position_;
};

/// All poset ideals, ordered by cardinality and then by bit value. |P| <= 20.
DistributiveLattice poset_ideals(const Poset& p);
DistributiveLattice boolean_lattice(std::size_t n);
/// J of the disjoint chains with n - 1 and m - 1 elements: the n x m grid.
DistributiveLattice segre_lattice(std::size_t n, std::size_t m);

nlohmann::json lattice_json(const DistributiveLattice& l);

struct HibiIdeal {
  IdealPresentation ideal;
  /// degrevlex with larger lattice elements as larger variables.
  MonomialOrder order;
  /// The incomparable pair behind each generator, in generator order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// x_i x_j - x_{i meet j} x_{i join j} for incomparable i < j; variables x1..xn
/// follow the lattice order.
HibiIdeal hibi_ideal(const DistributiveLattice& l);

/// Buchberger adds nothing and every generator has initial term x_i x_j.
bool verify_hibi_gb(const DistributiveLattice& l);

struct KoenigHibiReport {
  bool thin = false;
  bool bipartite_incom = false;
  bool koenig_revlex = false;
  std::size_t height = 0;
  /// f for the two-element levels, when L is thin.
  std::optional<KoenigCertificate> witness;
};

KoenigHibiReport koenig_hibi(const DistributiveLattice& l);

struct KoenigBoundReport {
  std::size_t size = 0;
  std::size_t join_irreducibles = 0;
  bool holds = false;
};

/// |L| <= 2(|T| + 1), T the join-irreducible elements.
KoenigBoundReport koenig_bound(const DistributiveLattice& l);

/// König certificate of I_{B_3} under lex x1 > ... > x8.
std::optional<KoenigCertificate> koenig_b3_lex(const DistributiveLattice& l);

struct Cell {
  std::size_t bottom = 0, alpha = 0, beta = 0, top = 0;

  std::array<std::size_t, 4> corners() const { return {bottom, alpha, beta, top}; }
  std::array<std::pair<std::size_t, std::size_t>, 4> edges() const {
    return {{{bottom, alpha}, {alpha, top}, {bottom, beta}, {beta, top}}};
  }
};

std::vector<Cell> cells(const DistributiveLattice& l);
bool is_admissible(const std::vector<Cell>& cells, std::uint64_t w);

struct AdmissibleSets {
  std::vector<Cell> cells;
  /// Nonempty admissible sets, by size and then lexicographically.
  std::vector<std::vector<std::size_t>> sets;
};

/// Requires L thin with at most 16 elements.
AdmissibleSets cells_and_admissible_sets(const DistributiveLattice& l);

struct HibiComponent {
  std::vector<std::size_t> W;
  /// Element sets of the connected unions of cells missed by W.
  std::vector<std::vector<std::size_t>> blocks;
  std::size_t height = 0;
};

struct HibiCanonicalModule {
  std::size_t height = 0;
  std::vector<HibiComponent> components;
  std::vector<PrimeComponent> surviving;
  /// Generators of the intersection when every survivor is generated by variables.
  std::optional<std::vector<Monomial>> intersection;
};

HibiCanonicalModule canonical_module_hibi(const DistributiveLattice& l);

std::vector<std::string> hibi_names(std::size_t n);

}  // namespace koenig
