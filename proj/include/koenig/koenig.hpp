#pragma once

// Ideals of König type: certificates, the attached sequence of linear forms,
// realizability of initial-term selections by weight orders, and the
// field-independent Cohen-Macaulay tests.

#include <optional>
#include <string>
#include <vector>

#include "koenig/core.hpp"
#include "koenig/groebner.hpp"
#include "koenig/simplicial.hpp"

namespace koenig {

struct KoenigCertificate {
  /// The chosen elements f_1..f_h, normalized so lead is the initial term.
  std::vector<Binomial> generators;
  /// Position of each chosen element in the input generator list, or
  /// nullopt when it was taken from the reduced Gröbner basis.
  std::vector<std::optional<std::size_t>> generator_indices;
  TermOrder order;
  std::vector<Monomial> initials;
  std::vector<VarIndex> A;
  std::vector<std::vector<VarIndex>> B;
  std::vector<VarIndex> anchors;
  std::vector<LinearForm> C;
  /// Initials pairwise distinct and none divides another.
  bool verified_minimal = false;

  std::size_t height() const noexcept { return generators.size(); }
};

/// Builds A, B_j, anchors and C from chosen elements whose initial terms
/// under `order` are pairwise coprime. No height check.
KoenigCertificate make_certificate(std::size_t num_vars, std::vector<Binomial> chosen,
                                   std::vector<std::optional<std::size_t>> indices, const TermOrder& order);

/// Certificate for the given input generators; checks coprimality and that
/// their number is the height of the ideal.
KoenigCertificate attached_sequence(const IdealPresentation& ideal, const std::vector<std::size_t>& gens,
                                    const TermOrder& order);

/// Searches G(I) in input order for height-many pairwise coprime generators.
std::optional<KoenigCertificate> koenig_monomial(const IdealPresentation& ideal);

/// Per generator: true selects lead, false selects trail.
using TermSelection = std::vector<bool>;

/// Positive integer weights w with w.(chosen - other) > 0 for every selected
/// binomial, or nullopt. The returned order breaks ties by degrevlex.
std::optional<WeightOrder> realizable_initial_selection(const IdealPresentation& ideal,
                                                        const TermSelection& choices);

struct RealizabilityReport {
  bool feasible = false;
  std::optional<WeightOrder> witness;
  /// When infeasible: an irreducible infeasible subset of the selected
  /// comparisons, as generator indices and as readable inequalities.
  std::vector<std::size_t> conflict;
  std::vector<std::string> inequalities;
};

RealizabilityReport realizability_report(const IdealPresentation& ideal, const TermSelection& choices);

/// Inequality "w1 > w3" for chosen - other after cancelling common factors.
std::string weight_inequality(const Monomial& chosen, const Monomial& other);

/// With an order: initials are fixed and the candidates are the input
/// generators plus reduced Gröbner basis elements of the minimal generator
/// degree (homogeneous ideals only). Without: every realizable choice of
/// terms on the input generators is searched.
std::optional<KoenigCertificate> koenig_graded(const IdealPresentation& ideal,
                                               const std::optional<TermOrder>& order = std::nullopt);

/// Replaces x_other by x_anchor for each difference in B and x_i by 0 for
/// each variable in B; the result is minimalized.
IdealPresentation modify(const IdealPresentation& ideal, const std::vector<LinearForm>& B);

struct IBVerdict {
  bool cohen_macaulay = false;
  std::optional<std::vector<LinearForm>> failing_B;
  std::uint64_t subsets_checked = 0;
};

/// All 2^|C| modifications unmixed; subsets visited in increasing bitmask
/// order (bit i stands for C[i]), the first failure is reported.
IBVerdict cm_test_IB(const IdealPresentation& ideal, const KoenigCertificate& cert);

enum class MultiplicityVerdict { cohen_macaulay, not_cohen_macaulay, not_parameters };

struct MultiplicityReport {
  std::uint64_t multiplicity = 0;
  std::optional<std::uint64_t> length;
  MultiplicityVerdict verdict = MultiplicityVerdict::not_parameters;
};

MultiplicityReport cm_test_multiplicity(const IdealPresentation& ideal, const std::vector<LinearForm>& sop,
                                        const TermOrder& order);
MultiplicityReport cm_test_multiplicity(const IdealPresentation& ideal, const KoenigCertificate& cert,
                                        const TermOrder& order);

std::string to_string(MultiplicityVerdict v);

/// Polarized support union equals height times the common degree.
bool very_well_covered_check(const IdealPresentation& ideal);

/// A prime given by variables and complete-graph or lattice blocks; only the
/// variable part is used for monomial intersections.
struct PrimeComponent {
  std::vector<VarIndex> variables;
  std::vector<std::vector<std::size_t>> blocks;
  std::string label;

  friend bool operator==(const PrimeComponent& a, const PrimeComponent& b) {
    return a.variables == b.variables && a.blocks == b.blocks;
  }
};

struct LinkageResult {
  /// min(J) \ min(I): the components of J : I.
  std::vector<PrimeComponent> colon;
  /// min(J) and min(I) in common: the components of the unmixed part.
  std::vector<PrimeComponent> unmixed;
};

LinkageResult unmixed_part_via_linkage(const std::vector<PrimeComponent>& min_J,
                                       const std::vector<PrimeComponent>& min_I);
/// Monomial case: J a squarefree complete intersection inside I of the same height.
LinkageResult unmixed_part_via_linkage(const IdealPresentation& ideal, const IdealPresentation& ci);

/// Minimal primes of a monomial ideal as variable components.
std::vector<PrimeComponent> monomial_minimal_primes(const IdealPresentation& ideal);

/// Intersection of primes generated by variables: x_T for the minimal
/// transversals T of their variable sets.
std::vector<Monomial> intersect_variable_primes(std::size_t num_vars, const std::vector<PrimeComponent>& primes);

/// Readable JSON; variables rendered with `names`, input indices 1-based.
nlohmann::json certificate_json(const KoenigCertificate& cert, const std::vector<std::string>& names);
nlohmann::json order_json(const TermOrder& order, const std::vector<std::string>& names);

}  // namespace koenig
