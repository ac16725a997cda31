#pragma once

// Division, S-polynomials and Buchberger's algorithm for ideals generated by
// monomials and pure differences u - v. Every intermediate element stays a
// monomial or a pure difference, so no field arithmetic ever happens.

#include <cstdint>
#include <optional>
#include <vector>

#include "koenig/core.hpp"

namespace koenig {

/// A binomial or the zero element.
using MaybeBinomial = std::optional<Binomial>;

struct DivisionResult {
  bool divided = false;
  /// Meaningful only when divided; nullopt means the result is zero.
  MaybeBinomial remainder;
  bool divided_lead = true;
  Monomial multiplier;
};

/// One division step of f by g: the first term of f (lead, then trail)
/// divisible by ini(g) = u is replaced, wu -> wv. The remainder is
/// normalized with respect to `order`.
DivisionResult divide_once(const Binomial& f, const Binomial& g, const TermOrder& order);

struct ReductionStep {
  std::size_t divisor = 0;
  Monomial multiplier;
  bool divided_lead = true;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  MaybeBinomial result;
};

/// Divides repeatedly by the first applicable divisor in list order until the
/// result is zero or no term is divisible by any initial term. The divisors
/// are normalized internally. `step_budget` of zero means the default budget.
ReductionTrace reduce(const Binomial& f, const std::vector<Binomial>& divisors, const TermOrder& order,
                      std::uint64_t step_budget = 0);

/// Replays a trace from f; used to check traces independently.
MaybeBinomial replay(const Binomial& f, const std::vector<Binomial>& divisors, const TermOrder& order,
                     const ReductionTrace& trace);

/// With lcm(ini f, ini g) = u ini(f) = v ini(g), returns v trail(g) - u trail(f).
MaybeBinomial s_polynomial(const Binomial& f, const Binomial& g, const TermOrder& order);

struct GroebnerStats {
  std::uint64_t s_pairs = 0;
  std::uint64_t skipped_coprime = 0;
  std::uint64_t reductions = 0;
  std::uint64_t added = 0;
};

struct GroebnerBasis {
  TermOrder order;
  /// Normalized: lead is the initial term.
  std::vector<Binomial> elements;
  IdealPresentation source;
  GroebnerStats stats;

  std::vector<Monomial> initial_terms() const;
  bool is_unit() const;
};

struct BuchbergerOptions {
  bool auto_reduce = true;
  bool coprime_criterion = true;
  std::uint64_t max_reductions = 1'000'000;
  std::uint64_t max_pairs = 100'000;
};

GroebnerBasis buchberger(const IdealPresentation& ideal, const TermOrder& order, BuchbergerOptions options = {});

/// Buchberger's criterion checked exhaustively: every S-polynomial reduces to 0.
bool is_groebner_basis(const std::vector<Binomial>& elements, const TermOrder& order);

/// True iff f reduces to zero modulo the basis (ideal membership).
bool reduces_to_zero(const Binomial& f, const GroebnerBasis& gb);
bool contains(const GroebnerBasis& gb, const IdealPresentation& other);

/// Minimal monomial generators of ini(I).
IdealPresentation initial_ideal(const GroebnerBasis& gb);

/// h(0..max_degree) of S/I.
std::vector<std::uint64_t> hilbert_function(const IdealPresentation& ideal, const TermOrder& order,
                                            std::size_t max_degree);
std::vector<std::uint64_t> hilbert_function_monomial(std::size_t num_vars, const std::vector<Monomial>& gens,
                                                     std::size_t max_degree);

std::size_t quotient_dimension(const IdealPresentation& ideal, const TermOrder& order);
std::size_t quotient_dimension(const GroebnerBasis& gb);
bool is_zero_dimensional(const IdealPresentation& ideal, const TermOrder& order);
bool is_zero_dimensional(const GroebnerBasis& gb);

/// Number of standard monomials of a zero-dimensional quotient, i.e. the
/// K-dimension of S/I. Throws PreconditionError when S/I is not Artinian.
std::uint64_t quotient_length(const GroebnerBasis& gb);
std::uint64_t quotient_length(const IdealPresentation& ideal, const TermOrder& order);

/// I + (extra generators), ambient unchanged.
IdealPresentation ideal_sum(const IdealPresentation& ideal, const std::vector<Binomial>& extra);

}  // namespace koenig
