#pragma once

// Exact monomials, pure-difference binomials, monomial orders and ideal
// presentations. Every generator is either a monomial u or a difference
// u - v of two distinct monomials; coefficients other than +1/-1 cannot be
// represented.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "koenig/errors.hpp"

namespace koenig {

using Exponent = std::uint32_t;
using VarIndex = std::size_t;

class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in `num_vars` variables.
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t num_vars, VarIndex i, Exponent power = 1);
  /// Squarefree product of the given variables.
  static Monomial product_of(std::size_t num_vars, std::span<const VarIndex> vars);

  std::size_t num_vars() const noexcept { return exps_.size(); }
  Exponent operator[](VarIndex i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept;

  bool is_one() const noexcept;
  bool is_squarefree() const noexcept;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  std::vector<VarIndex> support() const;

  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;

  /// Structural comparison (exponent vectors), not a monomial order.
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

void check_same_ambient(const Monomial& a, const Monomial& b);

enum class OrderKind { lex, degrevlex };

/// lex or degree-reverse-lex with an explicit variable priority;
/// priority[0] is the largest variable.
struct MonomialOrder {
  OrderKind kind = OrderKind::lex;
  std::vector<VarIndex> priority;

  static MonomialOrder lex(std::size_t n);
  static MonomialOrder degrevlex(std::size_t n);
  static MonomialOrder with_priority(OrderKind kind, std::vector<VarIndex> priority);

  std::size_t num_vars() const noexcept { return priority.size(); }
  void validate() const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Positive integer weights refined by a monomial order. Any positive
/// rational weight vector is represented after clearing denominators.
struct WeightOrder {
  std::vector<std::int64_t> weights;
  MonomialOrder tiebreak;

  void validate() const;
  friend bool operator==(const WeightOrder&, const WeightOrder&) = default;
};

/// The order actually used by the algorithms: an optional weight vector
/// compared first, then the tie-break order.
class TermOrder {
 public:
  TermOrder(MonomialOrder order);  // NOLINT(google-explicit-constructor)
  TermOrder(WeightOrder order);    // NOLINT(google-explicit-constructor)

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }
  std::size_t num_vars() const noexcept { return tiebreak_.num_vars(); }
  bool has_weights() const noexcept { return !weights_.empty(); }
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
  const MonomialOrder& tiebreak() const noexcept { return tiebreak_; }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  std::vector<std::int64_t> weights_;
  MonomialOrder tiebreak_;
};

std::strong_ordering compare(const Monomial& a, const Monomial& b, const TermOrder& order);

/// A monomial generator (no trail) or the pure difference lead - trail.
class Binomial {
 public:
  static Binomial monomial(Monomial m);
  /// Throws PreconditionError when lead == trail (the zero element).
  static Binomial difference(Monomial lead, Monomial trail);

  bool is_monomial() const noexcept { return !trail_.has_value(); }
  const Monomial& lead() const noexcept { return lead_; }
  const std::optional<Monomial>& trail() const noexcept { return trail_; }
  std::size_t num_vars() const noexcept { return lead_.num_vars(); }

  Monomial initial_term(const TermOrder& order) const;
  /// Same element with lead set to the order-larger term.
  Binomial normalized(const TermOrder& order) const;
  bool is_homogeneous() const;
  std::uint64_t degree() const { return lead_.degree(); }

  /// Equality as ideal elements: u - v equals v - u.
  bool same_element(const Binomial& other) const;

  friend bool operator==(const Binomial&, const Binomial&) = default;

 private:
  Binomial(Monomial lead, std::optional<Monomial> trail)
      : lead_(std::move(lead)), trail_(std::move(trail)) {}

  Monomial lead_;
  std::optional<Monomial> trail_;
};

Monomial initial_term(const Binomial& f, const TermOrder& order);

/// A variable x_i, or the difference x_other - x_anchor with anchor < other.
struct LinearForm {
  enum class Kind { variable, difference };
  Kind kind = Kind::variable;
  VarIndex anchor = 0;
  VarIndex other = 0;

  static LinearForm var(VarIndex i);
  static LinearForm diff(VarIndex a, VarIndex b);

  bool is_variable() const noexcept { return kind == Kind::variable; }
  Binomial to_binomial(std::size_t num_vars) const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend auto operator<=>(const LinearForm&, const LinearForm&) = default;
};

std::vector<std::string> default_variable_names(std::size_t n);

struct IdealPresentation {
  std::size_t num_vars = 0;
  std::vector<Binomial> generators;
  std::vector<std::string> names;

  IdealPresentation() = default;
  IdealPresentation(std::size_t n, std::vector<Binomial> gens,
                    std::vector<std::string> var_names = {});

  bool is_monomial() const;
  bool is_homogeneous() const;
  bool is_zero() const noexcept { return generators.empty(); }
  std::vector<Monomial> monomial_generators() const;
  /// Throws unless invariants hold.
  void validate() const;
  const std::string& name(VarIndex i) const { return names[i]; }
};

/// Monomial ideal presentation from a list of monomials (minimalized).
IdealPresentation monomial_ideal(std::size_t n, std::vector<Monomial> gens,
                                 std::vector<std::string> names = {});

/// Inclusion-minimal generators (no element divides another), stable order,
/// duplicates dropped.
std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens);

// Parsing and printing ---------------------------------------------------

/// Generators separated by ',' ';' or newlines; '#' starts a comment.
IdealPresentation parse_ideal(std::string_view text, const std::vector<std::string>& names);
/// Variable names discovered from the text, sorted naturally (x2 < x10).
std::vector<std::string> infer_variable_names(std::string_view text);

std::string to_string(const Monomial& m, const std::vector<std::string>& names);
std::string to_string(const Binomial& f, const std::vector<std::string>& names);
std::string to_string(const LinearForm& l, const std::vector<std::string>& names);
std::string to_string(const IdealPresentation& ideal);

/// True iff the monomials have pairwise disjoint supports.
bool monomials_regular_sequence(std::span<const Monomial> ms);

// JSON ---------------------------------------------------------------------

void to_json(nlohmann::json& j, const Monomial& m);
void from_json(const nlohmann::json& j, Monomial& m);
void to_json(nlohmann::json& j, const LinearForm& l);
void from_json(const nlohmann::json& j, LinearForm& l);
void to_json(nlohmann::json& j, const MonomialOrder& o);
void from_json(const nlohmann::json& j, MonomialOrder& o);
void to_json(nlohmann::json& j, const TermOrder& o);
void to_json(nlohmann::json& j, const IdealPresentation& ideal);
void from_json(const nlohmann::json& j, IdealPresentation& ideal);

}  // namespace koenig

namespace nlohmann {
template <>
struct adl_serializer<koenig::Binomial> {
  static koenig::Binomial from_json(const json& j);
  static void to_json(json& j, const koenig::Binomial& f);
};
}  // namespace nlohmann
