#include "koenig/groebner.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "koenig/simplicial.hpp"

namespace koenig {

namespace {

// The element w*replacement - other, as a normalized binomial or zero.
MaybeBinomial substitute(const Monomial& replaced_by, const std::optional<Monomial>& other, const TermOrder& order) {
  if (!other) return Binomial::monomial(replaced_by);
  if (replaced_by == *other) return std::nullopt;
  return Binomial::difference(replaced_by, *other).normalized(order);
}

}  // namespace

DivisionResult divide_once(const Binomial& f_in, const Binomial& g_in, const TermOrder& order) {
  const Binomial f = f_in.normalized(order);
  const Binomial g = g_in.normalized(order);
  const Monomial& u = g.lead();
  DivisionResult out;
  auto try_term = [&](const Monomial& term, const std::optional<Monomial>& other, bool is_lead) {
    if (!u.divides(term)) return false;
    out.divided = true;
    out.divided_lead = is_lead;
    out.multiplier = term.quotient(u);
    if (!g.trail()) {
      // g is a monomial: wu is replaced by 0, leaving the other term.
      out.remainder = other ? MaybeBinomial(Binomial::monomial(*other)) : std::nullopt;
    } else {
      out.remainder = substitute(out.multiplier * *g.trail(), other, order);
    }
    return true;
  };
  if (try_term(f.lead(), f.trail(), true)) return out;
  if (f.trail()) try_term(*f.trail(), f.lead(), false);
  return out;
}

ReductionTrace reduce(const Binomial& f, const std::vector<Binomial>& divisors, const TermOrder& order,
                      std::uint64_t step_budget) {
  const std::uint64_t budget = step_budget ? step_budget : scaled_budget(1'000'000);
  std::vector<Binomial> gs;
  gs.reserve(divisors.size());
  for (const auto& g : divisors) gs.push_back(g.normalized(order));

  ReductionTrace trace;
  MaybeBinomial current = f.normalized(order);
  while (current) {
    bool progressed = false;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      DivisionResult step = divide_once(*current, gs[i], order);
      if (!step.divided) continue;
      trace.steps.push_back({i, std::move(step.multiplier), step.divided_lead});
      current = std::move(step.remainder);
      progressed = true;
      break;
    }
    if (!progressed) break;
    if (trace.steps.size() > budget)
      throw BudgetExceeded("reduction exceeded " + std::to_string(budget) + " division steps");
  }
  trace.result = std::move(current);
  return trace;
}

MaybeBinomial replay(const Binomial& f, const std::vector<Binomial>& divisors, const TermOrder& order,
                     const ReductionTrace& trace) {
  MaybeBinomial current = f.normalized(order);
  for (const auto& step : trace.steps) {
    if (!current) throw PreconditionError("trace continues after reaching zero");
    if (step.divisor >= divisors.size()) throw PreconditionError("trace divisor out of range");
    const Binomial g = divisors[step.divisor].normalized(order);
    const Monomial& term = step.divided_lead ? current->lead() : *current->trail();
    if (step.multiplier * g.lead() != term) throw PreconditionError("trace step does not match the term");
    std::optional<Monomial> other = step.divided_lead ? current->trail() : std::optional<Monomial>(current->lead());
    if (!g.trail()) {
      current = other ? MaybeBinomial(Binomial::monomial(*other)) : std::nullopt;
    } else {
      current = substitute(step.multiplier * *g.trail(), other, order);
    }
  }
  return current;
}

MaybeBinomial s_polynomial(const Binomial& f_in, const Binomial& g_in, const TermOrder& order) {
  const Binomial f = f_in.normalized(order);
  const Binomial g = g_in.normalized(order);
  const Monomial l = f.lead().lcm(g.lead());
  const Monomial u = l.quotient(f.lead());
  const Monomial v = l.quotient(g.lead());
  std::optional<Monomial> a, b;
  if (g.trail()) a = v * *g.trail();
  if (f.trail()) b = u * *f.trail();
  if (!a && !b) return std::nullopt;
  if (!a) return Binomial::monomial(*b);
  if (!b) return Binomial::monomial(*a);
  if (*a == *b) return std::nullopt;
  return Binomial::difference(*a, *b).normalized(order);
}

std::vector<Monomial> GroebnerBasis::initial_terms() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back(g.lead());
  return out;
}

bool GroebnerBasis::is_unit() const {
  return std::any_of(elements.begin(), elements.end(), [](const Binomial& g) { return g.lead().is_one(); });
}

namespace {

void auto_reduce(std::vector<Binomial>& gs) {
  // Minimal basis: drop elements whose initial term is divisible by another's.
  std::vector<Binomial> minimal;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gs.size() && !redundant; ++j) {
      if (i == j) continue;
      if (gs[j].lead().divides(gs[i].lead()) && (gs[j].lead() != gs[i].lead() || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(gs[i]);
  }
  // Tail reduction: the trail is rewritten until no initial term divides it.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::optional<Monomial> tail = minimal[i].trail();
    bool changed = true;
    while (tail && changed) {
      changed = false;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j == i || !minimal[j].lead().divides(*tail)) continue;
        Monomial w = tail->quotient(minimal[j].lead());
        tail = minimal[j].trail() ? std::optional<Monomial>(w * *minimal[j].trail()) : std::nullopt;
        changed = true;
        break;
      }
    }
    minimal[i] = tail ? Binomial::difference(minimal[i].lead(), *tail) : Binomial::monomial(minimal[i].lead());
  }
  gs = std::move(minimal);
}

}  // namespace

GroebnerBasis buchberger(const IdealPresentation& ideal, const TermOrder& order, BuchbergerOptions options) {
  if (order.num_vars() != ideal.num_vars)
    throw PreconditionError("order and ideal have different numbers of variables");
  const std::uint64_t max_reductions = scaled_budget(options.max_reductions);
  const std::uint64_t max_pairs = scaled_budget(options.max_pairs);

  GroebnerBasis gb{order, {}, ideal, {}};
  auto& gs = gb.elements;
  for (const auto& g : ideal.generators) {
    Binomial h = g.normalized(order);
    if (std::none_of(gs.begin(), gs.end(), [&](const Binomial& e) { return e.same_element(h); }))
      gs.push_back(std::move(h));
  }

  // (lcm degree, second index, first index): smallest degree first, then age.
  using Pair = std::tuple<std::uint64_t, std::size_t, std::size_t>;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> queue;
  auto push_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) queue.emplace(gs[i].lead().lcm(gs[k].lead()).degree(), k, i);
  };
  for (std::size_t k = 0; k < gs.size(); ++k) push_pairs(k);

  bool unit = gb.is_unit();
  while (!queue.empty() && !unit) {
    auto [deg, j, i] = queue.top();
    queue.pop();
    if (++gb.stats.s_pairs > max_pairs)
      throw BudgetExceeded("Buchberger exceeded " + std::to_string(max_pairs) + " S-pairs");
    if (options.coprime_criterion && gs[i].lead().coprime(gs[j].lead())) {
      ++gb.stats.skipped_coprime;
      continue;
    }
    MaybeBinomial s = s_polynomial(gs[i], gs[j], order);
    if (!s) continue;
    const std::uint64_t left = max_reductions > gb.stats.reductions ? max_reductions - gb.stats.reductions : 1;
    ReductionTrace trace = reduce(*s, gs, order, left);
    gb.stats.reductions += trace.steps.size();
    if (!trace.result) continue;
    gs.push_back(trace.result->normalized(order));
    ++gb.stats.added;
    if (gs.back().lead().is_one()) {
      unit = true;
      break;
    }
    push_pairs(gs.size() - 1);
  }
  if (unit) {
    gs = {Binomial::monomial(Monomial(ideal.num_vars))};
    return gb;
  }
  if (options.auto_reduce) auto_reduce(gs);
  return gb;
}

bool is_groebner_basis(const std::vector<Binomial>& elements, const TermOrder& order) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      MaybeBinomial s = s_polynomial(elements[i], elements[j], order);
      if (s && reduce(*s, elements, order).result) return false;
    }
  }
  return true;
}

bool reduces_to_zero(const Binomial& f, const GroebnerBasis& gb) {
  return !reduce(f, gb.elements, gb.order).result.has_value();
}

bool contains(const GroebnerBasis& gb, const IdealPresentation& other) {
  return std::all_of(other.generators.begin(), other.generators.end(),
                     [&](const Binomial& f) { return reduces_to_zero(f, gb); });
}

IdealPresentation initial_ideal(const GroebnerBasis& gb) {
  return monomial_ideal(gb.source.num_vars, gb.initial_terms(), gb.source.names);
}

namespace {

// Counts monomials not divisible by any generator, either of one fixed total
// degree (degree >= 0) or inside the box given by `bounds` (degree < 0).
class StandardMonomialCounter {
 public:
  StandardMonomialCounter(std::size_t n, const std::vector<Monomial>& gens, std::uint64_t budget)
      : n_(n), gens_(gens), exps_(n, 0), budget_(budget) {
    last_var_.reserve(gens_.size());
    for (const auto& g : gens_) {
      auto s = g.support();
      last_var_.push_back(s.empty() ? 0 : s.back());
      if (s.empty()) unit_ = true;
    }
  }

  std::uint64_t of_degree(std::uint64_t degree) {
    if (unit_) return 0;
    std::vector<std::size_t> alive(gens_.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
    count_ = 0;
    if (n_ == 0) return degree == 0 ? 1 : 0;
    by_degree(0, degree, alive);
    return count_;
  }

  std::uint64_t in_box(const std::vector<Exponent>& bounds) {
    if (unit_) return 0;
    std::vector<std::size_t> alive(gens_.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
    count_ = 0;
    box(0, bounds, alive);
    return count_;
  }

 private:
  // Filters generators that can no longer divide once variable v is fixed;
  // returns false if some generator now certainly divides.
  bool advance(std::size_t v, const std::vector<std::size_t>& alive, std::vector<std::size_t>& next) const {
    next.clear();
    for (std::size_t g : alive) {
      if (gens_[g][v] > exps_[v]) continue;
      if (last_var_[g] <= v) return false;
      next.push_back(g);
    }
    return true;
  }

  void tick() {
    if (++count_ > budget_) throw BudgetExceeded("standard monomial enumeration exceeded its budget");
  }

  void by_degree(std::size_t v, std::uint64_t remaining, const std::vector<std::size_t>& alive) {
    std::vector<std::size_t> next;
    if (v + 1 == n_) {
      exps_[v] = static_cast<Exponent>(remaining);
      if (advance(v, alive, next)) tick();
      exps_[v] = 0;
      return;
    }
    for (std::uint64_t e = 0; e <= remaining; ++e) {
      exps_[v] = static_cast<Exponent>(e);
      if (advance(v, alive, next)) by_degree(v + 1, remaining - e, next);
    }
    exps_[v] = 0;
  }

  void box(std::size_t v, const std::vector<Exponent>& bounds, const std::vector<std::size_t>& alive) {
    if (v == n_) {
      tick();
      return;
    }
    std::vector<std::size_t> next;
    for (Exponent e = 0; e < bounds[v]; ++e) {
      exps_[v] = e;
      if (advance(v, alive, next)) box(v + 1, bounds, next);
    }
    exps_[v] = 0;
  }

  std::size_t n_;
  const std::vector<Monomial>& gens_;
  std::vector<Exponent> exps_;
  std::vector<VarIndex> last_var_;
  std::uint64_t count_ = 0;
  std::uint64_t budget_;
  bool unit_ = false;
};

std::vector<Exponent> pure_power_bounds(std::size_t n, const std::vector<Monomial>& gens) {
  std::vector<Exponent> bounds(n, 0);
  for (const auto& g : gens) {
    auto s = g.support();
    if (s.size() == 1) {
      Exponent e = g[s[0]];
      if (bounds[s[0]] == 0 || e < bounds[s[0]]) bounds[s[0]] = e;
    }
  }
  return bounds;
}

std::vector<Monomial> initial_generators(const GroebnerBasis& gb) { return minimal_monomials(gb.initial_terms()); }

}  // namespace

std::vector<std::uint64_t> hilbert_function_monomial(std::size_t num_vars, const std::vector<Monomial>& gens,
                                                     std::size_t max_degree) {
  StandardMonomialCounter counter(num_vars, gens, scaled_budget(100'000'000));
  std::vector<std::uint64_t> h;
  for (std::size_t k = 0; k <= max_degree; ++k) h.push_back(counter.of_degree(k));
  return h;
}

std::vector<std::uint64_t> hilbert_function(const IdealPresentation& ideal, const TermOrder& order,
                                            std::size_t max_degree) {
  GroebnerBasis gb = buchberger(ideal, order);
  return hilbert_function_monomial(ideal.num_vars, initial_generators(gb), max_degree);
}

std::size_t quotient_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) throw PreconditionError("the unit ideal has an empty quotient");
  const auto gens = initial_generators(gb);
  if (gens.empty()) return gb.source.num_vars;
  return gb.source.num_vars - minimum_cover_size(supports_of(gens));
}

std::size_t quotient_dimension(const IdealPresentation& ideal, const TermOrder& order) {
  if (ideal.is_zero()) return ideal.num_vars;
  return quotient_dimension(buchberger(ideal, order));
}

bool is_zero_dimensional(const GroebnerBasis& gb) {
  if (gb.is_unit()) return true;
  auto bounds = pure_power_bounds(gb.source.num_vars, initial_generators(gb));
  return std::all_of(bounds.begin(), bounds.end(), [](Exponent e) { return e > 0; });
}

bool is_zero_dimensional(const IdealPresentation& ideal, const TermOrder& order) {
  return is_zero_dimensional(buchberger(ideal, order));
}

std::uint64_t quotient_length(const GroebnerBasis& gb) {
  if (gb.is_unit()) return 0;
  const auto gens = initial_generators(gb);
  auto bounds = pure_power_bounds(gb.source.num_vars, gens);
  if (std::any_of(bounds.begin(), bounds.end(), [](Exponent e) { return e == 0; }))
    throw PreconditionError("quotient is not zero-dimensional");
  StandardMonomialCounter counter(gb.source.num_vars, gens, scaled_budget(100'000'000));
  return counter.in_box(bounds);
}

std::uint64_t quotient_length(const IdealPresentation& ideal, const TermOrder& order) {
  return quotient_length(buchberger(ideal, order));
}

IdealPresentation ideal_sum(const IdealPresentation& ideal, const std::vector<Binomial>& extra) {
  std::vector<Binomial> gens = ideal.generators;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return IdealPresentation(ideal.num_vars, std::move(gens), ideal.names);
}

}  // namespace koenig
