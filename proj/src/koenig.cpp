#include "koenig/koenig.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace koenig {

// Certificates ------------------------------------------------------------------

KoenigCertificate make_certificate(std::size_t num_vars, std::vector<Binomial> chosen,
                                   std::vector<std::optional<std::size_t>> indices, const TermOrder& order) {
  if (indices.size() != chosen.size()) throw PreconditionError("index list length differs from the chosen list");
  KoenigCertificate cert{{}, std::move(indices), order, {}, {}, {}, {}, {}, false};
  std::vector<bool> used(num_vars, false);
  for (auto& f : chosen) {
    Binomial g = f.normalized(order);
    const Monomial& u = g.lead();
    if (u.is_one()) throw PreconditionError("an initial term equal to 1 cannot be part of a regular sequence");
    auto support = u.support();
    for (auto v : support) {
      if (used[v]) throw PreconditionError("initial terms are not pairwise coprime");
      used[v] = true;
    }
    cert.initials.push_back(u);
    cert.anchors.push_back(support.front());
    cert.B.push_back(std::move(support));
    cert.generators.push_back(std::move(g));
  }
  for (VarIndex v = 0; v < num_vars; ++v) {
    if (!used[v]) {
      cert.A.push_back(v);
      cert.C.push_back(LinearForm::var(v));
    }
  }
  for (std::size_t j = 0; j < cert.B.size(); ++j)
    for (auto k : cert.B[j])
      if (k != cert.anchors[j]) cert.C.push_back(LinearForm::diff(cert.anchors[j], k));
  return cert;
}

namespace {

// Input initials pairwise distinct, none dividing another.
bool initials_minimal(const IdealPresentation& ideal, const TermOrder& order) {
  std::vector<Monomial> inis;
  for (const auto& g : ideal.generators) inis.push_back(g.initial_term(order));
  for (std::size_t i = 0; i < inis.size(); ++i)
    for (std::size_t j = 0; j < inis.size(); ++j)
      if (i != j && inis[i].divides(inis[j])) return false;
  return true;
}

std::size_t ideal_height(const IdealPresentation& ideal, const TermOrder& order) {
  return ideal.num_vars - quotient_dimension(ideal, order);
}

}  // namespace

KoenigCertificate attached_sequence(const IdealPresentation& ideal, const std::vector<std::size_t>& gens,
                                    const TermOrder& order) {
  std::vector<Binomial> chosen;
  std::vector<std::optional<std::size_t>> indices;
  for (auto i : gens) {
    if (i >= ideal.generators.size()) throw PreconditionError("generator index out of range");
    chosen.push_back(ideal.generators[i]);
    indices.emplace_back(i);
  }
  const std::size_t h = ideal_height(ideal, order);
  if (gens.size() != h)
    throw PreconditionError("expected " + std::to_string(h) + " generators (the height), got " +
                            std::to_string(gens.size()));
  auto cert = make_certificate(ideal.num_vars, std::move(chosen), std::move(indices), order);
  cert.verified_minimal = initials_minimal(ideal, order);
  return cert;
}

namespace {

// First family (in candidate order) of `h` pairwise coprime monomials.
class CoprimeSearch {
 public:
  CoprimeSearch(const std::vector<Monomial>& candidates, std::size_t h) : cands_(candidates), h_(h) {
    for (const auto& c : cands_) {
      supports_.push_back(c.support());
      if (!supports_.back().empty()) min_support_ = std::min(min_support_, supports_.back().size());
    }
  }

  std::optional<std::vector<std::size_t>> run(std::size_t num_vars) {
    free_ = num_vars;
    std::vector<bool> used(num_vars, false);
    std::vector<std::size_t> chosen;
    if (search(0, used, chosen)) return chosen;
    return std::nullopt;
  }

 private:
  bool search(std::size_t start, std::vector<bool>& used, std::vector<std::size_t>& chosen) {
    if (chosen.size() == h_) return true;
    if (cands_.size() - start < h_ - chosen.size()) return false;
    // Disjoint supports need at least min_support_ fresh variables each.
    if (free_ / min_support_ < h_ - chosen.size()) return false;
    for (std::size_t i = start; i < cands_.size(); ++i) {
      const auto& s = supports_[i];
      if (s.empty()) continue;
      if (std::any_of(s.begin(), s.end(), [&](VarIndex v) { return used[v]; })) continue;
      for (auto v : s) used[v] = true;
      free_ -= s.size();
      chosen.push_back(i);
      if (search(i + 1, used, chosen)) return true;
      chosen.pop_back();
      free_ += s.size();
      for (auto v : s) used[v] = false;
    }
    return false;
  }

  const std::vector<Monomial>& cands_;
  std::vector<VertexSet> supports_;
  std::size_t h_;
  std::size_t min_support_ = std::numeric_limits<std::size_t>::max();
  std::size_t free_ = 0;
};

}  // namespace

std::optional<KoenigCertificate> koenig_monomial(const IdealPresentation& ideal) {
  const auto gens = ideal.monomial_generators();
  const auto minimal = minimal_monomials(gens);
  std::vector<Monomial> cands;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (std::find(minimal.begin(), minimal.end(), gens[i]) == minimal.end()) continue;
    if (std::find(cands.begin(), cands.end(), gens[i]) != cands.end()) continue;
    cands.push_back(gens[i]);
    origin.push_back(i);
  }
  const std::size_t h = gens.empty() ? 0 : height_monomial(gens);
  auto found = CoprimeSearch(cands, h).run(ideal.num_vars);
  if (!found) return std::nullopt;
  std::vector<Binomial> chosen;
  std::vector<std::optional<std::size_t>> indices;
  for (auto k : *found) {
    chosen.push_back(Binomial::monomial(cands[k]));
    indices.emplace_back(origin[k]);
  }
  auto cert = make_certificate(ideal.num_vars, std::move(chosen), std::move(indices), MonomialOrder::lex(ideal.num_vars));
  cert.verified_minimal = initials_minimal(ideal, cert.order);
  return cert;
}

// Realizability ---------------------------------------------------------------

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::rational<BigInt>;

// a.w >= b
struct Row {
  std::vector<BigInt> a;
  BigInt b;
  bool operator<(const Row& o) const { return a != o.a ? a < o.a : b < o.b; }
};

void normalize(Row& r) {
  BigInt g = abs(r.b);
  for (const auto& x : r.a) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : r.a) x /= g;
    r.b /= g;
  }
}

bool all_zero(const Row& r) {
  return std::all_of(r.a.begin(), r.a.end(), [](const BigInt& x) { return x == 0; });
}

// Fourier-Motzkin elimination over the rationals. Returns positive integer
// weights when feasible.
std::optional<std::vector<std::int64_t>> solve(std::vector<Row> rows, std::size_t n) {
  const std::size_t row_limit = scaled_budget(200'000);
  for (std::size_t i = 0; i < n; ++i) {
    Row r{std::vector<BigInt>(n, 0), 1};
    r.a[i] = 1;
    rows.push_back(std::move(r));
  }
  std::vector<std::vector<Row>> stages;
  for (std::size_t j = 0; j < n; ++j) {
    std::set<Row> next;
    std::vector<const Row*> pos, neg;
    for (const auto& r : rows) {
      if (r.a[j] > 0) pos.push_back(&r);
      else if (r.a[j] < 0) neg.push_back(&r);
      else next.insert(r);
    }
    for (const Row* p : pos) {
      for (const Row* q : neg) {
        Row c{std::vector<BigInt>(n, 0), 0};
        const BigInt sp = -q->a[j], sq = p->a[j];
        for (std::size_t k = 0; k < n; ++k) c.a[k] = sp * p->a[k] + sq * q->a[k];
        c.b = sp * p->b + sq * q->b;
        normalize(c);
        next.insert(std::move(c));
        if (next.size() > row_limit) throw BudgetExceeded("Fourier-Motzkin elimination produced too many rows");
      }
    }
    stages.push_back(std::move(rows));
    rows.clear();
    for (const auto& r : next) {
      if (all_zero(r)) {
        if (r.b > 0) return std::nullopt;
        continue;
      }
      rows.push_back(r);
    }
  }
  // Back substitution: each variable takes its largest lower bound.
  std::vector<BigRational> w(n, BigRational(0));
  for (std::size_t jj = n; jj-- > 0;) {
    std::optional<BigRational> lower;
    for (const auto& r : stages[jj]) {
      if (r.a[jj] <= 0) continue;
      BigRational rest(r.b);
      for (std::size_t k = jj + 1; k < n; ++k) rest -= BigRational(r.a[k]) * w[k];
      BigRational bound = rest / BigRational(r.a[jj]);
      if (!lower || bound > *lower) lower = bound;
    }
    w[jj] = *lower;
  }
  BigInt den = 1;
  for (const auto& x : w) den = boost::integer::lcm(den, x.denominator());
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& x : w) {
    ints.push_back(x.numerator() * (den / x.denominator()));
    g = gcd(g, ints.back());
  }
  std::vector<std::int64_t> out;
  for (auto& x : ints) {
    x /= g;
    if (x > BigInt(std::numeric_limits<std::int64_t>::max())) throw BudgetExceeded("weight does not fit 64 bits");
    out.push_back(static_cast<std::int64_t>(x));
  }
  return out;
}

Row comparison_row(const Monomial& chosen, const Monomial& other) {
  Row r{std::vector<BigInt>(chosen.num_vars(), 0), 1};
  for (std::size_t i = 0; i < chosen.num_vars(); ++i)
    r.a[i] = BigInt(chosen[i]) - BigInt(other[i]);
  return r;
}

struct Comparison {
  std::size_t generator;
  Monomial chosen;
  Monomial other;
};

std::vector<Comparison> selected_comparisons(const IdealPresentation& ideal, const TermSelection& choices) {
  if (choices.size() != ideal.generators.size())
    throw PreconditionError("one term selection per generator is required");
  std::vector<Comparison> out;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    const auto& g = ideal.generators[i];
    if (!g.trail()) continue;
    if (choices[i]) out.push_back({i, g.lead(), *g.trail()});
    else out.push_back({i, *g.trail(), g.lead()});
  }
  return out;
}

std::optional<std::vector<std::int64_t>> solve_comparisons(const std::vector<Comparison>& cs, std::size_t n) {
  std::vector<Row> rows;
  for (const auto& c : cs) rows.push_back(comparison_row(c.chosen, c.other));
  return solve(std::move(rows), n);
}

}  // namespace

std::string weight_inequality(const Monomial& chosen, const Monomial& other) {
  check_same_ambient(chosen, other);
  auto side = [](const std::vector<std::pair<std::size_t, std::int64_t>>& terms) {
    if (terms.empty()) return std::string("0");
    std::string s;
    for (const auto& [i, c] : terms) {
      if (!s.empty()) s += " + ";
      if (c != 1) s += std::to_string(c);
      s += "w" + std::to_string(i + 1);
    }
    return s;
  };
  std::vector<std::pair<std::size_t, std::int64_t>> left, right;
  for (std::size_t i = 0; i < chosen.num_vars(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(chosen[i]) - static_cast<std::int64_t>(other[i]);
    if (d > 0) left.emplace_back(i, d);
    if (d < 0) right.emplace_back(i, -d);
  }
  return side(left) + " > " + side(right);
}

std::optional<WeightOrder> realizable_initial_selection(const IdealPresentation& ideal,
                                                        const TermSelection& choices) {
  auto w = solve_comparisons(selected_comparisons(ideal, choices), ideal.num_vars);
  if (!w) return std::nullopt;
  return WeightOrder{std::move(*w), MonomialOrder::degrevlex(ideal.num_vars)};
}

RealizabilityReport realizability_report(const IdealPresentation& ideal, const TermSelection& choices) {
  RealizabilityReport report;
  auto cs = selected_comparisons(ideal, choices);
  if (auto w = solve_comparisons(cs, ideal.num_vars)) {
    report.feasible = true;
    report.witness = WeightOrder{std::move(*w), MonomialOrder::degrevlex(ideal.num_vars)};
    return report;
  }
  // Deletion filter: drop every comparison whose removal keeps infeasibility.
  std::vector<Comparison> core = cs;
  for (std::size_t i = 0; i < core.size();) {
    std::vector<Comparison> trial = core;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!solve_comparisons(trial, ideal.num_vars)) {
      core = std::move(trial);
    } else {
      ++i;
    }
  }
  for (const auto& c : core) {
    report.conflict.push_back(c.generator);
    report.inequalities.push_back(weight_inequality(c.chosen, c.other));
  }
  return report;
}

// König search ---------------------------------------------------------------

namespace {

KoenigCertificate empty_certificate(const IdealPresentation& ideal, const TermOrder& order) {
  return make_certificate(ideal.num_vars, {}, {}, order);
}

// Order-free search: choose a term of h input generators so that the chosen
// terms are pairwise coprime and realizable by one weight order.
class SelectionSearch {
 public:
  SelectionSearch(const IdealPresentation& ideal, std::size_t h) : ideal_(ideal), h_(h) {}

  std::optional<KoenigCertificate> run() {
    std::vector<bool> used(ideal_.num_vars, false);
    if (!search(0, used)) return std::nullopt;
    std::vector<Comparison> cs;
    for (const auto& [i, lead] : picked_) {
      const auto& g = ideal_.generators[i];
      if (g.trail()) cs.push_back({i, lead ? g.lead() : *g.trail(), lead ? *g.trail() : g.lead()});
    }
    auto w = solve_comparisons(cs, ideal_.num_vars);
    WeightOrder order{*w, MonomialOrder::degrevlex(ideal_.num_vars)};
    std::vector<Binomial> chosen;
    std::vector<std::optional<std::size_t>> indices;
    for (const auto& [i, lead] : picked_) {
      chosen.push_back(ideal_.generators[i]);
      indices.emplace_back(i);
    }
    return make_certificate(ideal_.num_vars, std::move(chosen), std::move(indices), order);
  }

 private:
  bool realizable() const {
    std::vector<Comparison> cs;
    for (const auto& [i, lead] : picked_) {
      const auto& g = ideal_.generators[i];
      if (g.trail()) cs.push_back({i, lead ? g.lead() : *g.trail(), lead ? *g.trail() : g.lead()});
    }
    return solve_comparisons(cs, ideal_.num_vars).has_value();
  }

  bool search(std::size_t start, std::vector<bool>& used) {
    if (picked_.size() == h_) return true;
    const auto& gens = ideal_.generators;
    if (gens.size() - start < h_ - picked_.size()) return false;
    for (std::size_t i = start; i < gens.size(); ++i) {
      for (int side = 0; side < (gens[i].trail() ? 2 : 1); ++side) {
        const Monomial& term = side == 0 ? gens[i].lead() : *gens[i].trail();
        auto s = term.support();
        if (s.empty() || std::any_of(s.begin(), s.end(), [&](VarIndex v) { return used[v]; })) continue;
        picked_.emplace_back(i, side == 0);
        if (realizable()) {
          for (auto v : s) used[v] = true;
          if (search(i + 1, used)) return true;
          for (auto v : s) used[v] = false;
        }
        picked_.pop_back();
      }
    }
    return false;
  }

  const IdealPresentation& ideal_;
  std::size_t h_;
  std::vector<std::pair<std::size_t, bool>> picked_;
};

}  // namespace

std::optional<KoenigCertificate> koenig_graded(const IdealPresentation& ideal, const std::optional<TermOrder>& order) {
  const TermOrder used_order = order ? *order : TermOrder(MonomialOrder::degrevlex(ideal.num_vars));
  if (ideal.is_zero()) return empty_certificate(ideal, used_order);
  GroebnerBasis gb = buchberger(ideal, used_order);
  if (gb.is_unit()) return std::nullopt;
  const std::size_t h = ideal.num_vars - quotient_dimension(gb);

  if (!order) {
    auto cert = SelectionSearch(ideal, h).run();
    if (cert) cert->verified_minimal = initials_minimal(ideal, cert->order);
    return cert;
  }

  std::vector<Binomial> pool;
  std::vector<std::optional<std::size_t>> origin;
  for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
    pool.push_back(ideal.generators[i].normalized(used_order));
    origin.emplace_back(i);
  }
  if (ideal.is_homogeneous()) {
    std::uint64_t d0 = UINT64_MAX;
    for (const auto& g : ideal.generators) d0 = std::min(d0, g.degree());
    for (const auto& g : gb.elements) {
      if (g.degree() != d0) continue;
      if (std::any_of(pool.begin(), pool.end(), [&](const Binomial& p) { return p.same_element(g); })) continue;
      pool.push_back(g);
      origin.emplace_back(std::nullopt);
    }
  }
  std::vector<Monomial> inis;
  for (const auto& g : pool) inis.push_back(g.lead());
  auto found = CoprimeSearch(inis, h).run(ideal.num_vars);
  if (!found) return std::nullopt;
  std::vector<Binomial> chosen;
  std::vector<std::optional<std::size_t>> indices;
  for (auto k : *found) {
    chosen.push_back(pool[k]);
    indices.push_back(origin[k]);
  }
  auto cert = make_certificate(ideal.num_vars, std::move(chosen), std::move(indices), used_order);
  cert.verified_minimal = initials_minimal(ideal, used_order);
  return cert;
}

// Modifications and CM tests -----------------------------------------------------

IdealPresentation modify(const IdealPresentation& ideal, const std::vector<LinearForm>& B) {
  const std::size_t n = ideal.num_vars;
  std::vector<std::optional<VarIndex>> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = i;
  for (const auto& l : B) {
    if (l.anchor >= n || l.other >= n) throw PreconditionError("linear form index out of range");
    if (l.is_variable()) image[l.anchor] = std::nullopt;
    else image[l.other] = l.anchor;
  }
  std::vector<Monomial> out;
  for (const auto& g : ideal.monomial_generators()) {
    std::vector<Exponent> e(n, 0);
    bool vanishes = false;
    for (std::size_t i = 0; i < n && !vanishes; ++i) {
      if (g[i] == 0) continue;
      if (!image[i]) vanishes = true;
      else e[*image[i]] += g[i];
    }
    if (!vanishes) out.emplace_back(std::move(e));
  }
  return monomial_ideal(n, std::move(out), ideal.names);
}

IBVerdict cm_test_IB(const IdealPresentation& ideal, const KoenigCertificate& cert) {
  if (!ideal.is_monomial()) throw PreconditionError("the I_B test needs a monomial ideal");
  if (cert.C.size() > 20) throw BudgetExceeded("more than 2^20 modifications");
  IBVerdict verdict;
  const std::uint64_t total = std::uint64_t{1} << cert.C.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<LinearForm> B;
    for (std::size_t i = 0; i < cert.C.size(); ++i)
      if (mask >> i & 1U) B.push_back(cert.C[i]);
    ++verdict.subsets_checked;
    IdealPresentation modified = modify(ideal, B);
    if (!modified.is_zero() && !is_unmixed(modified)) {
      verdict.failing_B = std::move(B);
      return verdict;
    }
  }
  verdict.cohen_macaulay = true;
  return verdict;
}

MultiplicityReport cm_test_multiplicity(const IdealPresentation& ideal, const std::vector<LinearForm>& sop,
                                        const TermOrder& order) {
  MultiplicityReport report;
  GroebnerBasis gb = buchberger(ideal, order);
  if (gb.is_unit()) throw PreconditionError("unit ideal");
  report.multiplicity = ideal.is_monomial() ? multiplicity(ideal) : multiplicity(initial_ideal(gb));
  const std::size_t dim = quotient_dimension(gb);
  std::vector<Binomial> extra;
  for (const auto& l : sop) extra.push_back(l.to_binomial(ideal.num_vars));
  GroebnerBasis gb2 = buchberger(ideal_sum(ideal, extra), order);
  if (sop.size() != dim || !is_zero_dimensional(gb2)) {
    report.verdict = MultiplicityVerdict::not_parameters;
    return report;
  }
  report.length = quotient_length(gb2);
  report.verdict = *report.length == report.multiplicity ? MultiplicityVerdict::cohen_macaulay
                                                          : MultiplicityVerdict::not_cohen_macaulay;
  return report;
}

MultiplicityReport cm_test_multiplicity(const IdealPresentation& ideal, const KoenigCertificate& cert,
                                        const TermOrder& order) {
  return cm_test_multiplicity(ideal, cert.C, order);
}

std::string to_string(MultiplicityVerdict v) {
  switch (v) {
    case MultiplicityVerdict::cohen_macaulay: return "cohen_macaulay";
    case MultiplicityVerdict::not_cohen_macaulay: return "not_cohen_macaulay";
    case MultiplicityVerdict::not_parameters: return "not_parameters";
  }
  return "unknown";
}

bool very_well_covered_check(const IdealPresentation& ideal) {
  const auto gens = ideal.monomial_generators();
  if (gens.empty()) return true;
  const auto d = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != d) throw PreconditionError("generators of different degrees");
  const auto p = polarize(ideal);
  const auto pg = p.ideal.monomial_generators();
  std::set<VarIndex> used;
  for (const auto& g : pg)
    for (auto v : g.support()) used.insert(v);
  return used.size() == height_monomial(pg) * d;
}

// Linkage ---------------------------------------------------------------------

LinkageResult unmixed_part_via_linkage(const std::vector<PrimeComponent>& min_J,
                                       const std::vector<PrimeComponent>& min_I) {
  LinkageResult out;
  for (const auto& p : min_J) {
    bool shared = std::find(min_I.begin(), min_I.end(), p) != min_I.end();
    (shared ? out.unmixed : out.colon).push_back(p);
  }
  return out;
}

std::vector<PrimeComponent> monomial_minimal_primes(const IdealPresentation& ideal) {
  std::vector<PrimeComponent> out;
  const auto gens = ideal.monomial_generators();
  for (auto& c : minimal_covers(supports_of(gens))) {
    std::string label = "(";
    for (std::size_t k = 0; k < c.size(); ++k) label += (k ? ", " : "") + ideal.name(c[k]);
    label += ")";
    out.push_back({std::move(c), {}, std::move(label)});
  }
  return out;
}

LinkageResult unmixed_part_via_linkage(const IdealPresentation& ideal, const IdealPresentation& ci) {
  if (!ideal.is_monomial() || !ci.is_monomial())
    throw PreconditionError("minimal primes are only enumerated here for monomial ideals");
  const auto J = ci.monomial_generators();
  const auto I = ideal.monomial_generators();
  for (const auto& u : J)
    if (!u.is_squarefree()) throw PreconditionError("the complete intersection must be squarefree");
  if (!monomials_regular_sequence(J)) throw PreconditionError("J is not generated by a regular sequence");
  for (const auto& u : J)
    if (std::none_of(I.begin(), I.end(), [&](const Monomial& v) { return v.divides(u); }))
      throw PreconditionError("J is not contained in I");
  if (height_monomial(J) != height_monomial(I)) throw PreconditionError("heights of J and I differ");
  return unmixed_part_via_linkage(monomial_minimal_primes(ci), monomial_minimal_primes(ideal));
}

std::vector<Monomial> intersect_variable_primes(std::size_t num_vars, const std::vector<PrimeComponent>& primes) {
  if (primes.empty()) return {Monomial(num_vars)};
  std::vector<VertexSet> sets;
  for (const auto& p : primes) {
    if (p.variables.empty()) return {};
    sets.push_back(p.variables);
  }
  return alexander_dual_generators(num_vars, minimal_covers(sets));
}

// JSON ----------------------------------------------------------------------------

nlohmann::json order_json(const TermOrder& order, const std::vector<std::string>& names) {
  nlohmann::json j;
  j["kind"] = order.tiebreak().kind == OrderKind::lex ? "lex" : "degrevlex";
  std::vector<std::string> prio;
  for (auto v : order.tiebreak().priority) prio.push_back(names[v]);
  j["priority"] = prio;
  if (order.has_weights()) j["weights"] = order.weights();
  return j;
}

nlohmann::json certificate_json(const KoenigCertificate& cert, const std::vector<std::string>& names) {
  nlohmann::json j;
  std::vector<std::string> gens, inis, A, anchors, C;
  for (const auto& g : cert.generators) gens.push_back(to_string(g, names));
  for (const auto& u : cert.initials) inis.push_back(to_string(u, names));
  for (auto v : cert.A) A.push_back(names[v]);
  for (auto v : cert.anchors) anchors.push_back(names[v]);
  for (const auto& l : cert.C) C.push_back(to_string(l, names));
  nlohmann::json B = nlohmann::json::array();
  for (const auto& b : cert.B) {
    std::vector<std::string> s;
    for (auto v : b) s.push_back(names[v]);
    B.push_back(s);
  }
  nlohmann::json idx = nlohmann::json::array();
  for (const auto& i : cert.generator_indices) idx.push_back(i ? nlohmann::json(*i + 1) : nlohmann::json(nullptr));
  j["generators"] = gens;
  j["input_indices"] = idx;
  j["initials"] = inis;
  j["A"] = A;
  j["B"] = B;
  j["anchors"] = anchors;
  j["C"] = C;
  j["height"] = cert.height();
  j["order"] = order_json(cert.order, names);
  j["verified_minimal"] = cert.verified_minimal;
  return j;
}

}  // namespace koenig
