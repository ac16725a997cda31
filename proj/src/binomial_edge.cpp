#include "koenig/binomial_edge.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace koenig {

namespace {

constexpr std::size_t kMaxVertices = 16;

void check_size(const SimpleGraph& g) {
  if (g.num_vertices() > kMaxVertices)
    throw BudgetExceeded("binomial edge computations are limited to " + std::to_string(kMaxVertices) + " vertices");
}

Binomial f_ij(std::size_t n, std::size_t i, std::size_t j) {
  std::vector<Exponent> a(2 * n, 0), b(2 * n, 0);
  a[i] = 1;
  a[n + j] = 1;
  b[j] = 1;
  b[n + i] = 1;
  return Binomial::difference(Monomial(std::move(a)), Monomial(std::move(b)));
}

}  // namespace

std::vector<std::string> binomial_edge_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) names.push_back("y" + std::to_string(i + 1));
  return names;
}

IdealPresentation binomial_edge_ideal(const SimpleGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Binomial> gens;
  for (auto [i, j] : g.edges()) gens.push_back(f_ij(n, i, j));
  return IdealPresentation(2 * n, std::move(gens), binomial_edge_names(n));
}

MonomialOrder binomial_edge_order(std::size_t n) { return MonomialOrder::lex(2 * n); }

MonomialOrder relabeled_binomial_edge_order(const std::vector<std::size_t>& sigma) {
  const std::size_t n = sigma.size();
  std::vector<VarIndex> prio;
  for (auto v : sigma) prio.push_back(v);
  for (auto v : sigma) prio.push_back(n + v);
  return MonomialOrder::with_priority(OrderKind::lex, std::move(prio));
}

std::vector<CutSetRecord> cut_sets(const SimpleGraph& g) {
  check_size(g);
  const std::size_t n = g.num_vertices();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint8_t> comps(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) comps[mask] = static_cast<std::uint8_t>(g.components(mask).size());
  std::vector<CutSetRecord> out;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool cut = true;
    for (std::uint64_t m = mask; m && cut; m &= m - 1) {
      std::uint64_t bit = m & (~m + 1);
      if (comps[mask & ~bit] >= comps[mask]) cut = false;
    }
    if (!cut) continue;
    CutSetRecord r;
    for (std::uint64_t m = mask; m; m &= m - 1) r.T.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    r.components = comps[mask];
    r.height = n + r.T.size() - r.components;
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const CutSetRecord& a, const CutSetRecord& b) {
    return a.T.size() != b.T.size() ? a.T.size() < b.T.size() : a.T < b.T;
  });
  return out;
}

std::size_t dim_quotient(const SimpleGraph& g) {
  std::size_t best = 0;
  for (const auto& r : cut_sets(g)) best = std::max(best, 2 * g.num_vertices() - r.height);
  return best;
}

bool is_unmixed_JG(const SimpleGraph& g) {
  const auto cs = cut_sets(g);
  return std::all_of(cs.begin(), cs.end(), [&](const CutSetRecord& r) { return r.height == cs.front().height; });
}

// Semi-paths -------------------------------------------------------------------

std::vector<Edge> SemiPath::edges() const {
  std::vector<Edge> out;
  for (const auto& p : paths)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) out.emplace_back(std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1]));
  std::sort(out.begin(), out.end());
  return out;
}

SemiPath semipath_from_edges(std::size_t n, const std::vector<Edge>& edges) {
  SimpleGraph h(n, edges);
  SemiPath out;
  for (const auto& comp : h.components()) {
    if (comp.size() < 2) continue;
    std::size_t ends = 0;
    std::size_t start = n;
    for (auto v : comp) {
      if (h.degree(v) > 2) throw PreconditionError("vertex of degree above 2 in a semi-path");
      if (h.degree(v) == 1) {
        ++ends;
        start = std::min(start, v);
      }
    }
    if (ends != 2) throw PreconditionError("a semi-path component is a cycle");
    std::vector<std::size_t> path{start};
    std::size_t prev = n, cur = start;
    while (true) {
      std::size_t next = n;
      for (auto w : h.neighbors(cur))
        if (w != prev) next = w;
      if (next == n) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    out.length += path.size() - 1;
    out.paths.push_back(std::move(path));
  }
  std::sort(out.paths.begin(), out.paths.end());
  return out;
}

bool is_semipath(const SimpleGraph& g, const std::vector<Edge>& edges) {
  for (auto [a, b] : edges)
    if (!g.has_edge(a, b)) return false;
  try {
    semipath_from_edges(g.num_vertices(), edges);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

std::vector<std::vector<std::size_t>> spanning_components(std::size_t n, const SemiPath& p) {
  std::vector<std::vector<std::size_t>> out = p.paths;
  std::vector<bool> covered(n, false);
  for (const auto& path : p.paths)
    for (auto v : path) covered[v] = true;
  for (std::size_t v = 0; v < n; ++v)
    if (!covered[v]) out.push_back({v});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Largest number of edges of a linear forest, by branch and bound over edges.
class LinearForestSize {
 public:
  explicit LinearForestSize(const SimpleGraph& g)
      : g_(g), deg_(g.num_vertices(), 0), end_(g.num_vertices()) {
    std::iota(end_.begin(), end_.end(), std::size_t{0});
    cap_ = g.num_vertices() - g.components().size();
  }

  std::size_t run() {
    search(0, 0);
    return best_;
  }

 private:
  void search(std::size_t idx, std::size_t len) {
    best_ = std::max(best_, len);
    if (best_ == cap_) return;
    const auto& edges = g_.edges();
    if (idx == edges.size() || len + (edges.size() - idx) <= best_) return;
    auto [a, b] = edges[idx];
    if (deg_[a] < 2 && deg_[b] < 2 && end_[a] != b) {
      const std::size_t ea = end_[a], eb = end_[b];
      ++deg_[a];
      ++deg_[b];
      end_[ea] = eb;
      end_[eb] = ea;
      search(idx + 1, len + 1);
      // Before the edge, a's path ran a..ea and b's ran b..eb.
      end_[ea] = a;
      end_[eb] = b;
      --deg_[a];
      --deg_[b];
      if (best_ == cap_) return;
    }
    search(idx + 1, len);
  }

  const SimpleGraph& g_;
  std::vector<int> deg_;
  std::vector<std::size_t> end_;
  std::size_t cap_ = 0;
  std::size_t best_ = 0;
};

// Walks candidate forests in increasing order of their vertex sequences, an
// end of path counting as larger than every vertex, and stops at the first
// one with the target number of edges.
class OrderedForestSearch {
 public:
  OrderedForestSearch(const SimpleGraph& g, std::size_t target) : g_(g), n_(g.num_vertices()), target_(target) {}

  std::vector<std::vector<std::size_t>> run() {
    if (n_ == 0) return {};
    if (!start_component(0)) throw PreconditionError("no linear forest with the requested length");
    return done_;
  }

 private:
  // Components so far plus at least one more for any unused vertex.
  bool still_possible(bool ending_current) const {
    std::size_t unused = n_ - static_cast<std::size_t>(std::popcount(used_));
    std::size_t min_components = comps_.size() + (current_.empty() ? 0 : 1) + ((ending_current && unused) ? 1 : 0);
    return n_ >= min_components + target_;
  }

  bool start_component(std::size_t min_start) {
    if (std::popcount(used_) == static_cast<int>(n_)) {
      if (n_ - comps_.size() != target_) return false;
      done_ = comps_;
      return true;
    }
    for (std::size_t s = min_start; s < n_; ++s) {
      if (used_ >> s & 1U) continue;
      used_ |= std::uint64_t{1} << s;
      current_ = {s};
      if (still_possible(false) && extend()) return true;
      current_.clear();
      used_ &= ~(std::uint64_t{1} << s);
    }
    return false;
  }

  bool extend() {
    const std::size_t last = current_.back();
    for (auto w : g_.neighbors(last)) {
      if (used_ >> w & 1U) continue;
      used_ |= std::uint64_t{1} << w;
      current_.push_back(w);
      if (extend()) return true;
      current_.pop_back();
      used_ &= ~(std::uint64_t{1} << w);
    }
    // Ending the current path sorts after every extension.
    if ((current_.size() == 1 || current_.front() < current_.back()) && still_possible(true)) {
      auto saved = current_;
      comps_.push_back(current_);
      current_.clear();
      if (start_component(saved.front() + 1)) return true;
      comps_.pop_back();
      current_ = std::move(saved);
    }
    return false;
  }

  const SimpleGraph& g_;
  std::size_t n_;
  std::size_t target_;
  std::uint64_t used_ = 0;
  std::vector<std::size_t> current_;
  std::vector<std::vector<std::size_t>> comps_;
  std::vector<std::vector<std::size_t>> done_;
};

}  // namespace

SemiPath max_semipath(const SimpleGraph& g) {
  check_size(g);
  const std::size_t best = LinearForestSize(g).run();
  SemiPath out;
  for (auto& c : OrderedForestSearch(g, best).run())
    if (c.size() > 1) out.paths.push_back(std::move(c));
  out.length = best;
  return out;
}

std::optional<KoenigCertificate> koenig_JG(const SimpleGraph& g) {
  check_size(g);
  const std::size_t n = g.num_vertices();
  const std::size_t d = dim_quotient(g);
  const SemiPath p = max_semipath(g);
  if (p.length != 2 * n - d) return std::nullopt;
  std::vector<std::size_t> sigma;
  for (const auto& c : spanning_components(n, p)) sigma.insert(sigma.end(), c.begin(), c.end());
  const TermOrder order = relabeled_binomial_edge_order(sigma);
  const auto ideal = binomial_edge_ideal(g);
  std::vector<Binomial> chosen;
  std::vector<std::optional<std::size_t>> indices;
  for (const auto& path : p.paths) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      Edge e{std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])};
      auto idx = static_cast<std::size_t>(std::find(g.edges().begin(), g.edges().end(), e) - g.edges().begin());
      chosen.push_back(ideal.generators[idx]);
      indices.emplace_back(idx);
    }
  }
  auto cert = make_certificate(2 * n, std::move(chosen), std::move(indices), order);
  // The initials x_i y_j of all f_ij are pairwise distinct squarefree quadrics.
  cert.verified_minimal = true;
  return cert;
}

std::optional<std::vector<std::vector<std::size_t>>> is_traceable(const SimpleGraph& g) {
  check_size(g);
  std::vector<std::vector<std::size_t>> out;
  for (const auto& comp : g.components()) {
    const std::size_t k = comp.size();
    // can[mask][i]: a path through exactly `mask` (component positions) starting at comp[i].
    std::vector<std::uint32_t> can(std::size_t{1} << k, 0);
    std::vector<std::uint32_t> nb(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (g.has_edge(comp[i], comp[j])) nb[i] |= 1U << j;
    for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
      for (std::size_t i = 0; i < k; ++i) {
        if (!(mask >> i & 1U)) continue;
        const std::uint32_t rest = mask & ~(1U << i);
        if (rest == 0 || (nb[i] & can[rest])) can[mask] |= 1U << i;
      }
    }
    std::uint32_t mask = (1U << k) - 1;
    if (!can[mask]) return std::nullopt;
    std::vector<std::size_t> path;
    std::size_t cur = static_cast<std::size_t>(std::countr_zero(can[mask]));
    while (true) {
      path.push_back(comp[cur]);
      mask &= ~(1U << cur);
      if (!mask) break;
      cur = static_cast<std::size_t>(std::countr_zero(nb[cur] & can[mask]));
    }
    out.push_back(std::move(path));
  }
  return out;
}

SpecialSop special_sop_JG(const SimpleGraph& g, const std::vector<std::vector<std::size_t>>& paths) {
  check_size(g);
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  SpecialSop out;
  for (const auto& p : paths) {
    if (p.empty()) throw PreconditionError("empty path");
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] >= n || seen[p[i]]) throw PreconditionError("paths must partition the vertex set");
      seen[p[i]] = true;
      if (i + 1 < p.size()) {
        if (!g.has_edge(p[i], p[i + 1])) throw PreconditionError("consecutive path vertices are not adjacent");
        out.forms.push_back(LinearForm::diff(p[i], n + p[i + 1]));
      }
    }
    out.forms.push_back(LinearForm::var(p.back()));
    out.forms.push_back(LinearForm::var(n + p.front()));
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw PreconditionError("paths must cover every vertex");
  std::vector<Binomial> extra;
  for (const auto& l : out.forms) extra.push_back(l.to_binomial(2 * n));
  GroebnerBasis gb = buchberger(ideal_sum(binomial_edge_ideal(g), extra), MonomialOrder::degrevlex(2 * n));
  out.zero_dimensional = is_zero_dimensional(gb);
  if (out.zero_dimensional) out.length = quotient_length(gb);
  return out;
}

MultiplicityReport cm_verdict_JG(const SimpleGraph& g) {
  if (!koenig_JG(g)) throw PreconditionError("J_G is not of König type");
  const std::size_t n = g.num_vertices();
  const auto paths = spanning_components(n, max_semipath(g));
  const auto sop = special_sop_JG(g, paths);
  return cm_test_multiplicity(binomial_edge_ideal(g), sop.forms, binomial_edge_order(n));
}

IdealPresentation prime_PT(const SimpleGraph& g, const std::vector<std::size_t>& T) {
  const std::size_t n = g.num_vertices();
  std::vector<Binomial> gens;
  std::uint64_t removed = 0;
  for (auto i : T) {
    removed |= std::uint64_t{1} << i;
    gens.push_back(Binomial::monomial(Monomial::variable(2 * n, i)));
    gens.push_back(Binomial::monomial(Monomial::variable(2 * n, n + i)));
  }
  for (const auto& comp : g.components(removed))
    for (std::size_t a = 0; a < comp.size(); ++a)
      for (std::size_t b = a + 1; b < comp.size(); ++b) gens.push_back(f_ij(n, comp[a], comp[b]));
  return IdealPresentation(2 * n, std::move(gens), binomial_edge_names(n));
}

PrimeComponent prime_component_PT(const SimpleGraph& g, const std::vector<std::size_t>& T) {
  const std::size_t n = g.num_vertices();
  PrimeComponent p;
  std::uint64_t removed = 0;
  std::string label = "P_{";
  for (std::size_t k = 0; k < T.size(); ++k) {
    removed |= std::uint64_t{1} << T[k];
    p.variables.push_back(T[k]);
    label += (k ? "," : "") + std::to_string(T[k] + 1);
  }
  for (auto i : T) p.variables.push_back(n + i);
  std::sort(p.variables.begin(), p.variables.end());
  for (auto& comp : g.components(removed))
    if (comp.size() > 1) p.blocks.push_back(std::move(comp));
  p.label = label + "}";
  return p;
}

CanonicalComponents canonical_components_JG(const SimpleGraph& g) {
  check_size(g);
  const std::size_t n = g.num_vertices();
  if (g.components().size() != 1) throw PreconditionError("the graph must be connected");
  auto trace = is_traceable(g);
  if (!trace) throw PreconditionError("the graph is not traceable");
  if (cm_verdict_JG(g).verdict != MultiplicityVerdict::cohen_macaulay)
    throw PreconditionError("S/J_G is not Cohen-Macaulay");
  CanonicalComponents out;
  out.path = trace->front();
  std::vector<Edge> pe;
  for (std::size_t i = 0; i + 1 < out.path.size(); ++i)
    pe.emplace_back(std::min(out.path[i], out.path[i + 1]), std::max(out.path[i], out.path[i + 1]));
  const SimpleGraph P(n, pe);
  const auto cut_g = cut_sets(g);
  std::vector<std::vector<std::size_t>> Ts;
  for (const auto& r : cut_sets(P)) {
    bool in_g = std::any_of(cut_g.begin(), cut_g.end(), [&](const CutSetRecord& c) { return c.T == r.T; });
    if (!in_g) {
      Ts.push_back(r.T);
      out.components.push_back(prime_component_PT(P, r.T));
    }
  }
  // P_T is redundant in R when another component is contained in it modulo J_G.
  const auto jg = binomial_edge_ideal(g);
  const TermOrder order = MonomialOrder::degrevlex(2 * n);
  std::vector<GroebnerBasis> bases;
  for (const auto& T : Ts) bases.push_back(buchberger(ideal_sum(jg, prime_PT(P, T).generators), order));
  for (std::size_t i = 0; i < Ts.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < Ts.size() && !redundant; ++j) {
      if (i == j || !contains(bases[i], prime_PT(P, Ts[j]))) continue;
      bool equal = contains(bases[j], prime_PT(P, Ts[i]));
      if (!equal || j < i) redundant = true;
    }
    if (!redundant) out.irredundant.push_back(out.components[i]);
  }
  return out;
}

}  // namespace koenig
