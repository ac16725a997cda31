#include "koenig/hibi.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace koenig {

namespace {

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

std::string brace_list(const std::vector<std::string>& items) {
  std::string s = "{";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? "," : "") + items[i];
  return s + "}";
}

}  // namespace

// Posets -----------------------------------------------------------------------

Poset::Poset(std::size_t m, std::vector<std::pair<std::size_t, std::size_t>> covers, std::vector<std::string> names)
    : m_(m), covers_(std::move(covers)), names_(std::move(names)), below_(m, 0), rank_(m, 0) {
  if (m > 64) throw BudgetExceeded("posets are limited to 64 elements");
  if (names_.empty())
    for (std::size_t i = 0; i < m; ++i) names_.push_back("p" + std::to_string(i + 1));
  if (names_.size() != m) throw PreconditionError("wrong number of element names");
  std::sort(covers_.begin(), covers_.end());
  if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end())
    throw PreconditionError("duplicate cover relation");
  std::vector<std::vector<std::size_t>> lower(m);
  std::vector<std::size_t> indeg(m, 0);
  for (auto [b, a] : covers_) {
    if (a >= m || b >= m || a == b) throw PreconditionError("cover relation out of range");
    lower[a].push_back(b);
    ++indeg[a];
  }
  std::vector<std::vector<std::size_t>> upper(m);
  for (auto [b, a] : covers_) upper[b].push_back(a);
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < m; ++i)
    if (indeg[i] == 0) queue.push_back(i);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t a = queue[head];
    for (auto b : lower[a]) {
      below_[a] |= below_[b] | bit(b);
      rank_[a] = std::max(rank_[a], rank_[b] + 1);
    }
    for (auto c : upper[a])
      if (--indeg[c] == 0) queue.push_back(c);
  }
  if (queue.size() != m) throw PreconditionError("cover relation has a cycle");
  for (auto [b, a] : covers_)
    for (auto c : lower[a])
      if (c != b && (below_[c] >> b & 1U))
        throw PreconditionError("(" + std::to_string(b + 1) + ", " + std::to_string(a + 1) + ") is not a cover");
}

std::size_t Poset::rank() const {
  return rank_.empty() ? 0 : *std::max_element(rank_.begin(), rank_.end());
}

std::vector<std::vector<std::size_t>> Poset::levels() const {
  std::vector<std::vector<std::size_t>> out(m_ ? rank() + 1 : 0);
  for (std::size_t i = 0; i < m_; ++i) out[rank_[i]].push_back(i);
  return out;
}

Poset parse_poset(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("poset JSON: ") + e.what(), e.byte);
  }
  try {
    const auto m = j.at("elements").get<std::size_t>();
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (const auto& c : j.value("covers", nlohmann::json::array())) {
      auto b = c.at(0).get<std::size_t>(), a = c.at(1).get<std::size_t>();
      if (c.size() != 2 || a == 0 || b == 0 || a > m || b > m)
        throw ParseError("cover " + c.dump() + " out of range");
      covers.emplace_back(b - 1, a - 1);
    }
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return Poset(m, std::move(covers), std::move(names));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("poset JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("poset: ") + e.what());
  }
}

nlohmann::json poset_json(const Poset& p) {
  nlohmann::json covers = nlohmann::json::array();
  for (auto [b, a] : p.covers()) covers.push_back({b + 1, a + 1});
  return {{"elements", p.size()}, {"covers", covers}, {"names", p.names()}};
}

Poset chain_poset(std::size_t m) { return chains_poset({m}); }

Poset antichain_poset(std::size_t m) { return chains_poset(std::vector<std::size_t>(m, 1)); }

Poset chains_poset(const std::vector<std::size_t>& lengths) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::size_t m = 0;
  for (auto len : lengths) {
    for (std::size_t k = 1; k < len; ++k) covers.emplace_back(m + k - 1, m + k);
    m += len;
  }
  return Poset(m, std::move(covers));
}

bool is_pure(const Poset& p) {
  const std::size_t m = p.size();
  if (m == 0) return true;
  // Shortest chain from a minimal element, in an order where covers come first.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p.rank(a) < p.rank(b); });
  std::vector<std::size_t> shortest(m, 0);
  std::vector<bool> has_lower(m, false), has_upper(m, false);
  for (auto [b, a] : p.covers()) {
    has_lower[a] = true;
    has_upper[b] = true;
  }
  for (auto a : order) {
    if (!has_lower[a]) continue;
    std::size_t best = m;
    for (auto [b, c] : p.covers())
      if (c == a) best = std::min(best, shortest[b] + 1);
    shortest[a] = best;
  }
  const std::size_t d = p.rank();
  for (std::size_t a = 0; a < m; ++a)
    if (!has_upper[a] && (shortest[a] != d || p.rank(a) != d)) return false;
  return true;
}

SimpleGraph incomparability_graph(const Poset& p) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (!p.comparable(a, b)) edges.emplace_back(a, b);
  return SimpleGraph(p.size(), std::move(edges));
}

ThinResult is_thin(const Poset& p) {
  const std::size_t m = p.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      if (p.comparable(a, b)) continue;
      for (std::size_t c = b + 1; c < m; ++c)
        if (!p.comparable(a, c) && !p.comparable(b, c)) return {false, std::array<std::size_t, 3>{a, b, c}};
    }
  return {};
}

TauReport tau_incom(const Poset& p) {
  if (!is_pure(p)) throw PreconditionError("poset is not pure");
  TauReport r;
  r.exhaustive = tau(incomparability_graph(p));
  r.formula = p.size() == 0 ? 0 : p.size() - (p.rank() + 1);
  return r;
}

std::size_t min_chain_cover(const Poset& p) {
  // Chains of P correspond to matchings in the split comparability graph.
  const std::size_t m = p.size();
  std::vector<std::size_t> match(m, m);
  std::size_t matched = 0;
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<bool> seen(m, false);
    std::function<bool(std::size_t)> augment = [&](std::size_t u) {
      for (std::size_t v = 0; v < m; ++v) {
        if (!p.less(u, v) || seen[v]) continue;
        seen[v] = true;
        if (match[v] == m || augment(match[v])) {
          match[v] = u;
          return true;
        }
      }
      return false;
    };
    if (augment(a)) ++matched;
  }
  return m - matched;
}

DilworthReport dilworth_equivalences(const Poset& p) {
  if (!is_pure(p)) throw PreconditionError("poset is not pure");
  DilworthReport r;
  r.thin = is_thin(p).thin;
  const auto levels = p.levels();
  r.levels_at_most_two =
      std::all_of(levels.begin(), levels.end(), [](const auto& level) { return level.size() <= 2; });
  r.two_chains = min_chain_cover(p) <= 2;
  r.incom_bipartite = incomparability_graph(p).is_bipartite();
  return r;
}

// Distributive lattices --------------------------------------------------------

DistributiveLattice::DistributiveLattice(Poset base, std::vector<std::uint32_t> ideals)
    : base_(std::move(base)), ideals_(std::move(ideals)), sorted_(ideals_), position_(ideals_.size()) {
  std::vector<std::size_t> idx(ideals_.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return ideals_[a] < ideals_[b]; });
  for (std::size_t k = 0; k < idx.size(); ++k) {
    sorted_[k] = ideals_[idx[k]];
    position_[k] = idx[k];
  }
}

std::size_t DistributiveLattice::index_of(std::uint32_t ideal) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), ideal);
  if (it == sorted_.end() || *it != ideal) throw PreconditionError("not a poset ideal of the base poset");
  return position_[static_cast<std::size_t>(it - sorted_.begin())];
}

bool DistributiveLattice::covers(std::size_t lower, std::size_t upper) const {
  return leq(lower, upper) && rank(upper) == rank(lower) + 1;
}

std::size_t DistributiveLattice::rank(std::size_t i) const {
  return static_cast<std::size_t>(std::popcount(ideals_[i]));
}

Poset DistributiveLattice::as_poset() const {
  std::vector<std::pair<std::size_t, std::size_t>> cov;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (covers(i, j)) cov.emplace_back(i, j);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < size(); ++i) names.push_back(label(i));
  return Poset(size(), std::move(cov), std::move(names));
}

std::string DistributiveLattice::label(std::size_t i) const {
  std::vector<std::string> items;
  for (std::size_t e = 0; e < base_.size(); ++e)
    if (ideals_[i] >> e & 1U) items.push_back(base_.names()[e]);
  return brace_list(items);
}

DistributiveLattice poset_ideals(const Poset& p) {
  const std::size_t m = p.size();
  if (m > 20) throw BudgetExceeded("poset_ideals is limited to 20 elements");
  std::vector<std::uint32_t> ideals;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    bool down = true;
    for (std::uint32_t rest = mask; rest && down; rest &= rest - 1)
      down = (p.below(static_cast<std::size_t>(std::countr_zero(rest))) & ~std::uint64_t{mask}) == 0;
    if (down) ideals.push_back(mask);
  }
  std::sort(ideals.begin(), ideals.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
  });
  return DistributiveLattice(p, std::move(ideals));
}

DistributiveLattice boolean_lattice(std::size_t n) { return poset_ideals(antichain_poset(n)); }

DistributiveLattice segre_lattice(std::size_t n, std::size_t m) {
  if (n < 2 || m < 2) throw PreconditionError("segre_lattice needs n, m >= 2");
  return poset_ideals(chains_poset({n - 1, m - 1}));
}

nlohmann::json lattice_json(const DistributiveLattice& l) {
  nlohmann::json elements = nlohmann::json::array();
  for (std::size_t i = 0; i < l.size(); ++i) {
    std::vector<std::string> members;
    for (std::size_t e = 0; e < l.base().size(); ++e)
      if (l.ideal(i) >> e & 1U) members.push_back(l.base().names()[e]);
    elements.push_back({{"index", i + 1}, {"ideal", members}, {"rank", l.rank(i)}});
  }
  nlohmann::json covers = nlohmann::json::array();
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j)
      if (l.covers(i, j)) covers.push_back({i + 1, j + 1});
  return {{"size", l.size()}, {"rank", l.rank()}, {"elements", elements}, {"covers", covers}};
}

// Hibi ideals ------------------------------------------------------------------

std::vector<std::string> hibi_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

HibiIdeal hibi_ideal(const DistributiveLattice& l) {
  const std::size_t n = l.size();
  std::vector<VarIndex> prio(n);
  std::iota(prio.rbegin(), prio.rend(), VarIndex{0});
  HibiIdeal h{IdealPresentation(), MonomialOrder::with_priority(OrderKind::degrevlex, prio), {}};
  std::vector<Binomial> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (l.comparable(i, j)) continue;
      const std::array<VarIndex, 2> lead{i, j}, trail{l.meet(i, j), l.join(i, j)};
      gens.push_back(Binomial::difference(Monomial::product_of(n, lead), Monomial::product_of(n, trail)));
      h.pairs.emplace_back(i, j);
    }
  h.ideal = IdealPresentation(n, std::move(gens), hibi_names(n));
  return h;
}

bool verify_hibi_gb(const DistributiveLattice& l) {
  const auto h = hibi_ideal(l);
  for (std::size_t k = 0; k < h.pairs.size(); ++k)
    if (h.ideal.generators[k].initial_term(h.order) != h.ideal.generators[k].lead()) return false;
  const auto gb = buchberger(h.ideal, h.order);
  if (gb.elements.size() != h.ideal.generators.size()) return false;
  for (const auto& g : h.ideal.generators)
    if (std::none_of(gb.elements.begin(), gb.elements.end(), [&](const Binomial& e) { return e.same_element(g); }))
      return false;
  return true;
}

KoenigHibiReport koenig_hibi(const DistributiveLattice& l) {
  const Poset lp = l.as_poset();
  const auto h = hibi_ideal(l);
  KoenigHibiReport r;
  r.thin = is_thin(lp).thin;
  r.bipartite_incom = incomparability_graph(lp).is_bipartite();
  r.koenig_revlex = koenig_graded(h.ideal, h.order).has_value();
  r.height = l.size() - l.rank() - 1;
  if (!r.thin) return r;
  std::vector<Binomial> chosen;
  std::vector<std::optional<std::size_t>> indices;
  for (const auto& level : lp.levels()) {
    if (level.size() != 2) continue;
    const auto pair = std::make_pair(std::min(level[0], level[1]), std::max(level[0], level[1]));
    const auto k = static_cast<std::size_t>(std::find(h.pairs.begin(), h.pairs.end(), pair) - h.pairs.begin());
    chosen.push_back(h.ideal.generators[k]);
    indices.emplace_back(k);
  }
  if (chosen.size() == r.height) {
    r.witness = make_certificate(l.size(), std::move(chosen), std::move(indices), h.order);
    r.witness->verified_minimal = true;
  }
  return r;
}

KoenigBoundReport koenig_bound(const DistributiveLattice& l) {
  KoenigBoundReport r;
  r.size = l.size();
  for (std::size_t j = 0; j < l.size(); ++j) {
    std::size_t lower = 0;
    for (std::size_t i = 0; i < l.size(); ++i) lower += l.covers(i, j) ? 1 : 0;
    if (lower == 1) ++r.join_irreducibles;
  }
  r.holds = r.size <= 2 * (r.join_irreducibles + 1);
  return r;
}

std::optional<KoenigCertificate> koenig_b3_lex(const DistributiveLattice& l) {
  if (l.size() != 8 || l.base().size() != 3 || !l.base().covers().empty())
    throw PreconditionError("koenig_b3_lex expects the Boolean lattice B_3");
  return koenig_graded(hibi_ideal(l).ideal, MonomialOrder::lex(8));
}

// Cells and the canonical module ---------------------------------------------------

std::vector<Cell> cells(const DistributiveLattice& l) {
  std::vector<Cell> out;
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = a + 1; b < l.size(); ++b) {
      if (l.comparable(a, b)) continue;
      const std::size_t lo = l.meet(a, b), hi = l.join(a, b);
      if (l.covers(lo, a) && l.covers(lo, b) && l.covers(a, hi) && l.covers(b, hi)) out.push_back({lo, a, b, hi});
    }
  return out;
}

bool is_admissible(const std::vector<Cell>& cs, std::uint64_t w) {
  for (const auto& c : cs) {
    std::uint64_t corners = 0;
    for (auto v : c.corners()) corners |= bit(v);
    if (!(corners & w)) continue;
    const auto edges = c.edges();
    if (std::none_of(edges.begin(), edges.end(), [&](const auto& e) { return (w >> e.first & 1U) && (w >> e.second & 1U); }))
      return false;
  }
  return true;
}

namespace {

void require_small_thin(const DistributiveLattice& l) {
  if (l.size() > 16) throw BudgetExceeded("cell computations are limited to 16 lattice elements");
  if (!is_thin(l.as_poset()).thin) throw PreconditionError("the lattice is not thin");
}

std::vector<std::size_t> members(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (; mask; mask &= mask - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
  return out;
}

bool size_then_lex(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

AdmissibleSets cells_and_admissible_sets(const DistributiveLattice& l) {
  require_small_thin(l);
  AdmissibleSets out;
  out.cells = cells(l);
  for (std::uint64_t w = 1; w < bit(l.size()); ++w)
    if (is_admissible(out.cells, w)) out.sets.push_back(members(w));
  std::sort(out.sets.begin(), out.sets.end(), size_then_lex);
  return out;
}

HibiCanonicalModule canonical_module_hibi(const DistributiveLattice& l) {
  const auto adm = cells_and_admissible_sets(l);
  const auto& cs = adm.cells;
  HibiCanonicalModule out;
  out.height = l.size() - l.rank() - 1;
  std::vector<std::uint64_t> corner_masks;
  for (const auto& c : cs) {
    std::uint64_t m = 0;
    for (auto v : c.corners()) m |= bit(v);
    corner_masks.push_back(m);
  }
  for (const auto& W : adm.sets) {
    std::uint64_t w = 0;
    for (auto v : W) w |= bit(v);
    // Union-find over the untouched cells; cells sharing an edge are joined.
    std::vector<std::size_t> untouched;
    for (std::size_t k = 0; k < cs.size(); ++k)
      if (!(corner_masks[k] & w)) untouched.push_back(k);
    std::vector<std::size_t> parent(untouched.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t a = 0; a < untouched.size(); ++a)
      for (std::size_t b = a + 1; b < untouched.size(); ++b)
        if (std::popcount(corner_masks[untouched[a]] & corner_masks[untouched[b]]) >= 2) parent[find(a)] = find(b);
    std::vector<std::uint64_t> groups(untouched.size(), 0);
    for (std::size_t a = 0; a < untouched.size(); ++a) groups[find(a)] |= corner_masks[untouched[a]];
    HibiComponent comp;
    comp.W = W;
    comp.height = W.size();
    for (auto g : groups) {
      if (!g) continue;
      auto block = members(g);
      std::size_t lo = l.rank(block.front()), hi = lo;
      for (auto v : block) {
        lo = std::min(lo, l.rank(v));
        hi = std::max(hi, l.rank(v));
      }
      comp.height += block.size() - (hi - lo) - 1;
      comp.blocks.push_back(std::move(block));
    }
    std::sort(comp.blocks.begin(), comp.blocks.end());
    if (comp.height == out.height) {
      PrimeComponent p;
      p.variables = W;
      p.blocks = comp.blocks;
      std::string label = "(";
      for (std::size_t k = 0; k < W.size(); ++k) label += (k ? "," : "") + ("x" + std::to_string(W[k] + 1));
      for (const auto& block : comp.blocks) {
        std::vector<std::string> items;
        for (auto v : block) items.push_back(std::to_string(v + 1));
        label += ", I_L" + brace_list(items);
      }
      p.label = label + ")";
      out.surviving.push_back(std::move(p));
    }
    out.components.push_back(std::move(comp));
  }
  const bool monomial = std::all_of(out.surviving.begin(), out.surviving.end(),
                                    [](const PrimeComponent& p) { return p.blocks.empty(); });
  if (monomial) out.intersection = intersect_variable_primes(l.size(), out.surviving);
  return out;
}

}  // namespace koenig
