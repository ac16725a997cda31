#include "koenig/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace koenig {

SimpleGraph::SimpleGraph(std::size_t n, std::vector<Edge> edges) : n_(n), adj_(n, 0) {
  if (n > 64) throw BudgetExceeded("graphs are limited to 64 vertices");
  for (auto& [a, b] : edges) {
    if (a >= n || b >= n) throw PreconditionError("edge endpoint out of range");
    if (a == b) throw PreconditionError("loops are not allowed");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw PreconditionError("duplicate edge");
  edges_ = std::move(edges);
  for (auto [a, b] : edges_) {
    adj_[a] |= std::uint64_t{1} << b;
    adj_[b] |= std::uint64_t{1} << a;
  }
}

bool SimpleGraph::has_edge(std::size_t a, std::size_t b) const {
  return a < n_ && b < n_ && (adj_[a] >> b & 1U);
}

std::vector<std::size_t> SimpleGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::uint64_t m = adj_[v]; m; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

std::size_t SimpleGraph::degree(std::size_t v) const { return static_cast<std::size_t>(std::popcount(adj_[v])); }

std::vector<std::vector<std::size_t>> SimpleGraph::components(std::uint64_t removed) const {
  std::vector<std::vector<std::size_t>> out;
  std::uint64_t seen = removed;
  for (std::size_t s = 0; s < n_; ++s) {
    if (seen >> s & 1U) continue;
    std::uint64_t comp = std::uint64_t{1} << s, frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m; m &= m - 1) next |= adj_[static_cast<std::size_t>(std::countr_zero(m))];
      next &= ~comp & ~removed;
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    std::vector<std::size_t> c;
    for (std::uint64_t m = comp; m; m &= m - 1) c.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    out.push_back(std::move(c));
  }
  return out;
}

bool SimpleGraph::is_bipartite() const {
  std::vector<int> color(n_, -1);
  for (std::size_t s = 0; s < n_; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

SimpleGraph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return SimpleGraph(n, std::move(e));
}

SimpleGraph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return SimpleGraph(n, std::move(e));
}

SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return SimpleGraph(n, std::move(e));
}

namespace {

SimpleGraph graph_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  try {
    auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      auto pair = e.get<std::vector<std::size_t>>();
      if (pair.size() != 2) throw ParseError("an edge needs exactly two endpoints");
      if (pair[0] < 1 || pair[1] < 1 || pair[0] > n || pair[1] > n)
        throw ParseError("edge endpoint outside 1.." + std::to_string(n));
      edges.emplace_back(pair[0] - 1, pair[1] - 1);
    }
    return SimpleGraph(n, std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

SimpleGraph parse_graph(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') return graph_from_json(text);

  std::vector<std::pair<std::uint64_t, std::size_t>> tokens;  // value, position
  for (i = 0; i < text.size();) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 1'000'000) throw ParseError("number too large", start);
        ++i;
      }
      tokens.emplace_back(v, start);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (tokens.empty()) throw ParseError("missing vertex count", 0);
  const std::size_t n = tokens[0].first;
  if ((tokens.size() - 1) % 2 != 0) throw ParseError("edge with a single endpoint", tokens.back().second);
  std::vector<Edge> edges;
  for (std::size_t k = 1; k < tokens.size(); k += 2) {
    auto [a, pa] = tokens[k];
    auto [b, pb] = tokens[k + 1];
    if (a < 1 || a > n) throw ParseError("vertex outside 1.." + std::to_string(n), pa);
    if (b < 1 || b > n) throw ParseError("vertex outside 1.." + std::to_string(n), pb);
    if (a == b) throw ParseError("loop edge", pa);
    Edge e{std::min(a, b) - 1, std::max(a, b) - 1};
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) throw ParseError("duplicate edge", pa);
    edges.push_back(e);
  }
  if (n > 64) throw BudgetExceeded("graphs are limited to 64 vertices");
  return SimpleGraph(n, std::move(edges));
}

nlohmann::json graph_json(const SimpleGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a + 1, b + 1});
  return nlohmann::json{{"n", g.num_vertices()}, {"edges", edges}};
}

IdealPresentation edge_ideal(const SimpleGraph& g) {
  std::vector<Binomial> gens;
  for (auto [a, b] : g.edges()) {
    std::vector<VarIndex> vs{a, b};
    gens.push_back(Binomial::monomial(Monomial::product_of(g.num_vertices(), vs)));
  }
  return IdealPresentation(g.num_vertices(), std::move(gens));
}

std::vector<VertexSet> edge_supports(const SimpleGraph& g) {
  std::vector<VertexSet> out;
  for (auto [a, b] : g.edges()) out.push_back({a, b});
  return out;
}

namespace {

class MatchingSearch {
 public:
  explicit MatchingSearch(const SimpleGraph& g) : g_(g) {}

  std::vector<Edge> run() {
    std::uint64_t open = g_.num_vertices() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g_.num_vertices()) - 1;
    // Isolated vertices never matter.
    for (std::size_t v = 0; v < g_.num_vertices(); ++v)
      if (g_.neighbor_mask(v) == 0) open &= ~(std::uint64_t{1} << v);
    search(open);
    return best_;
  }

 private:
  void search(std::uint64_t open) {
    if (current_.size() > best_.size()) best_ = current_;
    if (current_.size() + static_cast<std::size_t>(std::popcount(open)) / 2 <= best_.size()) return;
    if (!open) return;
    const auto v = static_cast<std::size_t>(std::countr_zero(open));
    const std::uint64_t rest = open & ~(std::uint64_t{1} << v);
    for (std::uint64_t m = g_.neighbor_mask(v) & rest; m; m &= m - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(m));
      current_.emplace_back(v, w);
      search(rest & ~(std::uint64_t{1} << w));
      current_.pop_back();
    }
    search(rest);
  }

  const SimpleGraph& g_;
  std::vector<Edge> current_;
  std::vector<Edge> best_;
};

bool is_matching_in(const SimpleGraph& g, const std::vector<Edge>& m) {
  std::uint64_t used = 0;
  for (auto [a, b] : m) {
    if (!g.has_edge(a, b)) return false;
    std::uint64_t bits = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    if (used & bits) return false;
    used |= bits;
  }
  return true;
}

}  // namespace

std::vector<Edge> maximum_matching(const SimpleGraph& g) { return MatchingSearch(g).run(); }

std::size_t matching_number(const SimpleGraph& g) { return maximum_matching(g).size(); }

std::size_t tau(const SimpleGraph& g) { return minimum_cover_size(edge_supports(g)); }

bool is_koenig(const SimpleGraph& g) { return matching_number(g) == tau(g); }

std::optional<MatchingCertificate> perfect_koenig_matching(const SimpleGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0 || n % 2 != 0 || tau(g) * 2 != n) return std::nullopt;
  std::vector<Edge> current;
  std::optional<std::vector<Edge>> found;
  auto search = [&](auto&& self, std::uint64_t open) -> bool {
    if (!open) {
      found = current;
      return true;
    }
    const auto v = static_cast<std::size_t>(std::countr_zero(open));
    const std::uint64_t rest = open & ~(std::uint64_t{1} << v);
    for (std::uint64_t m = g.neighbor_mask(v) & rest; m; m &= m - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(m));
      current.emplace_back(v, w);
      if (self(self, rest & ~(std::uint64_t{1} << w))) return true;
      current.pop_back();
    }
    return false;
  };
  search(search, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  if (!found) return std::nullopt;
  return MatchingCertificate{*found, true};
}

SimpleGraph build_H(const SimpleGraph& g, const std::vector<Edge>& matching) {
  if (!is_matching_in(g, matching) || matching.size() * 2 != g.num_vertices() || matching.size() != tau(g))
    throw PreconditionError("not a perfect matching of König type");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < matching.size(); ++i) {
    for (std::size_t j = 0; j < matching.size(); ++j) {
      if (i == j) continue;
      for (int zi = 0; zi < 2; ++zi) {
        for (int wi = 0; wi < 2; ++wi) {
          const auto z = zi ? matching[i].second : matching[i].first;
          const auto z_rest = zi ? matching[i].first : matching[i].second;
          const auto w = wi ? matching[j].second : matching[j].first;
          const auto w_rest = wi ? matching[j].first : matching[j].second;
          if (!g.has_edge(z_rest, w_rest)) continue;
          Edge e{std::min(z, w), std::max(z, w)};
          if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
        }
      }
    }
  }
  return SimpleGraph(g.num_vertices(), std::move(edges));
}

G0Graph build_G0(const SimpleGraph& g, const std::vector<Edge>& matching) {
  if (!is_matching_in(g, matching) || matching.size() != tau(g))
    throw PreconditionError("build_G0 needs a matching of size tau(G)");
  G0Graph out;
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < matching.size(); ++k) {
    out.labels.push_back(std::min(matching[k].first, matching[k].second));
    for (std::size_t l = k + 1; l < matching.size(); ++l) {
      bool adjacent = false;
      for (auto a : {matching[k].first, matching[k].second})
        for (auto b : {matching[l].first, matching[l].second})
          if (g.has_edge(a, b)) adjacent = true;
      if (adjacent) edges.emplace_back(k, l);
    }
  }
  out.graph = SimpleGraph(matching.size(), std::move(edges));
  return out;
}

SimplicialComplex independence_complex(const SimpleGraph& g) {
  return stanley_reisner_complex(g.num_vertices(), edge_supports(g));
}

KoenigCertificate matching_certificate(const SimpleGraph& g, const std::vector<Edge>& matching) {
  const auto ideal = edge_ideal(g);
  std::vector<Binomial> chosen;
  std::vector<std::optional<std::size_t>> indices;
  for (auto [a, b] : matching) {
    Edge e{std::min(a, b), std::max(a, b)};
    auto it = std::find(g.edges().begin(), g.edges().end(), e);
    if (it == g.edges().end()) throw PreconditionError("matching edge not in the graph");
    auto idx = static_cast<std::size_t>(it - g.edges().begin());
    chosen.push_back(ideal.generators[idx]);
    indices.emplace_back(idx);
  }
  auto cert = make_certificate(g.num_vertices(), std::move(chosen), std::move(indices),
                               MonomialOrder::lex(g.num_vertices()));
  cert.verified_minimal = true;
  return cert;
}

EdgeCanonicalModule canonical_module_edge(const SimpleGraph& g) {
  auto matching = perfect_koenig_matching(g);
  if (!matching) throw PreconditionError("the graph has no perfect matching of König type");
  const auto cert = matching_certificate(g, matching->edges);
  if (!cm_test_IB(edge_ideal(g), cert).cohen_macaulay) throw PreconditionError("S/I(G) is not Cohen-Macaulay");
  EdgeCanonicalModule out;
  out.matching = matching->edges;
  out.H = build_H(g, out.matching);
  out.covers = minimal_covers(edge_supports(out.H));
  out.generators = alexander_dual_generators(g.num_vertices(), out.covers);
  out.type = out.covers.size();
  return out;
}

EdgeReport koenig_cm_report(const SimpleGraph& g) {
  EdgeReport r;
  r.matching = maximum_matching(g);
  r.matching_number = r.matching.size();
  r.tau = tau(g);
  r.koenig = r.matching_number == r.tau;
  if (!r.koenig) throw PreconditionError("the graph is not König");
  r.alpha = minimum_covers(edge_supports(g)).size();
  r.g0 = build_G0(g, r.matching);
  const auto delta = independence_complex(r.g0.graph);
  r.faces = face_count(delta);
  r.cohen_macaulay = r.alpha == r.faces;
  if (r.cohen_macaulay) {
    r.type = delta.facets().size();
    r.regularity = delta.dimension() + 1;
  }
  return r;
}

}  // namespace koenig
