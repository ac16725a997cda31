#include "koenig/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace koenig {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

std::size_t universe_size(const std::vector<VertexSet>& supports) {
  std::size_t n = 0;
  for (const auto& s : supports)
    for (auto v : s) n = std::max(n, v + 1);
  return n;
}

std::vector<Bits> to_bits(const std::vector<VertexSet>& supports, std::size_t n) {
  std::vector<Bits> out;
  out.reserve(supports.size());
  for (const auto& s : supports) {
    if (s.empty()) throw PreconditionError("empty support: the ideal is the unit ideal");
    Bits b(n);
    for (auto v : s) b.set(v);
    out.push_back(std::move(b));
  }
  // Transversals only depend on the inclusion-minimal supports.
  std::vector<Bits> minimal;
  for (std::size_t i = 0; i < out.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < out.size() && !redundant; ++j) {
      if (i == j) continue;
      if (out[j].is_subset_of(out[i]) && (out[j] != out[i] || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(out[i]);
  }
  return minimal;
}

VertexSet to_set(const Bits& b) {
  VertexSet s;
  for (auto v = b.find_first(); v != Bits::npos; v = b.find_next(v)) s.push_back(v);
  return s;
}

class CoverEnumerator {
 public:
  CoverEnumerator(std::vector<Bits> edges, std::size_t n, std::optional<std::size_t> max_size)
      : edges_(std::move(edges)), n_(n), max_size_(max_size) {}

  std::vector<VertexSet> run() {
    Bits chosen(n_), forbidden(n_);
    search(chosen, forbidden, 0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  bool every_vertex_private(const Bits& chosen) const {
    for (auto v = chosen.find_first(); v != Bits::npos; v = chosen.find_next(v)) {
      bool has_private = false;
      for (const auto& e : edges_) {
        if (!e.test(v)) continue;
        Bits hit = e & chosen;
        if (hit.count() == 1) {
          has_private = true;
          break;
        }
      }
      if (!has_private) return false;
    }
    return true;
  }

  void search(Bits& chosen, Bits forbidden, std::size_t size) {
    const Bits* unhit = nullptr;
    for (const auto& e : edges_) {
      if (!e.intersects(chosen)) {
        if (e.is_subset_of(forbidden)) return;
        if (!unhit) unhit = &e;
      }
    }
    if (!unhit) {
      out_.push_back(to_set(chosen));
      return;
    }
    if (max_size_ && size >= *max_size_) return;
    Bits candidates = *unhit - forbidden;
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
      chosen.set(v);
      if (every_vertex_private(chosen)) search(chosen, forbidden, size + 1);
      chosen.reset(v);
      forbidden.set(v);
    }
  }

  std::vector<Bits> edges_;
  std::size_t n_;
  std::optional<std::size_t> max_size_;
  std::vector<VertexSet> out_;
};

class MinimumCover {
 public:
  MinimumCover(std::vector<Bits> edges, std::size_t n) : edges_(std::move(edges)), n_(n) {}

  std::size_t run() {
    best_ = n_ + 1;
    Bits chosen(n_), forbidden(n_);
    search(chosen, forbidden, 0);
    return best_;
  }

 private:
  // Disjoint unhit edges each need their own vertex.
  std::size_t lower_bound(const Bits& chosen) const {
    Bits used(n_);
    std::size_t bound = 0;
    for (const auto& e : edges_) {
      if (e.intersects(chosen) || e.intersects(used)) continue;
      used |= e;
      ++bound;
    }
    return bound;
  }

  void search(Bits& chosen, Bits forbidden, std::size_t size) {
    if (size + lower_bound(chosen) >= best_) return;
    const Bits* unhit = nullptr;
    for (const auto& e : edges_) {
      if (!e.intersects(chosen)) {
        if (e.is_subset_of(forbidden)) return;
        if (!unhit) unhit = &e;
      }
    }
    if (!unhit) {
      best_ = size;
      return;
    }
    Bits candidates = *unhit - forbidden;
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
      chosen.set(v);
      search(chosen, forbidden, size + 1);
      chosen.reset(v);
      forbidden.set(v);
    }
  }

  std::vector<Bits> edges_;
  std::size_t n_;
  std::size_t best_ = 0;
};

}  // namespace

std::vector<VertexSet> supports_of(const std::vector<Monomial>& ms) {
  std::vector<VertexSet> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.support());
  return out;
}

std::vector<VertexSet> minimal_covers(const std::vector<VertexSet>& supports, std::optional<std::size_t> max_size) {
  if (supports.empty()) return {VertexSet{}};
  const std::size_t n = universe_size(supports);
  return CoverEnumerator(to_bits(supports, n), n, max_size).run();
}

std::size_t minimum_cover_size(const std::vector<VertexSet>& supports) {
  if (supports.empty()) return 0;
  const std::size_t n = universe_size(supports);
  return MinimumCover(to_bits(supports, n), n).run();
}

std::vector<VertexSet> minimum_covers(const std::vector<VertexSet>& supports) {
  return minimal_covers(supports, minimum_cover_size(supports));
}

std::size_t height_monomial(const std::vector<Monomial>& gens) { return minimum_cover_size(supports_of(gens)); }

std::size_t height_monomial(const IdealPresentation& ideal) { return height_monomial(ideal.monomial_generators()); }

Polarization polarize(const IdealPresentation& ideal) {
  const auto gens = ideal.monomial_generators();
  std::vector<Exponent> top(ideal.num_vars, 1);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < ideal.num_vars; ++i) top[i] = std::max(top[i], g[i]);

  Polarization p;
  std::vector<std::size_t> first(ideal.num_vars);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ideal.num_vars; ++i) {
    first[i] = p.origin.size();
    for (Exponent j = 1; j <= top[i]; ++j) {
      p.origin.emplace_back(i, j);
      names.push_back(top[i] == 1 ? ideal.name(i) : ideal.name(i) + "_" + std::to_string(j));
    }
  }
  const std::size_t m = p.origin.size();
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    std::vector<VarIndex> vars;
    for (std::size_t i = 0; i < ideal.num_vars; ++i)
      for (Exponent j = 0; j < g[i]; ++j) vars.push_back(first[i] + j);
    out.push_back(Monomial::product_of(m, vars));
  }
  p.ideal = monomial_ideal(m, std::move(out), std::move(names));
  return p;
}

bool is_unmixed(const IdealPresentation& ideal) {
  const auto p = polarize(ideal);
  const auto gens = p.ideal.monomial_generators();
  if (gens.empty()) return true;
  const auto covers = minimal_covers(supports_of(gens));
  return std::all_of(covers.begin(), covers.end(),
                     [&](const VertexSet& c) { return c.size() == covers.front().size(); });
}

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<VertexSet> facets) : n_(n) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (!f.empty() && f.back() >= n) throw PreconditionError("facet vertex out of range");
  }
  // Keep only inclusion-maximal faces.
  for (std::size_t i = 0; i < facets.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < facets.size() && !redundant; ++j) {
      if (i == j) continue;
      bool sub = std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(), facets[i].end());
      if (sub && (facets[i].size() < facets[j].size() || j < i)) redundant = true;
    }
    if (!redundant) facets_.push_back(facets[i]);
  }
  std::sort(facets_.begin(), facets_.end());
}

int SimplicialComplex::dimension() const {
  std::size_t m = 0;
  for (const auto& f : facets_) m = std::max(m, f.size());
  return static_cast<int>(m) - 1;
}

bool SimplicialComplex::contains(const VertexSet& face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const VertexSet& f) {
    return std::includes(f.begin(), f.end(), face.begin(), face.end());
  });
}

SimplicialComplex stanley_reisner_complex(std::size_t n, const std::vector<VertexSet>& supports) {
  if (supports.empty()) {
    VertexSet all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return SimplicialComplex(n, {all});
  }
  if (universe_size(supports) > n) throw PreconditionError("support vertex out of range");
  std::vector<VertexSet> facets;
  for (const auto& c : minimal_covers(supports)) {
    VertexSet f;
    for (std::size_t v = 0; v < n; ++v)
      if (!std::binary_search(c.begin(), c.end(), v)) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex stanley_reisner_complex(const IdealPresentation& squarefree) {
  const auto gens = squarefree.monomial_generators();
  for (const auto& g : gens)
    if (!g.is_squarefree()) throw PreconditionError("Stanley-Reisner complex needs a squarefree ideal");
  return stanley_reisner_complex(squarefree.num_vars, supports_of(gens));
}

namespace {

std::vector<std::uint64_t> all_faces(const SimplicialComplex& complex) {
  if (complex.num_vertices() > 63) throw BudgetExceeded("face enumeration supports at most 63 vertices");
  std::unordered_set<std::uint64_t> faces;
  for (const auto& f : complex.facets()) {
    std::uint64_t mask = 0;
    for (auto v : f) mask |= std::uint64_t{1} << v;
    if (f.size() > 24) throw BudgetExceeded("facet too large for face enumeration");
    // Enumerate all submasks of the facet.
    for (std::uint64_t s = mask;; s = (s - 1) & mask) {
      faces.insert(s);
      if (faces.size() > scaled_budget(20'000'000)) throw BudgetExceeded("too many faces");
      if (s == 0) break;
    }
  }
  std::vector<std::uint64_t> out(faces.begin(), faces.end());
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

using BigInt = boost::multiprecision::cpp_int;

// Exact rank over Q by fraction-free elimination with content removal.
std::size_t rank_over_q(std::vector<std::vector<BigInt>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      BigInt a = rows[rank][c], b = rows[r][c];
      BigInt content = 0;
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] = rows[r][k] * a - rows[rank][k] * b;
        content = gcd(content, rows[r][k]);
      }
      if (content > 1)
        for (std::size_t k = c; k < cols; ++k) rows[r][k] /= content;
    }
    ++rank;
  }
  return rank;
}

// Reduced Betti numbers of the complex given by its faces (as masks, closed
// under subsets, sorted by size). Index i is dim H~_{i-1}.
std::vector<std::uint64_t> betti_from_faces(const std::vector<std::uint64_t>& faces) {
  int top = -1;
  for (auto f : faces) top = std::max(top, std::popcount(f) - 1);
  // by_dim[d + 1] lists faces of dimension d.
  std::vector<std::vector<std::uint64_t>> by_dim(static_cast<std::size_t>(top + 2));
  for (auto f : faces) by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);

  // rank_of[d + 1] = rank of the boundary map from dimension d to d - 1.
  std::vector<std::size_t> rank_of(by_dim.size() + 1, 0);
  for (std::size_t k = 1; k < by_dim.size(); ++k) {
    const auto& dom = by_dim[k];
    const auto& cod = by_dim[k - 1];
    std::vector<std::vector<BigInt>> rows(dom.size(), std::vector<BigInt>(cod.size(), 0));
    for (std::size_t i = 0; i < dom.size(); ++i) {
      int sign = 1;
      for (int v = 0; v < 64; ++v) {
        std::uint64_t bit = std::uint64_t{1} << v;
        if (!(dom[i] & bit)) continue;
        std::uint64_t face = dom[i] & ~bit;
        auto it = std::lower_bound(cod.begin(), cod.end(), face);
        rows[i][static_cast<std::size_t>(it - cod.begin())] = sign;
        sign = -sign;
      }
    }
    rank_of[k] = rank_over_q(std::move(rows));
  }
  std::vector<std::uint64_t> betti(by_dim.size(), 0);
  for (std::size_t k = 0; k < by_dim.size(); ++k)
    betti[k] = by_dim[k].size() - rank_of[k] - rank_of[k + 1];
  return betti;
}

}  // namespace

std::uint64_t face_count(const SimplicialComplex& complex) { return all_faces(complex).size(); }

std::uint64_t multiplicity(const IdealPresentation& ideal) {
  const auto p = polarize(ideal);
  const auto gens = p.ideal.monomial_generators();
  if (gens.empty()) return 1;
  return minimum_covers(supports_of(gens)).size();
}

std::vector<Monomial> alexander_dual_generators(std::size_t n, const std::vector<VertexSet>& covers) {
  std::vector<Monomial> out;
  out.reserve(covers.size());
  for (const auto& c : covers) out.push_back(Monomial::product_of(n, c));
  return out;
}

std::vector<std::uint64_t> reduced_betti_numbers(const SimplicialComplex& complex) {
  return betti_from_faces(all_faces(complex));
}

bool reisner_cm_oracle(const SimplicialComplex& complex) {
  if (complex.num_vertices() > 14) throw BudgetExceeded("Reisner oracle supports at most 14 vertices");
  const auto faces = all_faces(complex);
  const std::unordered_set<std::uint64_t> face_set(faces.begin(), faces.end());
  for (auto f : faces) {
    std::vector<std::uint64_t> link;
    for (auto g : faces)
      if ((g & f) == 0 && face_set.count(g | f)) link.push_back(g);
    // link is closed under subsets and inherits the size-then-value order.
    auto betti = betti_from_faces(link);
    // betti[k] is H~_{k-1}; require vanishing below the top dimension.
    for (std::size_t k = 0; k + 1 < betti.size(); ++k)
      if (betti[k] != 0) return false;
  }
  return true;
}

}  // namespace koenig
