#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "koenig/errors.hpp"
#include "koenig/hibi.hpp"
#include "support.hpp"

using namespace koenig;

namespace {

using Sets = std::vector<std::vector<std::size_t>>;

Monomial xx(std::size_t n, std::size_t i, std::size_t j) {
  std::vector<Exponent> e(n, 0);
  ++e[i - 1];
  ++e[j - 1];
  return Monomial(std::move(e));
}

std::vector<Monomial> sorted(std::vector<Monomial> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// covers a<c, b<c, b<d
Poset four_element() { return Poset(4, {{0, 2}, {1, 2}, {1, 3}}, {"a", "b", "c", "d"}); }

// A chain x0 < x1 < ... < xd with y_{i+1} covering x_i: maximal chains of
// different lengths and an antichain {y_1, ..., y_d, x_d}.
Poset nonpure(std::size_t d) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < d; ++i) covers.emplace_back(i, i + 1);
  for (std::size_t i = 0; i < d; ++i) covers.emplace_back(i, d + 1 + i);
  return Poset(2 * d + 1, covers);
}

// Strict order from the covers by transitive closure.
std::vector<std::vector<bool>> closure(const Poset& p) {
  const std::size_t m = p.size();
  std::vector<std::vector<bool>> lt(m, std::vector<bool>(m, false));
  for (auto [b, a] : p.covers()) lt[b][a] = true;
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (lt[i][k] && lt[k][j]) lt[i][j] = true;
  return lt;
}

std::size_t brute_ideal_count(const Poset& p) {
  const auto lt = closure(p);
  std::size_t count = 0;
  for (std::uint32_t s = 0; s < (1U << p.size()); ++s) {
    bool down = true;
    for (std::size_t a = 0; a < p.size() && down; ++a)
      for (std::size_t b = 0; b < p.size() && down; ++b)
        if (lt[b][a] && (s >> a & 1U) && !(s >> b & 1U)) down = false;
    count += down ? 1 : 0;
  }
  return count;
}

std::size_t brute_width(const Poset& p) {
  std::size_t best = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << p.size()); ++s) {
    bool anti = true;
    for (std::size_t a = 0; a < p.size() && anti; ++a)
      for (std::size_t b = a + 1; b < p.size() && anti; ++b)
        if ((s >> a & 1U) && (s >> b & 1U) && p.comparable(a, b)) anti = false;
    if (anti) best = std::max(best, static_cast<std::size_t>(std::popcount(s)));
  }
  return best;
}

}  // namespace

TEST_CASE("poset construction and input") {
  auto p = four_element();
  CHECK(p.less(1, 3));
  CHECK_FALSE(p.comparable(0, 3));
  CHECK(p.rank() == 1);
  CHECK(parse_poset(poset_json(p).dump()).covers() == p.covers());
  CHECK_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), PreconditionError);
  CHECK_THROWS_AS(Poset(3, {{0, 1}, {1, 2}, {0, 2}}), PreconditionError);
  CHECK_THROWS_AS(parse_poset(R"({"elements": 2, "covers": [[1, 2], [2, 1]]})"), ParseError);
  CHECK_THROWS_AS(parse_poset(R"({"elements": 2, "covers": [[1, 3]]})"), ParseError);
  CHECK_THROWS_AS(parse_poset("{"), ParseError);
}

TEST_CASE("lattice of poset ideals") {
  auto l = poset_ideals(four_element());
  REQUIRE(l.size() == 8);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < l.size(); ++i) labels.push_back(l.label(i));
  CHECK(labels == std::vector<std::string>{"{}", "{a}", "{b}", "{a,b}", "{b,d}", "{a,b,c}", "{a,b,d}", "{a,b,c,d}"});
  CHECK(boolean_lattice(4).size() == 16);
  CHECK(poset_ideals(chain_poset(5)).size() == 6);
  CHECK(segre_lattice(3, 3).size() == 9);
  CHECK(segre_lattice(2, 5).size() == 10);
  CHECK_THROWS_AS(segre_lattice(1, 3), PreconditionError);
}

TEST_CASE("incomparability graphs and thinness") {
  CHECK(incomparability_graph(chain_poset(4)).edges().empty());
  CHECK(incomparability_graph(antichain_poset(4)) == complete_graph(4));

  auto fig = poset_ideals(four_element()).as_poset();
  CHECK(is_pure(fig));
  auto t = tau_incom(fig);
  CHECK(t.exhaustive == 3);
  CHECK(t.formula == 3);
  CHECK(is_thin(fig).thin);
  auto dil = dilworth_equivalences(fig);
  CHECK(dil.thin);
  CHECK(dil.agree());

  auto b3 = boolean_lattice(3).as_poset();
  CHECK(tau_incom(b3).exhaustive == 4);
  CHECK(tau_incom(b3).formula == 4);
  auto thin_b3 = is_thin(b3);
  CHECK_FALSE(thin_b3.thin);
  REQUIRE(thin_b3.antichain);
  CHECK(tau_incom(chain_poset(4)).exhaustive == 0);
  CHECK(is_thin(chains_poset({3, 4})).thin);

  auto three = dilworth_equivalences(antichain_poset(3));
  CHECK_FALSE(three.thin);
  CHECK(three.agree());

  auto np = nonpure(3);
  CHECK_FALSE(is_pure(np));
  CHECK_FALSE(is_thin(np).thin);
  CHECK(brute_width(np) == 4);
  CHECK_THROWS_AS(dilworth_equivalences(np), PreconditionError);
  CHECK_THROWS_AS(tau_incom(np), PreconditionError);
}

TEST_CASE("Hibi ideals") {
  auto fig = poset_ideals(four_element());
  auto h = hibi_ideal(fig);
  std::size_t incomparable = 0;
  for (std::size_t i = 0; i < fig.size(); ++i)
    for (std::size_t j = i + 1; j < fig.size(); ++j) incomparable += fig.comparable(i, j) ? 0 : 1;
  CHECK(h.ideal.generators.size() == incomparable);
  // x_{a} x_{b,d} - x_{} x_{a,b,d}
  auto target = Binomial::difference(xx(8, 2, 5), xx(8, 1, 7));
  CHECK(std::any_of(h.ideal.generators.begin(), h.ideal.generators.end(),
                    [&](const Binomial& g) { return g.same_element(target); }));
  CHECK(verify_hibi_gb(fig));
  CHECK(hibi_ideal(poset_ideals(chain_poset(3))).ideal.generators.empty());
  CHECK(verify_hibi_gb(poset_ideals(chain_poset(3))));

  auto b3 = hibi_ideal(boolean_lattice(3));
  const std::vector<Binomial> expected{
      Binomial::difference(xx(8, 2, 3), xx(8, 1, 5)), Binomial::difference(xx(8, 3, 4), xx(8, 1, 7)),
      Binomial::difference(xx(8, 1, 6), xx(8, 2, 4)), Binomial::difference(xx(8, 5, 6), xx(8, 2, 8)),
      Binomial::difference(xx(8, 6, 7), xx(8, 4, 8)), Binomial::difference(xx(8, 2, 7), xx(8, 1, 8)),
      Binomial::difference(xx(8, 4, 5), xx(8, 1, 8)), Binomial::difference(xx(8, 5, 7), xx(8, 3, 8)),
      Binomial::difference(xx(8, 3, 6), xx(8, 1, 8))};
  REQUIRE(b3.ideal.generators.size() == 9);
  for (const auto& e : expected)
    CHECK(std::any_of(b3.ideal.generators.begin(), b3.ideal.generators.end(),
                      [&](const Binomial& g) { return g.same_element(e); }));
  CHECK(verify_hibi_gb(boolean_lattice(3)));
}

TEST_CASE("Koenig type of Hibi ideals") {
  auto fig = koenig_hibi(poset_ideals(four_element()));
  CHECK(fig.thin);
  CHECK(fig.bipartite_incom);
  CHECK(fig.koenig_revlex);
  CHECK(fig.height == 3);
  REQUIRE(fig.witness);
  CHECK(fig.witness->height() == 3);

  auto b4 = koenig_hibi(boolean_lattice(4));
  CHECK_FALSE(b4.thin);
  CHECK_FALSE(b4.koenig_revlex);
  auto b3 = koenig_hibi(boolean_lattice(3));
  CHECK_FALSE(b3.koenig_revlex);
  CHECK_FALSE(b3.witness);
  auto b2 = koenig_hibi(boolean_lattice(2));
  CHECK(b2.koenig_revlex);
  CHECK(b2.height == 1);

  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t m = 2; m <= 5; ++m) {
      auto r = koenig_hibi(segre_lattice(n, m));
      CHECK(r.koenig_revlex == (n == 2 || m == 2));
      CHECK(r.thin == r.koenig_revlex);
    }

  for (std::size_t n = 1; n <= 5; ++n) CHECK(koenig_bound(boolean_lattice(n)).holds == (n <= 3));
  auto bound = koenig_bound(boolean_lattice(3));
  CHECK(bound.size == 8);
  CHECK(bound.join_irreducibles == 3);
  CHECK(koenig_bound(poset_ideals(chain_poset(6))).holds);
}

TEST_CASE("B3 under lex") {
  auto b3 = boolean_lattice(3);
  auto cert = koenig_b3_lex(b3);
  REQUIRE(cert);
  CHECK(cert->height() == 4);
  CHECK(sorted(cert->initials) == sorted({xx(8, 3, 6), xx(8, 2, 7), xx(8, 4, 8), xx(8, 1, 5)}));
  auto gb = buchberger(hibi_ideal(b3).ideal, MonomialOrder::lex(8));
  CHECK(sorted(initial_ideal(gb).monomial_generators()) ==
        sorted({xx(8, 1, 8), xx(8, 3, 8), xx(8, 3, 6), xx(8, 2, 7), xx(8, 4, 8), xx(8, 2, 8), xx(8, 1, 6),
                xx(8, 1, 7), xx(8, 1, 5)}));
  CHECK_THROWS_AS(koenig_b3_lex(boolean_lattice(2)), PreconditionError);
}

TEST_CASE("cells and admissible sets") {
  auto adm = cells_and_admissible_sets(poset_ideals(four_element()));
  CHECK(adm.cells.size() == 3);
  auto has = [&](std::vector<std::size_t> one_based) {
    for (auto& v : one_based) --v;
    return std::find(adm.sets.begin(), adm.sets.end(), one_based) != adm.sets.end();
  };
  for (auto w : Sets{{1, 2}, {6, 8}, {1, 3, 5}, {5, 7, 8}, {3, 4, 6}, {3, 4, 7}, {2, 4, 7}}) CHECK(has(w));
  // 2, 4 and 6 touch the cell {1, 2, 3, 5} only in the corner 2.
  CHECK_FALSE(has({2, 4, 6}));

  auto chain = cells_and_admissible_sets(poset_ideals(chain_poset(3)));
  CHECK(chain.cells.empty());
  CHECK(chain.sets.size() == 15);

  auto b2 = cells_and_admissible_sets(boolean_lattice(2));
  REQUIRE(b2.cells.size() == 1);
  // nonempty sets of the square's corners that contain one of its four edges
  CHECK(b2.sets.size() == 9);
  CHECK_THROWS_AS(cells_and_admissible_sets(boolean_lattice(3)), PreconditionError);
}

TEST_CASE("canonical module") {
  auto fig = canonical_module_hibi(poset_ideals(four_element()));
  CHECK(fig.height == 3);
  std::vector<std::string> labels;
  for (const auto& p : fig.surviving) labels.push_back(p.label);
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<std::string>{"(x2,x4,x7)", "(x3,x4,x6)", "(x3,x4,x7)"});
  REQUIRE(fig.intersection);
  std::vector<Exponent> x4(8, 0);
  x4[3] = 1;
  CHECK(sorted(*fig.intersection) == sorted({Monomial(x4), xx(8, 2, 3), xx(8, 3, 7), xx(8, 6, 7)}));

  auto chain = canonical_module_hibi(poset_ideals(chain_poset(3)));
  CHECK(chain.height == 0);
  auto b2 = canonical_module_hibi(boolean_lattice(2));
  CHECK(b2.height == 1);
  for (const auto& c : b2.components)
    if (c.height == 1) CHECK(c.blocks.empty());
}

TEST_CASE("property: random posets") {
  std::mt19937 rng(2024);
  std::size_t thin_lattices = 0, koenig_lattices = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t m = 1 + static_cast<std::size_t>(trial % 8);
    std::uniform_real_distribution<double> density(0.1, 0.7);
    auto p = testing::random_poset(rng, m, density(rng));
    CAPTURE(poset_json(p).dump());

    // Incomparability from an independent closure.
    const auto lt = closure(p);
    const auto incom = incomparability_graph(p);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) CHECK(incom.has_edge(a, b) == (!lt[a][b] && !lt[b][a]));
    CHECK(is_thin(p).thin == (brute_width(p) <= 2));
    CHECK(min_chain_cover(p) == brute_width(p));
    if (is_pure(p)) {
      auto t = tau_incom(p);
      CHECK(t.exhaustive == t.formula);
      CHECK(t.exhaustive == testing::brute_tau(incom));
      CHECK(dilworth_equivalences(p).agree());
    }

    auto l = poset_ideals(p);
    CHECK(l.size() == brute_ideal_count(p));
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = 0; j < l.size(); ++j) {
        CHECK_NOTHROW(l.meet(i, j));
        CHECK_NOTHROW(l.join(i, j));
      }
    if (l.size() > 24) continue;
    const auto lp = l.as_poset();
    CHECK(is_pure(lp));
    CHECK(dilworth_equivalences(lp).agree());
    CHECK(verify_hibi_gb(l));
    auto r = koenig_hibi(l);
    CHECK(r.thin == r.bipartite_incom);
    CHECK(r.thin == r.koenig_revlex);
    if (r.thin) {
      ++thin_lattices;
      CHECK(r.witness);
    }
    if (r.koenig_revlex) ++koenig_lattices;
    if (r.koenig_revlex) CHECK(koenig_bound(l).holds);

    // Height from the lattice against the height of the initial ideal.
    const auto h = hibi_ideal(l);
    const auto gb = buchberger(h.ideal, h.order);
    CHECK(r.height == height_monomial(initial_ideal(gb)));
  }
  CHECK(thin_lattices > 20);
  CHECK(koenig_lattices == thin_lattices);
}
