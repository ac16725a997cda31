#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "koenig/binomial_edge.hpp"
#include "koenig/errors.hpp"
#include "support.hpp"

using namespace koenig;

namespace {

SimpleGraph one_based(std::size_t n, std::vector<Edge> edges) {
  for (auto& [a, b] : edges) {
    --a;
    --b;
  }
  return SimpleGraph(n, std::move(edges));
}

// 5-cycle 1..5 with whiskers 5-6 and 3-7.
SimpleGraph whiskered_pentagon() { return one_based(7, {{1, 2}, {1, 5}, {2, 3}, {3, 4}, {3, 7}, {4, 5}, {5, 6}}); }

// Triangle 2,3,5 with whiskers 1-2, 3-4 and 5-6.
SimpleGraph whiskered_triangle() { return one_based(6, {{1, 2}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {5, 6}}); }

using Paths = std::vector<std::vector<std::size_t>>;

// Longest linear forest by trying every edge subset.
std::size_t brute_semipath_length(const SimpleGraph& g) {
  const auto& e = g.edges();
  std::size_t best = 0;
  std::vector<Edge> chosen;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == e.size()) {
      if (is_semipath(g, chosen)) best = std::max(best, chosen.size());
      return;
    }
    chosen.push_back(e[i]);
    if (is_semipath(g, chosen)) self(self, i + 1);
    chosen.pop_back();
    self(self, i + 1);
  };
  rec(rec, 0);
  return best;
}

}  // namespace

TEST_CASE("generators and order") {
  auto j = binomial_edge_ideal(path_graph(3));
  REQUIRE(j.generators.size() == 2);
  CHECK(to_string(j) == "x1*y2 - x2*y1, x2*y3 - x3*y2");
  TermOrder lex = binomial_edge_order(3);
  for (const auto& f : j.generators) CHECK(f.lead() == f.initial_term(lex));
  CHECK(binomial_edge_names(2) == std::vector<std::string>{"x1", "x2", "y1", "y2"});
}

TEST_CASE("cut sets") {
  auto p3 = cut_sets(path_graph(3));
  REQUIRE(p3.size() == 2);
  CHECK(p3[0].T.empty());
  CHECK(p3[0].components == 1);
  CHECK(p3[0].height == 2);
  CHECK(p3[1].T == std::vector<std::size_t>{1});
  CHECK(p3[1].components == 2);
  CHECK(p3[1].height == 2);

  auto k5 = cut_sets(complete_graph(5));
  REQUIRE(k5.size() == 1);
  CHECK(k5[0].T.empty());

  auto p5 = cut_sets(path_graph(5));
  for (std::size_t v = 0; v < 5; ++v) {
    bool listed = std::any_of(p5.begin(), p5.end(), [&](const CutSetRecord& r) { return r.T == std::vector<std::size_t>{v}; });
    CHECK(listed == (v != 0 && v != 4));
  }
}

TEST_CASE("dimension and unmixedness") {
  CHECK(dim_quotient(whiskered_pentagon()) == 9);
  CHECK(dim_quotient(whiskered_triangle()) == 7);
  CHECK(dim_quotient(complete_graph(2)) == 3);
  CHECK_FALSE(is_unmixed_JG(whiskered_pentagon()));
  CHECK(is_unmixed_JG(whiskered_triangle()));
  CHECK(is_unmixed_JG(complete_graph(5)));
  for (std::size_t n = 2; n <= 6; ++n) CHECK(is_unmixed_JG(path_graph(n)));
}

TEST_CASE("semi-paths of the two whiskered graphs") {
  auto g1 = whiskered_pentagon();
  auto s1 = max_semipath(g1);
  CHECK(s1.length == 5);
  CHECK(s1.paths == Paths{{0, 1, 2, 3, 4, 5}});
  CHECK_FALSE(is_traceable(g1));
  auto c1 = koenig_JG(g1);
  REQUIRE(c1);
  CHECK(c1->height() == 5);
  CHECK(c1->C.size() == 9);
  CHECK(monomials_regular_sequence(c1->initials));

  auto g2 = whiskered_triangle();
  auto s2 = max_semipath(g2);
  CHECK(s2.length == 4);
  CHECK(s2.paths == Paths{{0, 1, 2, 3}, {4, 5}});
  CHECK_FALSE(koenig_JG(g2));

  CHECK(max_semipath(complete_graph(2)).length == 1);
  CHECK_THROWS_AS(semipath_from_edges(4, {{0, 1}, {0, 2}, {0, 3}}), PreconditionError);
  CHECK_THROWS_AS(semipath_from_edges(3, {{0, 1}, {1, 2}, {0, 2}}), PreconditionError);
}

TEST_CASE("special systems of parameters") {
  auto p3 = special_sop_JG(path_graph(3), {{0, 1, 2}});
  CHECK(p3.forms == std::vector<LinearForm>{LinearForm::diff(0, 4), LinearForm::diff(1, 5), LinearForm::var(2),
                                            LinearForm::var(3)});
  CHECK(p3.zero_dimensional);
  // K[y] modulo (y2^2, y3^2) after the substitutions
  CHECK(p3.length == 4);

  auto k2 = special_sop_JG(complete_graph(2), {{0, 1}});
  CHECK(k2.forms.size() == 3);
  CHECK(k2.length == 2);

  auto g1 = whiskered_pentagon();
  auto sop = special_sop_JG(g1, spanning_components(7, max_semipath(g1)));
  CHECK(sop.forms.size() == 9);
  CHECK(sop.zero_dimensional);
  CHECK_THROWS_AS(special_sop_JG(g1, {{0, 1, 2}}), PreconditionError);
}

TEST_CASE("Cohen-Macaulay verdicts") {
  for (std::size_t n = 2; n <= 5; ++n) {
    CHECK(cm_verdict_JG(path_graph(n)).verdict == MultiplicityVerdict::cohen_macaulay);
    CHECK(cm_verdict_JG(complete_graph(n)).verdict == MultiplicityVerdict::cohen_macaulay);
  }
  CHECK(cm_verdict_JG(whiskered_pentagon()).verdict == MultiplicityVerdict::not_cohen_macaulay);
  CHECK(cm_verdict_JG(cycle_graph(5)).verdict == MultiplicityVerdict::not_cohen_macaulay);
  CHECK_THROWS_AS(cm_verdict_JG(whiskered_triangle()), PreconditionError);
}

TEST_CASE("canonical module components") {
  for (std::size_t n = 3; n <= 5; ++n) {
    auto kn = canonical_components_JG(complete_graph(n));
    CHECK(kn.path.size() == n);
    // Larger cut sets of the path, like {2, 4}, contain some P_{i} modulo J_G.
    REQUIRE(kn.irredundant.size() == n - 2);
    for (std::size_t i = 0; i + 2 < n; ++i) {
      CHECK(kn.irredundant[i] == prime_component_PT(path_graph(n), {i + 1}));
      CHECK(kn.irredundant[i].label == "P_{" + std::to_string(i + 2) + "}");
    }
    CHECK(kn.components.size() >= kn.irredundant.size());
  }
  CHECK(canonical_components_JG(complete_graph(5)).components.size() == 4);
  auto k3 = canonical_components_JG(complete_graph(3));
  CHECK(k3.components[0].variables == std::vector<VarIndex>{1, 4});
  CHECK(canonical_components_JG(path_graph(5)).components.empty());
  CHECK_THROWS_AS(canonical_components_JG(whiskered_pentagon()), PreconditionError);
  CHECK_THROWS_AS(canonical_components_JG(cycle_graph(5)), PreconditionError);

  auto pt = prime_PT(path_graph(4), {1});
  // x2, y2 and f_34
  CHECK(pt.generators.size() == 3);
}

TEST_CASE("exhaustive: connected graphs on at most seven vertices") {
  const auto& graphs = testing::connected_graphs_upto(7);
  std::size_t traceable = 0, koenig = 0, cm = 0;
  for (const auto& g : graphs) {
    CAPTURE(graph_json(g).dump());
    const std::size_t n = g.num_vertices();
    const std::size_t d = dim_quotient(g);
    const auto j = binomial_edge_ideal(g);
    // Two independent routes to the dimension.
    CHECK(d == quotient_dimension(j, binomial_edge_order(n)));

    const auto sp = max_semipath(g);
    CHECK(is_semipath(g, sp.edges()));
    CHECK(sp.length <= 2 * n - d);
    if (g.edges().size() <= 12) CHECK(sp.length == brute_semipath_length(g));

    // Semi-paths are exactly the graphs whose ideal is a complete intersection.
    const bool ci = g.edges().size() == 2 * n - d;
    CHECK(is_semipath(g, g.edges()) == ci);

    const auto cert = koenig_JG(g);
    CHECK(cert.has_value() == (sp.length == 2 * n - d));
    const auto trace = is_traceable(g);
    if (trace) {
      ++traceable;
      CHECK(cert);
      REQUIRE(trace->size() == 1);
      CHECK((*trace)[0].size() == n);
    }
    if (!cert) continue;
    ++koenig;
    CHECK(monomials_regular_sequence(cert->initials));
    CHECK(cert->C.size() == d);
    if (is_unmixed_JG(g)) CHECK(trace);

    const auto sop = special_sop_JG(g, spanning_components(n, sp));
    CHECK(sop.forms.size() == d);
    CHECK(sop.zero_dimensional);
    if (n <= 6) {
      const auto verdict = cm_verdict_JG(g);
      CHECK(verdict.verdict != MultiplicityVerdict::not_parameters);
      if (verdict.verdict == MultiplicityVerdict::cohen_macaulay) {
        ++cm;
        CHECK(is_unmixed_JG(g));
      }
    }
  }
  CHECK(traceable > 500);
  CHECK(koenig >= traceable);
  CHECK(cm > 5);
}
