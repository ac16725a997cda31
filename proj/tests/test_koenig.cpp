#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "koenig/errors.hpp"
#include "koenig/graph.hpp"
#include "koenig/koenig.hpp"
#include "support.hpp"

using namespace koenig;

namespace {

Monomial mono(std::initializer_list<Exponent> e) { return Monomial(std::vector<Exponent>(e)); }

IdealPresentation ideal_of(const char* text) { return parse_ideal(text, infer_variable_names(text)); }

std::vector<Monomial> sorted(std::vector<Monomial> v) {
  std::sort(v.begin(), v.end());
  return v;
}

PrimeComponent prime(std::vector<VarIndex> vars) { return PrimeComponent{std::move(vars), {}, ""}; }

}  // namespace

TEST_CASE("attached sequence of a single binomial") {
  auto ideal = ideal_of("x1*x2 - x2^2");
  auto lex12 = attached_sequence(ideal, {0}, MonomialOrder::lex(2));
  CHECK(lex12.initials == std::vector<Monomial>{mono({1, 1})});
  CHECK(lex12.B == std::vector<std::vector<VarIndex>>{{0, 1}});
  CHECK(lex12.A.empty());
  CHECK(lex12.C == std::vector<LinearForm>{LinearForm::diff(1, 0)});

  auto lex21 = attached_sequence(ideal, {0}, MonomialOrder::with_priority(OrderKind::lex, {1, 0}));
  CHECK(lex21.initials == std::vector<Monomial>{mono({0, 2})});
  CHECK(lex21.A == std::vector<VarIndex>{0});
  CHECK(lex21.C == std::vector<LinearForm>{LinearForm::var(0)});

  auto free = koenig_graded(ideal);
  REQUIRE(free);
  CHECK(free->height() == 1);
}

TEST_CASE("attached sequence rejects bad selections") {
  auto ideal = ideal_of("x1*x2 - x3^2, x2*x3 - x1^2");
  CHECK_THROWS_AS(attached_sequence(ideal, {0}, MonomialOrder::lex(3)), PreconditionError);
  auto c4 = edge_ideal(cycle_graph(4));
  // x1x2 and x2x3 share x2
  CHECK_THROWS_AS(attached_sequence(c4, {0, 1}, MonomialOrder::lex(4)), PreconditionError);
}

TEST_CASE("two binomials sharing the factor x1 - x3") {
  auto ideal = ideal_of("x1*x2 - x2*x3, x1*x3 - x3^2");
  // The selection {x1x2, x3^2} needs w1 > w3 and w3 > w1.
  auto report = realizability_report(ideal, {true, false});
  CHECK_FALSE(report.feasible);
  CHECK(report.conflict == std::vector<std::size_t>{0, 1});
  CHECK(report.inequalities == std::vector<std::string>{"w1 > w3", "w3 > w1"});
  CHECK_FALSE(realizable_initial_selection(ideal, {true, false}));
  CHECK(realizable_initial_selection(ideal, {true, true}));

  // The ideal is (x1 - x3)(x2, x3), of height 1, so one generator suffices.
  CHECK(quotient_dimension(ideal, MonomialOrder::lex(3)) == 2);
  auto cert = koenig_graded(ideal);
  REQUIRE(cert);
  CHECK(cert->height() == 1);
  CHECK(cert->C.size() == 2);
}

TEST_CASE("binomial plus monomial") {
  auto ideal = ideal_of("x1*x2 - x4^2, x2*x3");
  CHECK(quotient_dimension(ideal, MonomialOrder::degrevlex(4)) == 2);
  CHECK_FALSE(koenig_graded(ideal, TermOrder(MonomialOrder::degrevlex(4))));
  // Choosing x4^2 makes the pair coprime; a lex order with x4 first realizes it.
  auto free = koenig_graded(ideal);
  REQUIRE(free);
  CHECK(sorted(free->initials) == sorted({mono({0, 1, 1, 0}), mono({0, 0, 0, 2})}));
}

TEST_CASE("unmixed, very well-covered and not of Koenig type") {
  auto ideal = ideal_of("x1*x2*x3, x1*x3*x4, x1*x4*x6, x3*x4*x5");
  CHECK(height_monomial(ideal) == 2);
  CHECK(is_unmixed(ideal));
  CHECK(very_well_covered_check(ideal));
  CHECK_FALSE(koenig_monomial(ideal));
  CHECK_FALSE(koenig_graded(ideal));
  CHECK_THROWS_AS(very_well_covered_check(ideal_of("x1*x2, x3")), PreconditionError);
}

TEST_CASE("cycle and path on four vertices") {
  auto c4 = edge_ideal(cycle_graph(4));
  auto cert = koenig_monomial(c4);
  REQUIRE(cert);
  CHECK(cert->initials == std::vector<Monomial>{mono({1, 1, 0, 0}), mono({0, 0, 1, 1})});
  CHECK(cert->C == std::vector<LinearForm>{LinearForm::diff(1, 0), LinearForm::diff(3, 2)});

  auto both = modify(c4, cert->C);
  CHECK(sorted(both.monomial_generators()) == sorted({mono({2, 0, 0, 0}), mono({1, 0, 1, 0}), mono({0, 0, 2, 0})}));
  auto one = modify(c4, {LinearForm::diff(1, 0)});
  CHECK(sorted(one.monomial_generators()) ==
        sorted({mono({2, 0, 0, 0}), mono({1, 0, 1, 0}), mono({0, 0, 1, 1}), mono({1, 0, 0, 1})}));
  CHECK(modify(c4, {}).generators == c4.generators);
  CHECK_FALSE(is_unmixed(one));

  auto ib = cm_test_IB(c4, *cert);
  CHECK_FALSE(ib.cohen_macaulay);
  REQUIRE(ib.failing_B);
  CHECK(*ib.failing_B == std::vector<LinearForm>{LinearForm::diff(1, 0)});
  auto mult = cm_test_multiplicity(c4, *cert, cert->order);
  CHECK(mult.multiplicity == 2);
  CHECK(mult.length == 3);
  CHECK(mult.verdict == MultiplicityVerdict::not_cohen_macaulay);
  CHECK_FALSE(reisner_cm_oracle(independence_complex(cycle_graph(4))));

  auto p4 = edge_ideal(path_graph(4));
  auto pc = koenig_monomial(p4);
  REQUIRE(pc);
  CHECK(cm_test_IB(p4, *pc).cohen_macaulay);
  auto pm = cm_test_multiplicity(p4, *pc, pc->order);
  CHECK(pm.multiplicity == 3);
  CHECK(pm.length == 3);
  CHECK(pm.verdict == MultiplicityVerdict::cohen_macaulay);
  CHECK(reisner_cm_oracle(independence_complex(path_graph(4))));
  CHECK(very_well_covered_check(p4));
}

TEST_CASE("a single edge") {
  auto k2 = edge_ideal(complete_graph(2));
  auto cert = koenig_monomial(k2);
  REQUIRE(cert);
  CHECK(cm_test_IB(k2, *cert).cohen_macaulay);
  auto m = cm_test_multiplicity(k2, *cert, cert->order);
  CHECK(m.multiplicity == 2);
  CHECK(m.length == 2);
  CHECK(very_well_covered_check(k2));
}

TEST_CASE("sequences that are not parameters") {
  auto ideal = ideal_of("x1*x2 + 0*x3");
  auto m = cm_test_multiplicity(ideal, {LinearForm::var(0)}, MonomialOrder::lex(3));
  CHECK(m.verdict == MultiplicityVerdict::not_parameters);
  CHECK_FALSE(m.length);
}

TEST_CASE("linkage on the four-cycle") {
  auto c4 = edge_ideal(cycle_graph(4));
  auto matching = parse_ideal("x1*x2, x3*x4", {"x1", "x2", "x3", "x4"});
  auto link = unmixed_part_via_linkage(c4, matching);
  CHECK(link.colon == std::vector<PrimeComponent>{prime({0, 3}), prime({1, 2})});
  CHECK(link.unmixed == std::vector<PrimeComponent>{prime({0, 2}), prime({1, 3})});
  auto colon = sorted(intersect_variable_primes(4, link.colon));
  CHECK(colon == sorted({mono({1, 1, 0, 0}), mono({1, 0, 1, 0}), mono({0, 1, 0, 1}), mono({0, 0, 1, 1})}));

  auto same = unmixed_part_via_linkage(link.unmixed, link.unmixed);
  CHECK(same.colon.empty());
  CHECK(intersect_variable_primes(4, {}) == std::vector<Monomial>{Monomial(4)});
}

TEST_CASE("property: certificates on random binomial ideals") {
  std::mt19937 rng(99);
  int found = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
    auto ideal = testing::random_binomial_ideal(rng, n);
    CAPTURE(to_string(ideal));
    TermOrder order = MonomialOrder::with_priority(OrderKind::degrevlex, testing::random_priority(rng, n));
    const auto gb = buchberger(ideal, order);
    if (gb.is_unit()) continue;
    const std::size_t dim = quotient_dimension(gb);

    if (auto cert = koenig_graded(ideal, order)) {
      ++found;
      CHECK(cert->height() == n - dim);
      CHECK(cert->C.size() == dim);
      CHECK(monomials_regular_sequence(cert->initials));
      // The initial ideal inherits the property.
      CHECK(koenig_monomial(initial_ideal(gb)));
    }

    // Random selections: any witness separates every pair.
    TermSelection choice(ideal.generators.size());
    for (std::size_t i = 0; i < choice.size(); ++i) choice[i] = (rng() & 1U) != 0;
    auto report = realizability_report(ideal, choice);
    if (report.feasible) {
      REQUIRE(report.witness);
      for (std::size_t i = 0; i < choice.size(); ++i) {
        const auto& g = ideal.generators[i];
        if (!g.trail()) continue;
        const Monomial& chosen = choice[i] ? g.lead() : *g.trail();
        const Monomial& other = choice[i] ? *g.trail() : g.lead();
        CHECK(TermOrder(*report.witness).greater(chosen, other));
        std::int64_t diff = 0;
        for (std::size_t v = 0; v < n; ++v)
          diff += report.witness->weights[v] * (static_cast<std::int64_t>(chosen[v]) - other[v]);
        CHECK(diff > 0);
      }
    } else {
      CHECK_FALSE(report.conflict.empty());
    }
  }
  CHECK(found > 20);
}

TEST_CASE("property: both CM tests agree with Reisner on monomial ideals") {
  std::mt19937 rng(5);
  int koenig_count = 0, cm_count = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 4);
    std::uniform_int_distribution<int> count(1, 5), deg(1, 3);
    std::vector<Monomial> gens;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) gens.push_back(testing::random_monomial(rng, n, static_cast<unsigned>(deg(rng))));
    auto ideal = monomial_ideal(n, gens);
    CAPTURE(to_string(ideal));
    auto cert = koenig_monomial(ideal);
    if (!cert) continue;
    ++koenig_count;
    CHECK(cert->C.size() == n - height_monomial(ideal));
    const auto pol = polarize(ideal);
    if (pol.ideal.num_vars > 14) continue;
    const bool reisner = reisner_cm_oracle(stanley_reisner_complex(pol.ideal));
    const bool ib = cm_test_IB(ideal, *cert).cohen_macaulay;
    const auto mult = cm_test_multiplicity(ideal, *cert, cert->order);
    CHECK(mult.verdict != MultiplicityVerdict::not_parameters);
    CHECK(ib == reisner);
    CHECK((mult.verdict == MultiplicityVerdict::cohen_macaulay) == reisner);
    if (reisner) ++cm_count;
    // Unmixed and of Koenig type forces the polarization to be very well-covered.
    const auto mins = ideal.monomial_generators();
    bool single_degree = std::all_of(mins.begin(), mins.end(), [&](const Monomial& g) {
      return g.degree() == mins.front().degree();
    });
    if (single_degree && is_unmixed(ideal)) CHECK(very_well_covered_check(ideal));
  }
  CHECK(koenig_count > 50);
  CHECK(cm_count > 10);
  CHECK(cm_count < koenig_count);
}
