#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
  nlohmann::json results() const { return json().at("results"); }
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + KOENIG_CLI + std::string(" ") + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const char* name) { return std::string(KOENIG_DATA) + "/" + name; }

}  // namespace

TEST_CASE("ideal command") {
  SUBCASE("two binomials with a common factor") {
    auto r = run("ideal " + data("two_binomials.txt") + " --action koenig");
    REQUIRE(r.status == 0);
    auto res = r.results();
    CHECK(res["height"] == 1);
    CHECK(res["koenig"] == true);
    CHECK(r.json()["command"] == "ideal");
  }
  SUBCASE("degrevlex basis") {
    auto r = run("ideal " + data("binomial_and_monomial.txt") + " --action gb --order degrevlex");
    REQUIRE(r.status == 0);
    CHECK(r.results()["initial_ideal"] == nlohmann::json({"x1*x2", "x2*x3", "x3*x4^2"}));
  }
  SUBCASE("both variable priorities") {
    auto a = run("ideal " + data("one_binomial.txt") + " --action koenig --order lex --priority 1,2");
    REQUIRE(a.status == 0);
    CHECK(a.results()["certificate"]["initials"] == nlohmann::json({"x1*x2"}));
    CHECK(a.results()["certificate"]["C"] == nlohmann::json({"x2 - x1"}));
    auto b = run("ideal " + data("one_binomial.txt") + " --action koenig --order lex --priority 2,1");
    REQUIRE(b.status == 0);
    CHECK(b.results()["certificate"]["initials"] == nlohmann::json({"x2^2"}));
    CHECK(b.results()["certificate"]["C"] == nlohmann::json({"x1"}));
  }
  SUBCASE("hilbert function and dimension") {
    auto h = run("ideal " + data("one_binomial.txt") + " --action hilbert 4");
    REQUIRE(h.status == 0);
    CHECK(h.results()["hilbert_function"] == nlohmann::json({1, 2, 2, 2, 2}));
  }
  SUBCASE("not of Koenig type") {
    auto r = run("ideal " + data("not_koenig_unmixed.txt") + " --action koenig");
    REQUIRE(r.status == 0);
    CHECK(r.results()["koenig"] == false);
    CHECK(run("ideal " + data("not_koenig_unmixed.txt") + " --action cm").status == 4);
  }
}

TEST_CASE("graph command") {
  auto g1 = run("graph " + data("seven_vertices.txt") + " --action binomial-report");
  REQUIRE(g1.status == 0);
  auto r1 = g1.results();
  CHECK(r1["dim"] == 9);
  CHECK(r1["koenig"] == true);
  CHECK(r1["traceable"] == false);
  CHECK(r1["unmixed"] == false);
  CHECK(r1["max_semipath"]["paths"] == nlohmann::json::parse("[[1,2,3,4,5,6]]"));

  auto g2 = run("graph " + data("six_vertices.txt") + " --action binomial-report");
  REQUIRE(g2.status == 0);
  auto r2 = g2.results();
  CHECK(r2["dim"] == 7);
  CHECK(r2["max_semipath"]["length"] == 4);
  CHECK(r2["koenig"] == false);

  auto p4 = run("graph " + data("p4.txt") + " --action edge-report");
  REQUIRE(p4.status == 0);
  CHECK(p4.results()["cohen_macaulay"] == true);
  CHECK(p4.results()["type"] == 2);
  CHECK(p4.results()["regularity"] == 1);

  auto c4 = run("graph " + data("c4.txt") + " --action edge-report");
  REQUIRE(c4.status == 0);
  CHECK(c4.results()["alpha"] == 2);
  CHECK(c4.results()["g0_faces"] == 3);
  CHECK(run("graph " + data("c4.txt") + " --action canonical").status == 4);
}

TEST_CASE("poset command") {
  auto c = run("poset " + data("four_element_poset.json") + " --action canonical");
  REQUIRE(c.status == 0);
  CHECK(c.results()["intersection"] == nlohmann::json({"x2*x3", "x3*x7", "x4", "x6*x7"}));

  auto b3 = run("poset " + data("antichain3.json") + " --action koenig");
  REQUIRE(b3.status == 0);
  auto r = b3.results();
  CHECK(r["revlex"] == false);
  CHECK(r["bound_holds"] == true);
  auto lex = r["lex_certificate"].get<std::vector<std::string>>();
  std::sort(lex.begin(), lex.end());
  CHECK(lex == std::vector<std::string>{"x1*x5", "x2*x7", "x3*x6", "x4*x8"});

  auto s = run("poset --action segre 4 3");
  REQUIRE(s.status == 0);
  CHECK(s.results()["koenig"] == false);
  CHECK(run("poset --action segre 2 3").results()["koenig"] == true);
}

TEST_CASE("reruns are byte-identical") {
  for (const std::string& args : {"ideal " + data("binomial_and_monomial.txt") + " --action gb",
                                 "graph " + data("seven_vertices.txt") + " --action binomial-report",
                                 "poset " + data("four_element_poset.json") + " --action canonical"}) {
    auto a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.json().contains("timings"));
  }
  CHECK(run("ideal " + data("two_binomials.txt") + " --action gb --timings").json().contains("timings"));
}

TEST_CASE("exit codes") {
  CHECK(run("ideal " + data("missing.txt") + " --action dim").status == 2);
  CHECK(run("ideal " + data("c4.txt") + " --action dim").status == 2);
  CHECK(run("ideal " + data("one_binomial.txt") + " --action koenig --order lex --priority 1,1").status == 2);
  CHECK(run("--no-such-flag").status == 2);
  CHECK(run("graph " + data("seven_vertices.txt") + " --action binomial-report", "KOENIG_BUDGET=0.000001").status == 3);
  CHECK(run("poset --action segre 1 3").status == 4);
}
