// koenig: command-line front end. Every command prints one JSON report with
// sorted keys on stdout.
//
//   koenig ideal FILE --action koenig|gb|hilbert D|dim|cm [--order lex|degrevlex] [--priority 2,1,3]
//   koenig graph FILE --action edge-report|canonical|binomial-report|canonical-binomial
//   koenig poset FILE --action lattice|koenig|canonical
//   koenig poset --action segre N M
//
// Exit codes: 0 success, 2 parse error, 3 budget exceeded, 4 precondition violated.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "koenig/binomial_edge.hpp"
#include "koenig/errors.hpp"
#include "koenig/graph.hpp"
#include "koenig/groebner.hpp"
#include "koenig/hibi.hpp"
#include "koenig/koenig.hpp"

using nlohmann::json;
using namespace koenig;

namespace {

struct Options {
  std::string file;
  std::vector<std::string> action;
  std::string order;
  std::string priority;
  std::string names;
  bool timings = false;
};

std::string read_input(const std::string& file) {
  if (file.empty()) throw ParseError("no input file given");
  if (file == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(file);
  if (!in) throw ParseError("cannot read '" + file + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::size_t parse_count(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ParseError(std::string("expected a non-negative integer for ") + what + ", got '" + s + "'");
  }
}

void require_arity(const std::vector<std::string>& action, std::size_t n) {
  if (action.size() != n)
    throw ParseError("action '" + action.front() + "' takes " + std::to_string(n - 1) + " argument(s)");
}

std::optional<TermOrder> order_from(const Options& o, std::size_t n) {
  if (o.order.empty() && o.priority.empty()) return std::nullopt;
  OrderKind kind = OrderKind::degrevlex;
  if (o.order == "lex") kind = OrderKind::lex;
  else if (!o.order.empty() && o.order != "degrevlex") throw ParseError("unknown order '" + o.order + "'");
  std::vector<VarIndex> prio;
  if (o.priority.empty()) {
    for (std::size_t i = 0; i < n; ++i) prio.push_back(i);
  } else {
    for (const auto& tok : split_list(o.priority)) {
      auto v = parse_count(tok, "--priority");
      if (v == 0 || v > n) throw ParseError("--priority entry " + tok + " out of range");
      prio.push_back(v - 1);
    }
  }
  try {
    return MonomialOrder::with_priority(kind, std::move(prio));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("--priority: ") + e.what());
  }
}

std::vector<std::string> strings(const std::vector<Monomial>& ms, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(to_string(m, names));
  return out;
}

std::vector<std::string> strings(const std::vector<Binomial>& fs, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(to_string(f, names));
  return out;
}

std::vector<std::string> strings(const std::vector<LinearForm>& ls, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& l : ls) out.push_back(to_string(l, names));
  return out;
}

json one_based(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (auto x : v) out.push_back(x + 1);
  return out;
}

json one_based(const std::vector<std::vector<std::size_t>>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(one_based(v));
  return out;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (auto [a, b] : edges) out.push_back({a + 1, b + 1});
  return out;
}

json multiplicity_json(const MultiplicityReport& r) {
  return {{"multiplicity", r.multiplicity},
          {"length", r.length ? json(*r.length) : json(nullptr)},
          {"verdict", to_string(r.verdict)}};
}

// ideal ---------------------------------------------------------------------------

IdealPresentation load_ideal(const Options& o) {
  const std::string text = read_input(o.file);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return json::parse(text).get<IdealPresentation>();
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("ideal JSON: ") + e.what(), e.byte);
    } catch (const json::exception& e) {
      throw ParseError(std::string("ideal JSON: ") + e.what());
    }
  }
  auto names = o.names.empty() ? infer_variable_names(text) : split_list(o.names);
  return parse_ideal(text, names);
}

json run_ideal(const Options& o, json& input) {
  const auto ideal = load_ideal(o);
  input = ideal;
  input["text"] = to_string(ideal);
  const auto order = order_from(o, ideal.num_vars);
  const TermOrder dflt = order ? *order : TermOrder(MonomialOrder::degrevlex(ideal.num_vars));
  const auto& action = o.action;
  json r;
  if (action.front() == "koenig" || action.front() == "cm") {
    require_arity(action, 1);
    const auto cert = koenig_graded(ideal, order);
    r["koenig"] = cert.has_value();
    r["certificate"] = cert ? certificate_json(*cert, ideal.names) : json(nullptr);
    r["height"] = ideal.num_vars - quotient_dimension(ideal, dflt);
    if (action.front() == "cm") {
      if (!cert) throw PreconditionError("the ideal is not of König type");
      const auto mult = cm_test_multiplicity(ideal, *cert, cert->order);
      r["multiplicity_test"] = multiplicity_json(mult);
      if (ideal.is_monomial()) {
        const auto ib = cm_test_IB(ideal, *cert);
        r["modification_test"] = {{"cohen_macaulay", ib.cohen_macaulay},
                                  {"failing_B", ib.failing_B ? json(strings(*ib.failing_B, ideal.names)) : json(nullptr)},
                                  {"subsets_checked", ib.subsets_checked}};
      }
    }
  } else if (action.front() == "gb") {
    require_arity(action, 1);
    const auto gb = buchberger(ideal, dflt);
    r["order"] = order_json(dflt, ideal.names);
    r["groebner_basis"] = strings(gb.elements, ideal.names);
    r["initial_ideal"] = strings(minimal_monomials(gb.initial_terms()), ideal.names);
    r["stats"] = {{"s_pairs", gb.stats.s_pairs},
                  {"skipped_coprime", gb.stats.skipped_coprime},
                  {"reductions", gb.stats.reductions},
                  {"added", gb.stats.added}};
  } else if (action.front() == "hilbert") {
    require_arity(action, 2);
    const auto d = parse_count(action[1], "hilbert");
    r["order"] = order_json(dflt, ideal.names);
    r["hilbert_function"] = hilbert_function(ideal, dflt, d);
  } else if (action.front() == "dim") {
    require_arity(action, 1);
    const auto gb = buchberger(ideal, dflt);
    if (gb.is_unit()) {
      r["unit_ideal"] = true;
    } else {
      const auto dim = quotient_dimension(gb);
      r["unit_ideal"] = false;
      r["dimension"] = dim;
      r["height"] = ideal.num_vars - dim;
      r["zero_dimensional"] = dim == 0;
      if (dim == 0) r["length"] = quotient_length(gb);
    }
  } else {
    throw ParseError("unknown ideal action '" + action.front() + "'");
  }
  return r;
}

// graph ---------------------------------------------------------------------------

json run_graph(const Options& o, json& input) {
  const auto g = parse_graph(read_input(o.file));
  input = graph_json(g);
  const auto& action = o.action;
  require_arity(action, 1);
  json r;
  if (action.front() == "edge-report") {
    if (!is_koenig(g)) {
      r = {{"matching_number", matching_number(g)}, {"tau", tau(g)}, {"koenig", false}};
      return r;
    }
    const auto rep = koenig_cm_report(g);
    r["matching_number"] = rep.matching_number;
    r["tau"] = rep.tau;
    r["koenig"] = rep.koenig;
    r["alpha"] = rep.alpha;
    r["g0_faces"] = rep.faces;
    r["cohen_macaulay"] = rep.cohen_macaulay;
    r["type"] = rep.type ? json(*rep.type) : json(nullptr);
    r["regularity"] = rep.regularity ? json(*rep.regularity) : json(nullptr);
    r["matching"] = edges_json(rep.matching);
    r["g0"] = {{"graph", graph_json(rep.g0.graph)}, {"labels", one_based(rep.g0.labels)}};
  } else if (action.front() == "canonical") {
    const auto cm = canonical_module_edge(g);
    const auto names = default_variable_names(g.num_vertices());
    r["matching"] = edges_json(cm.matching);
    r["H"] = graph_json(cm.H);
    r["covers"] = one_based(cm.covers);
    r["generators"] = strings(cm.generators, names);
    r["type"] = cm.type;
  } else if (action.front() == "binomial-report") {
    const std::size_t n = g.num_vertices();
    const auto names = binomial_edge_names(n);
    r["dim"] = dim_quotient(g);
    r["unmixed"] = is_unmixed_JG(g);
    json cuts = json::array();
    for (const auto& c : cut_sets(g))
      cuts.push_back({{"T", one_based(c.T)}, {"components", c.components}, {"height", c.height}});
    r["cut_sets"] = cuts;
    const auto sp = max_semipath(g);
    r["max_semipath"] = {{"length", sp.length}, {"paths", one_based(sp.paths)}};
    const auto cert = koenig_JG(g);
    r["koenig"] = cert.has_value();
    r["certificate"] = cert ? certificate_json(*cert, names) : json(nullptr);
    const auto trace = is_traceable(g);
    r["traceable"] = trace.has_value();
    r["hamiltonian_paths"] = trace ? one_based(*trace) : json(nullptr);
    if (cert) {
      const auto sop = special_sop_JG(g, spanning_components(n, sp));
      r["sop"] = {{"forms", strings(sop.forms, names)},
                  {"zero_dimensional", sop.zero_dimensional},
                  {"length", sop.length ? json(*sop.length) : json(nullptr)}};
      r["cm"] = multiplicity_json(cm_verdict_JG(g));
    } else {
      r["sop"] = nullptr;
      r["cm"] = nullptr;
    }
  } else if (action.front() == "canonical-binomial") {
    const auto cc = canonical_components_JG(g);
    auto labels = [](const std::vector<PrimeComponent>& ps) {
      std::vector<std::string> out;
      for (const auto& p : ps) out.push_back(p.label);
      return out;
    };
    r["path"] = one_based(cc.path);
    r["components"] = labels(cc.components);
    r["irredundant"] = labels(cc.irredundant);
  } else {
    throw ParseError("unknown graph action '" + action.front() + "'");
  }
  return r;
}

// poset ---------------------------------------------------------------------------

json koenig_hibi_json(const DistributiveLattice& l) {
  const auto rep = koenig_hibi(l);
  const auto bound = koenig_bound(l);
  const auto names = hibi_names(l.size());
  json r;
  r["thin"] = rep.thin;
  r["bipartite_incom"] = rep.bipartite_incom;
  r["revlex"] = rep.koenig_revlex;
  r["koenig"] = rep.koenig_revlex;
  r["height"] = rep.height;
  r["witness"] = rep.witness ? certificate_json(*rep.witness, names) : json(nullptr);
  r["bound"] = {{"size", bound.size}, {"join_irreducibles", bound.join_irreducibles}};
  r["bound_holds"] = bound.holds;
  const bool b3 = l.size() == 8 && l.base().size() == 3 && l.base().covers().empty();
  if (b3) {
    const auto cert = koenig_b3_lex(l);
    r["lex_certificate"] = cert ? json(strings(cert->initials, names)) : json(nullptr);
    r["lex_certificate_detail"] = cert ? certificate_json(*cert, names) : json(nullptr);
  }
  return r;
}

json run_poset(const Options& o, json& input) {
  const auto& action = o.action;
  json r;
  if (action.front() == "segre") {
    require_arity(action, 3);
    const auto n = parse_count(action[1], "segre n");
    const auto m = parse_count(action[2], "segre m");
    const auto l = segre_lattice(n, m);
    input = {{"segre", {n, m}}};
    r = koenig_hibi_json(l);
    r["n"] = n;
    r["m"] = m;
    r["size"] = l.size();
    return r;
  }
  const auto p = parse_poset(read_input(o.file));
  input = poset_json(p);
  require_arity(action, 1);
  const auto l = poset_ideals(p);
  const auto names = hibi_names(l.size());
  if (action.front() == "lattice") {
    r["lattice"] = lattice_json(l);
    r["pure"] = is_pure(p);
    r["thin"] = is_thin(p).thin;
    r["hibi_generators"] = strings(hibi_ideal(l).ideal.generators, names);
    r["incomparability_graph"] = graph_json(incomparability_graph(p));
  } else if (action.front() == "koenig") {
    r = koenig_hibi_json(l);
  } else if (action.front() == "canonical") {
    const auto adm = cells_and_admissible_sets(l);
    const auto cm = canonical_module_hibi(l);
    json cells = json::array();
    for (const auto& c : adm.cells) cells.push_back(one_based(std::vector<std::size_t>{c.bottom, c.alpha, c.beta, c.top}));
    r["labels"] = lattice_json(l)["elements"];
    r["cells"] = cells;
    r["admissible_sets"] = one_based(adm.sets);
    r["height"] = cm.height;
    std::vector<std::string> surviving;
    for (const auto& s : cm.surviving) surviving.push_back(s.label);
    r["surviving"] = surviving;
    r["intersection"] = cm.intersection ? json(strings(*cm.intersection, names)) : json(nullptr);
  } else {
    throw ParseError("unknown poset action '" + action.front() + "'");
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded ideals of König type: certificates, Cohen-Macaulay tests, canonical modules"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub, bool file_required) {
    auto* f = sub->add_option("file", o.file, "input file, '-' for stdin");
    if (file_required) f->required();
    sub->add_option("--action", o.action, "analysis to run, with its arguments")->required()->expected(1, 3);
    sub->add_flag("--timings", o.timings, "include wall-clock timings");
  };
  auto* ideal = app.add_subcommand("ideal", "binomial or monomial ideal");
  add_common(ideal, true);
  ideal->add_option("--order", o.order, "lex or degrevlex");
  ideal->add_option("--priority", o.priority, "variables from highest to lowest, 1-based, comma separated");
  ideal->add_option("--names", o.names, "variable names, comma separated");
  auto* graph = app.add_subcommand("graph", "simple graph");
  add_common(graph, true);
  auto* poset = app.add_subcommand("poset", "finite poset");
  add_common(poset, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    json report;
    json input;
    if (ideal->parsed()) {
      report["command"] = "ideal";
      report["results"] = run_ideal(o, input);
    } else if (graph->parsed()) {
      report["command"] = "graph";
      report["results"] = run_graph(o, input);
    } else {
      report["command"] = "poset";
      report["results"] = run_poset(o, input);
    }
    report["input"] = input;
    report["action"] = o.action;
    report["budget_scale"] = budget_scale();
    if (o.timings) {
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      report["timings"] = {{"total_ms", ms}};
    }
    std::cout << report.dump(2) << '\n';
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
