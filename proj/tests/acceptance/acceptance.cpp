// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bnelim/dynamics.hpp"
#include "bnelim/igraph.hpp"
#include "bnelim/reduction.hpp"
#include "bnelim/verify.hpp"
#include "cli.hpp"
#include "oracles.hpp"

using namespace bnelim;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Appends a failed expectation to the outcome.
void expect(Outcome& o, bool condition, const std::string& what) {
  if (!condition) {
    o.ok = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

std::string models(const std::string& name) { return std::string(BNELIM_MODELS_DIR) + "/" + name; }

BooleanNetwork load(const std::string& name) {
  std::ifstream in(models(name));
  std::ostringstream text;
  text << in.rdbuf();
  return parse_network(text.str());
}

std::vector<std::vector<std::uint64_t>> state_sets(const BooleanNetwork& net) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& a : attractors(net)) {
    out.push_back(a.states);
  }
  return out;
}

std::uint64_t parse_state(const char* display) { return State::parse(display).bits(); }

Outcome small_example() {
  Outcome o;
  const auto r = eliminate(load("small_example.bnet"), "x2");
  expect(o, same_tables(r.reduced, parse_network("x1, !x1\nx3, x3")), "reduced network differs from (!x1, x3)");
  const std::vector<std::vector<std::uint64_t>> expected{{parse_state("00"), parse_state("10")},
                                                         {parse_state("01"), parse_state("11")}};
  expect(o, state_sets(r.reduced) == expected, "reduced attractors differ from {00,10},{01,11}");
  if (o.ok) {
    o.detail = "f~ = (!x1, x3); attractors {00,10} {01,11}";
  }
  return o;
}

Outcome forward() {
  Outcome o;
  const auto net = load("forward.bnet");
  const auto full = attractors(net);
  const auto reduced = attractors(eliminate(net, "v").reduced);
  expect(o, full.size() == 1 && full[0].states.size() == 8, "original is not one 8-state attractor");
  expect(o, reduced.size() == 2, "reduced attractor count " + std::to_string(reduced.size()));
  expect(o, !attractors_preserved(net, *net.index_of("v")).preserved, "attractors_preserved returned true");
  if (o.ok) {
    o.detail = "1 attractor (8 states) -> 2 attractors; not preserved";
  }
  return o;
}

Outcome strictness() {
  Outcome o;
  const auto fixed = load("strict_fixed.bnet");
  const auto c = census(fixed);
  const auto c_reduced = census(eliminate(fixed, "x2").reduced);
  expect(o, c.fixed_points == 0 && c.two_state_by_component[1] == 1, "census of (1, !x1|!x2) is not S=0, A(f,2)=1");
  expect(o, c_reduced.fixed_points == c.fixed_points + c.two_state_by_component[1] && c_reduced.fixed_points == 1,
         "S(f~) != S(f) + A(f,v) = 1");

  const auto rotation = load("strict_two.bnet");
  const auto r = census(rotation);
  const auto r_reduced = census(eliminate(rotation, "x2").reduced);
  expect(o, r.two_state_by_component[0] == 0 && r_reduced.two_state_by_component[0] == 1,
         "A(f~,1)=1 > A(f,1)=0 not reproduced");

  const auto fwd = load("forward.bnet");
  const auto before = census(fwd).total();
  const auto after = census(eliminate(fwd, "v").reduced).total();
  expect(o, before < after, "S+A not strictly larger after eliminating v");
  if (o.ok) {
    o.detail = "S(f~)=1=0+1; A(f~,1)=1>A(f,1)=0 (A(f)=" + std::to_string(r.cyclic) + "); S+A " +
               std::to_string(before) + "<" + std::to_string(after);
  }
  return o;
}

Outcome negative_loop_and_edge_loss() {
  Outcome o;
  const auto net = load("neg_loop.bnet");
  const auto reduced = eliminate(net, "x2").reduced;
  expect(o, same_tables(reduced, parse_network("x1, !x1")), "neg-loop reduction is not !x1");
  const auto h = global_interaction_graph(reduced);
  const auto g = global_interaction_graph(net);
  expect(o, h.has_edge(0, 0, Sign::negative), "no negative loop at x1 in G(f~)");
  expect(o, !has_signed_path(g, 0, 0, Sign::negative), "G(f) has a negative cycle through x1");
  const auto loss = eliminate(load("edge_loss.bnet"), "x2").reduced;
  expect(o, same_tables(loss, parse_network("x1, 0")), "edge-loss reduction is not constant 0");
  if (o.ok) {
    o.detail = "f~ = !x1 with -1 loop, no negative cycle through x1 in G(f); edge-loss -> 0";
  }
  return o;
}

Outcome chain() {
  Outcome o;
  std::string report;
  for (unsigned n : {1u, 2u}) {
    const auto net = chain_counterexample(n);
    const auto found = attractors(net);
    expect(o, found.size() == 1 && found[0].states == std::vector<std::uint64_t>{State::ones(net.size()).bits()},
           "chain(" + std::to_string(n) + ") does not have the unique attractor {1}");
    report += (report.empty() ? "" : " | ") + std::string("n=") + std::to_string(n) + ":";
    for (unsigned i = 1; i <= n + 1; ++i) {
      const std::string name = "v" + std::to_string(i);
      const auto reduced = eliminate(net, name).reduced;
      const TransitionGraph stg(reduced);
      const auto c = census(attractors(stg), reduced.size());
      const auto reach = reachable(stg, 0);
      const bool one_reached = std::binary_search(reach.begin(), reach.end(), State::ones(reduced.size()).bits());
      expect(o, c.total() >= 2, "eliminating " + name + " leaves " + std::to_string(c.total()) + " attractor(s)");
      expect(o, !one_reached, "1 reachable from 0 after eliminating " + name);
      report += " " + name + "(S=" + std::to_string(c.fixed_points) + ",A=" + std::to_string(c.cyclic) + ")";
    }
  }
  if (o.ok) {
    o.detail = report;
  }
  return o;
}

const std::set<std::string>& required_statements() {
  static const std::set<std::string> ids{
      "Lemma2.i",           "Lemma2.ii",          "Lemma2.iii",         "Lemma2.iv",
      "Thm.fixed-points.i", "Thm.fixed-points.ii", "Thm.fixed-points.iii", "Thm.fixed-points.iv",
      "Thm.fixed-points.v", "Thm.fixed-points.vi", "Cor.i",              "Cor.ii",
      "Cor.iii",            "Prop.ig-neg-loop",   "Prop.ig-pos-loop",   "Prop.edges-in-ig",
      "Prop.ig"};
  return ids;
}

std::optional<SuiteSummary> suite_cache;

const SuiteSummary& suite() {
  if (!suite_cache) {
    suite_cache = run_property_suite(SuiteOptions{});
  }
  return *suite_cache;
}

Outcome property_suite() {
  Outcome o;
  const auto& summary = suite();
  std::map<std::string, unsigned> required, other;
  std::map<std::string, std::string> first;
  for (const auto& f : summary.failures) {
    auto& bucket = required_statements().count(f.statement) ? required : other;
    ++bucket[f.statement];
    if (!first.count(f.statement)) {
      first[f.statement] = f.fingerprint + " " + (f.witness.empty() ? "" : f.witness[0]);
    }
  }
  expect(o, summary.networks >= 500, "only " + std::to_string(summary.networks) + " networks");
  std::string counts;
  for (const auto& [id, count] : required) {
    counts += (counts.empty() ? "" : ", ") + id + " failed on " + std::to_string(count) + " (first " + first[id] + ")";
  }
  expect(o, required.empty(), counts);
  std::string info = std::to_string(summary.networks) + " networks, " + std::to_string(summary.checks) + " checks";
  for (const auto& [id, count] : other) {
    info += "; also " + id + " failed on " + std::to_string(count) + " (not part of this criterion)";
  }
  o.detail = o.ok ? info : o.detail + " | " + info;
  return o;
}

Outcome pfvs_bound() {
  Outcome o;
  const auto& summary = suite();
  const auto violations = std::count_if(summary.failures.begin(), summary.failures.end(),
                                        [](const CheckReport& r) { return r.statement == "Thm.bound-attrs"; });
  expect(o, violations == 0, std::to_string(violations) + " bound violations");
  expect(o, summary.tight_bounds >= 1, "no tight instance in the suite");
  const auto toggle = load("toggle.bnet");
  const auto pfvs = minimum_pfvs(global_interaction_graph(toggle));
  const auto count = attractors(toggle).size();
  expect(o, pfvs.size() == 1 && count == 2, "toggle is not tight (2 attractors, PFVS size 1)");
  if (o.ok) {
    o.detail = "0 violations; " + std::to_string(summary.tight_bounds) + " tight instances, e.g. " +
               summary.tight_examples.front() + "; toggle: 2 attractors = 2^1";
  }
  return o;
}

Outcome shaped_suite() {
  Outcome o;
  const auto summary = run_shape_suite(200, 1, 7);
  expect(o, summary.networks >= 200, "only " + std::to_string(summary.networks) + " networks");
  for (const auto& f : summary.failures) {
    expect(o, false, f.statement + " " + f.fingerprint + " " + f.detail);
  }
  if (o.ok) {
    o.detail = std::to_string(summary.networks) + " shaped networks, all preserved";
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const SuiteOptions options;
  unsigned compared = 0;
  for (unsigned k = 0; k < options.networks; ++k) {
    const auto instance = suite_instance(options, k);
    if (instance.net.size() > 4) {
      continue;
    }
    auto found = state_sets(instance.net);
    std::sort(found.begin(), found.end());
    expect(o, found == oracle::minimal_trap_sets(instance.net), "mismatch on " + instance.fingerprint);
    ++compared;
  }
  expect(o, compared > 0, "no networks with n <= 4");
  if (o.ok) {
    o.detail = std::to_string(compared) + " networks with n <= 4 agree";
  }
  return o;
}

int cli(const std::vector<std::string>& args, const std::string& input, std::string& out) {
  std::istringstream in(input);
  std::ostringstream o, e;
  const int code = cli::run_cli(args, in, o, e);
  out = o.str();
  return code;
}

Outcome cli_contract() {
  Outcome o;
  unsigned files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(BNELIM_MODELS_DIR)) {
    const std::string path = entry.path().string();
    std::string once, twice;
    const int a = cli({"reduce", "--max-components", "25", "--format", "text", path}, "", once);
    const int b = cli({"reduce", "--max-components", "25", "--format", "text", "-"}, once, twice);
    expect(o, a == 0 && b == 0 && once == twice, "render is not a fixpoint for " + path);
    Limits wide;
    wide.max_table_components = 25;
    std::ifstream in(path);
    std::ostringstream text;
    text << in.rdbuf();
    expect(o, a == 0 && same_tables(parse_network(text.str(), wide), parse_network(once, wide)),
           "tables change after render for " + path);
    ++files;
  }
  std::string ignored;
  const int parse = cli({"attractors", "-"}, "a, b &\n", ignored);
  const int cap = cli({"attractors", models("large25.bnet")}, "", ignored);
  const int forbidden = cli({"reduce", models("identity.bnet"), "--eliminate", "x1"}, "", ignored);
  expect(o, parse == cli::kExitInput, "parse error exit " + std::to_string(parse));
  expect(o, cap == cli::kExitCap, "cap exit " + std::to_string(cap));
  expect(o, forbidden == cli::kExitForbidden, "forbidden exit " + std::to_string(forbidden));
  if (o.ok) {
    o.detail = std::to_string(files) + " model files round-trip; exit codes 2/3/4 observed";
  }
  return o;
}

struct Criterion {
  unsigned id;
  const char* title;
  double seconds;  // time limit; 0 for none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "small example elimination", 1, small_example},
      {2, "forward example", 1, forward},
      {3, "strictness triple", 1, strictness},
      {4, "negative loop and edge loss", 1, negative_loop_and_edge_loss},
      {5, "chain construction", 10, chain},
      {6, "property suite", 300, property_suite},
      {7, "PFVS bound", 0, pfvs_bound},
      {8, "shape theorem", 300, shaped_suite},
      {9, "oracle equivalence", 0, oracle_equivalence},
      {10, "CLI contract", 0, cli_contract},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.seconds > 0 && elapsed > c.seconds) {
      expect(outcome, false, "took " + std::to_string(elapsed) + " s");
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", elapsed);
    std::cout << (outcome.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << ", " << timing
              << "): " << outcome.detail << std::endl;
    failed += outcome.ok ? 0 : 1;
  }
  return failed;
}
