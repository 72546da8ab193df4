#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "bnelim/dynamics.hpp"
#include "bnelim/errors.hpp"
#include "bnelim/igraph.hpp"
#include "bnelim/reduction.hpp"
#include "bnelim/verify.hpp"

#ifndef BNELIM_VERSION
#define BNELIM_VERSION "0.0.0"
#endif

namespace bnelim::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, json, dot };

struct Options {
  std::string file = "-";
  std::string format;
  unsigned max_components = 0;  // 0: keep the configured caps
  std::vector<std::string> eliminate;
  std::string var;
  bool suite = false;
  unsigned count = 500;
  std::uint64_t seed = 1;
  unsigned shaped = 0;
  unsigned chain_n = 1;
};

struct Input {
  std::string text;
  BooleanNetwork net;
  std::string fingerprint;
};

struct Failure {
  int code;
  std::string message;
};

Limits limits_for(const Options& o) {
  Limits limits = Limits::from_environment();
  if (o.max_components != 0) {
    limits.max_stg_components = o.max_components;
    limits.max_cycle_vertices = o.max_components;
    limits.max_table_components = std::max(limits.max_table_components, o.max_components);
  }
  return limits;
}

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Failure{kExitInput, "cannot read " + path};
  }
  buffer << file.rdbuf();
  return buffer.str();
}

Input load(const Options& o, const Limits& limits, std::istream& in) {
  std::string text = read_all(o.file, in);
  BooleanNetwork net = parse_network(text, limits);
  std::string fp = fingerprint(text);
  return {std::move(text), std::move(net), std::move(fp)};
}

Format format_of(const Options& o, Format fallback, std::initializer_list<Format> allowed) {
  Format f = fallback;
  if (o.format == "text") {
    f = Format::text;
  } else if (o.format == "json") {
    f = Format::json;
  } else if (o.format == "dot") {
    f = Format::dot;
  }
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
    throw Failure{kExitInput, "format " + o.format + " is not available for this command"};
  }
  return f;
}

Json header(const std::string& command, const std::string& fp) {
  Json j;
  j["tool"] = "bnelim";
  j["version"] = BNELIM_VERSION;
  j["command"] = command;
  j["fingerprint"] = fp;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> names_of(const BooleanNetwork& net, const std::vector<unsigned>& indices) {
  std::vector<std::string> out;
  for (unsigned k : indices) {
    out.push_back(net.name(k));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) {
    out += (out.empty() ? "" : sep) + p;
  }
  return out;
}

unsigned component(const BooleanNetwork& net, const std::string& name) {
  const auto k = net.index_of(name);
  if (!k) {
    throw InvalidArgument("unknown component " + name);
  }
  return *k;
}

Json report_json(const CheckReport& r) {
  return Json{{"statement", r.statement},
              {"fingerprint", r.fingerprint},
              {"passed", r.passed},
              {"witness", r.witness},
              {"detail", r.detail}};
}

std::string report_line(const CheckReport& r) {
  std::string line = (r.passed ? "PASS " : "FAIL ") + r.statement;
  if (!r.detail.empty()) {
    line += "  " + r.detail;
  }
  if (!r.witness.empty()) {
    line += "  [" + join(r.witness, "; ") + "]";
  }
  if (!r.fingerprint.empty()) {
    line += "  (" + r.fingerprint + ")";
  }
  return line + "\n";
}

// Each command returns its exit code and fills `out`.

int cmd_attractors(const Options& o, std::istream& in, std::string& out) {
  const Limits limits = limits_for(o);
  const Input input = load(o, limits, in);
  const auto found = attractors(input.net, limits);
  const auto c = census(found, input.net.size());
  const unsigned n = input.net.size();
  if (format_of(o, Format::json, {Format::json, Format::text}) == Format::text) {
    std::ostringstream s;
    s << "S=" << c.fixed_points << " A=" << c.cyclic << "\n";
    for (unsigned i = 0; i < n; ++i) {
      s << "A(" << input.net.name(i) << ")=" << c.two_state_by_component[i] << (i + 1 < n ? " " : "\n");
    }
    for (const auto& a : found) {
      s << (a.is_fixed_point() ? "fixed " : "cyclic");
      for (auto x : a.states) {
        s << " " << bits::display(x, n);
      }
      s << "\n";
    }
    out = s.str();
    return kExitOk;
  }
  Json j = header("attractors", input.fingerprint);
  j["components"] = input.net.names();
  Json list = Json::array();
  for (const auto& a : found) {
    std::vector<std::string> states;
    for (auto x : a.states) {
      states.push_back(bits::display(x, n));
    }
    list.push_back(Json{{"kind", a.is_fixed_point() ? "fixed" : "cyclic"}, {"states", states}});
  }
  j["attractors"] = list;
  j["S"] = c.fixed_points;
  j["A"] = c.cyclic;
  Json per = Json::object();
  for (unsigned i = 0; i < n; ++i) {
    per[input.net.name(i)] = c.two_state_by_component[i];
  }
  j["A_i"] = per;
  out = dump(j);
  return kExitOk;
}

int cmd_fixed_points(const Options& o, std::istream& in, std::string& out) {
  const Limits limits = limits_for(o);
  const Input input = load(o, limits, in);
  std::vector<std::string> states;
  for (const auto& x : fixed_points(input.net, limits)) {
    states.push_back(x.to_string());
  }
  if (format_of(o, Format::json, {Format::json, Format::text}) == Format::text) {
    out = states.empty() ? std::string() : join(states, "\n") + "\n";
    return kExitOk;
  }
  Json j = header("fixed-points", input.fingerprint);
  j["components"] = input.net.names();
  j["fixed_points"] = states;
  out = dump(j);
  return kExitOk;
}

int cmd_reduce(const Options& o, std::istream& in, std::string& out) {
  const Limits limits = limits_for(o);
  const Input input = load(o, limits, in);
  for (const auto& name : o.eliminate) {
    component(input.net, name);
  }
  const ReductionChain chain = eliminate_sequence(input.net, o.eliminate);
  const auto map = chain.index_map();
  const BooleanNetwork& result = chain.result();
  if (format_of(o, Format::json, {Format::json, Format::text}) == Format::text) {
    std::string s;
    for (const auto& step : chain.steps) {
      s += "# eliminated " + step.eliminated_name + " (" + to_string(step.mode) + "): " + step.substitution + "\n";
    }
    out = s + render_network(result);
    return kExitOk;
  }
  Json j = header("reduce", input.fingerprint);
  Json steps = Json::array();
  for (const auto& step : chain.steps) {
    steps.push_back(Json{{"eliminated", step.eliminated_name},
                         {"mode", to_string(step.mode)},
                         {"substitution", step.substitution}});
  }
  j["steps"] = steps;
  Json index_map = Json::object();
  for (unsigned k = 0; k < map.size(); ++k) {
    index_map[input.net.name(k)] = map[k] ? Json(*map[k]) : Json(nullptr);
  }
  j["index_map"] = index_map;
  j["components"] = result.names();
  j["network"] = render_network(result);
  out = dump(j);
  return kExitOk;
}

int cmd_igraph(const Options& o, std::istream& in, std::string& out) {
  const Limits limits = limits_for(o);
  const Input input = load(o, limits, in);
  const SignedDigraph g = global_interaction_graph(input.net, limits);
  switch (format_of(o, Format::json, {Format::json, Format::text, Format::dot})) {
    case Format::dot:
      out = igraph_to_dot(g);
      return kExitOk;
    case Format::text: {
      std::string s;
      for (const auto& e : g.edges()) {
        s += g.name(e.source) + " -> " + g.name(e.target) + " " + to_string(e.sign) + "\n";
      }
      out = s;
      return kExitOk;
    }
    case Format::json:
      break;
  }
  Json j = header("igraph", input.fingerprint);
  j["components"] = g.names();
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    edges.push_back(Json{{"source", g.name(e.source)}, {"target", g.name(e.target)}, {"sign", static_cast<int>(e.sign)}});
  }
  j["edges"] = edges;
  out = dump(j);
  return kExitOk;
}

int cmd_pfvs(const Options& o, std::istream& in, std::string& out) {
  const Limits limits = limits_for(o);
  const Input input = load(o, limits, in);
  const SignedDigraph g = global_interaction_graph(input.net, limits);
  const auto best = minimum_pfvs(g, limits);
  const auto all = all_minimum_pfvs(g, limits);
  const auto cycles = elementary_cycles(g, limits);
  const auto positive = std::count_if(cycles.begin(), cycles.end(), [](const SignedCycle& c) { return c.sign == Sign::positive; });
  if (format_of(o, Format::json, {Format::json, Format::text}) == Format::text) {
    std::string s = "{" + join(names_of(input.net, best), ",") + "}\n";
    s += "minimum size " + std::to_string(best.size()) + ", " + std::to_string(all.size()) + " minimum sets, " +
         std::to_string(positive) + " positive cycles\n";
    out = s;
    return kExitOk;
  }
  Json j = header("pfvs", input.fingerprint);
  j["pfvs"] = names_of(input.net, best);
  Json sets = Json::array();
  for (const auto& set : all) {
    sets.push_back(names_of(input.net, set));
  }
  j["all_minimum"] = sets;
  j["positive_cycles"] = positive;
  j["cycles"] = cycles.size();
  out = dump(j);
  return kExitOk;
}

int cmd_bound(const Options& o, std::istream& in, std::string& out) {
  const Limits limits = limits_for(o);
  const Input input = load(o, limits, in);
  const AttractorBound b = attractor_bound(input.net, limits);
  std::optional<std::size_t> count;
  if (input.net.size() <= limits.max_stg_components) {
    count = attractors(input.net, limits).size();
  }
  if (format_of(o, Format::json, {Format::json, Format::text}) == Format::text) {
    std::string s = "pfvs {" + join(names_of(input.net, b.pfvs), ",") + "}, bound " + std::to_string(b.bound) + "\n";
    s += "order " + (b.order.empty() ? std::string("(none)") : join(b.order, ",")) + "\n";
    if (count) {
      s += "attractors " + std::to_string(*count) + "\n";
    }
    out = s;
    return kExitOk;
  }
  Json j = header("bound", input.fingerprint);
  j["pfvs"] = names_of(input.net, b.pfvs);
  j["bound"] = b.bound;
  j["order"] = b.order;
  j["residual"] = render_network(b.residual);
  j["attractors"] = count ? Json(*count) : Json(nullptr);
  out = dump(j);
  return kExitOk;
}

std::string partition_text(const BooleanNetwork& net, const ShapePartition& p) {
  return "U1={" + join(names_of(net, p.upstream), ",") + "} U2={" + join(names_of(net, p.regulators), ",") +
         "} v=" + net.name(p.v) + " W={" + join(names_of(net, p.downstream), ",") + "}";
}

int emit_reports(const Options& o, const std::vector<CheckReport>& reports, Json j, std::string& out) {
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
  if (format_of(o, Format::json, {Format::json, Format::text}) == Format::text) {
    std::string s;
    for (const auto& r : reports) {
      s += report_line(r);
    }
    out = s;
  } else {
    Json list = Json::array();
    for (const auto& r : reports) {
      list.push_back(report_json(r));
    }
    j["reports"] = list;
    j["passed"] = ok;
    out = dump(j);
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify_file(const Options& o, std::istream& in, std::string& out) {
  const Limits limits = limits_for(o);
  const Input input = load(o, limits, in);
  if (o.var.empty()) {
    throw Failure{kExitInput, "verify needs --var NAME or --suite"};
  }
  const unsigned v = component(input.net, o.var);
  std::vector<CheckReport> reports = check_reduction_statements(input.net, v, input.fingerprint);
  for (auto& r : check_ig_statements(input.net, v, input.fingerprint, limits)) {
    reports.push_back(std::move(r));
  }
  auto preserved = attractors_preserved(input.net, v, limits);
  preserved.report.fingerprint = input.fingerprint;
  Json j = header("verify", input.fingerprint);
  j["component"] = o.var;
  // Preservation is only a claim when the shape theorem applies.
  j["preserved"] = preserved.preserved;
  j["preservation"] = preserved.report.detail;
  if (const auto p = find_shape_partition(global_interaction_graph(input.net, limits), v)) {
    CheckReport shape = preserved.report;
    shape.statement = "Thm.pres-attr";
    shape.detail = partition_text(input.net, *p) + "; " + shape.detail;
    reports.push_back(std::move(shape));
    j["shape"] = partition_text(input.net, *p);
  } else {
    j["shape"] = nullptr;
  }
  return emit_reports(o, reports, std::move(j), out);
}

int cmd_verify_suite(const Options& o, std::string& out) {
  SuiteSummary summary;
  std::string what;
  if (o.shaped > 0) {
    summary = run_shape_suite(o.shaped, o.seed);
    what = "shape suite";
  } else {
    SuiteOptions options;
    options.networks = o.count;
    options.seed = o.seed;
    summary = run_property_suite(options);
    what = "property suite";
  }
  const std::string fp = "seed=" + std::to_string(o.seed);
  if (format_of(o, Format::json, {Format::json, Format::text}) == Format::text) {
    std::string s = what + ": " + std::to_string(summary.networks) + " networks, " + std::to_string(summary.checks) +
                    " checks, " + std::to_string(summary.failures.size()) + " failures\n";
    if (o.shaped == 0) {
      s += "tight bounds: " + std::to_string(summary.tight_bounds) + "\n";
    }
    for (const auto& r : summary.failures) {
      s += report_line(r);
    }
    out = s;
  } else {
    Json j = header("verify", fp);
    j["suite"] = o.shaped > 0 ? "shape" : "property";
    j["networks"] = summary.networks;
    j["checks"] = summary.checks;
    Json failures = Json::array();
    for (const auto& r : summary.failures) {
      failures.push_back(report_json(r));
    }
    j["failures"] = failures;
    j["tight_bounds"] = summary.tight_bounds;
    j["tight_examples"] = summary.tight_examples;
    j["passed"] = summary.failures.empty();
    out = dump(j);
  }
  return summary.failures.empty() ? kExitOk : kExitCheckFailed;
}

int cmd_chain(const Options& o, std::string& out) {
  const Limits limits = limits_for(o);
  if (o.chain_n < 1) {
    throw InvalidArgument("chain length must be at least 1");
  }
  const BooleanNetwork net = chain_counterexample(o.chain_n, limits);
  const std::string text = render_network(net);
  if (format_of(o, Format::text, {Format::json, Format::text}) == Format::text) {
    out = text;
    return kExitOk;
  }
  Json j = header("chain", fingerprint(text));
  j["n"] = o.chain_n;
  j["components"] = net.names();
  j["network"] = text;
  out = dump(j);
  return kExitOk;
}

int cmd_stg(const Options& o, std::istream& in, std::string& out) {
  const Limits limits = limits_for(o);
  const Input input = load(o, limits, in);
  const TransitionGraph stg = build_stg(input.net, limits);
  const unsigned n = stg.width();
  switch (format_of(o, Format::dot, {Format::json, Format::text, Format::dot})) {
    case Format::dot:
      out = stg_to_dot(stg);
      return kExitOk;
    case Format::text: {
      std::string s;
      for (std::uint64_t x = 0; x < stg.state_count(); ++x) {
        for (auto y : stg.successors(x)) {
          s += bits::display(x, n) + " -> " + bits::display(y, n) + "\n";
        }
      }
      out = s;
      return kExitOk;
    }
    case Format::json:
      break;
  }
  Json j = header("stg", input.fingerprint);
  j["components"] = input.net.names();
  j["states"] = stg.state_count();
  Json edges = Json::array();
  for (std::uint64_t x = 0; x < stg.state_count(); ++x) {
    for (auto y : stg.successors(x)) {
      edges.push_back(Json::array({bits::display(x, n), bits::display(y, n)}));
    }
  }
  j["edges"] = edges;
  out = dump(j);
  return kExitOk;
}

void add_common(CLI::App* sub, Options& o, bool with_file) {
  if (with_file) {
    sub->add_option("file", o.file, "Network file ('-' for stdin)");
  }
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  sub->add_option("--max-components", o.max_components, "Cap on components for exhaustive work")
      ->check(CLI::PositiveNumber);
}

}  // namespace

std::string fingerprint(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(h));
  return buffer;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boolean network reduction by variable elimination", "bnelim"};
  app.set_version_flag("--version", BNELIM_VERSION);
  app.require_subcommand(1);
  Options o;

  auto* attractors_cmd = app.add_subcommand("attractors", "Attractors of the asynchronous dynamics");
  add_common(attractors_cmd, o, true);
  auto* fixed_cmd = app.add_subcommand("fixed-points", "States with f(x) = x");
  add_common(fixed_cmd, o, true);
  auto* reduce_cmd = app.add_subcommand("reduce", "Eliminate components in order");
  add_common(reduce_cmd, o, true);
  reduce_cmd->add_option("--eliminate", o.eliminate, "Components to eliminate; none renders the input")->delimiter(',');
  auto* igraph_cmd = app.add_subcommand("igraph", "Global signed interaction graph");
  add_common(igraph_cmd, o, true);
  auto* pfvs_cmd = app.add_subcommand("pfvs", "Minimum positive feedback vertex sets");
  add_common(pfvs_cmd, o, true);
  auto* bound_cmd = app.add_subcommand("bound", "Attractor bound from a minimum PFVS");
  add_common(bound_cmd, o, true);
  auto* verify_cmd = app.add_subcommand("verify", "Check the elimination statements");
  add_common(verify_cmd, o, true);
  verify_cmd->add_option("--var", o.var, "Component to eliminate");
  verify_cmd->add_flag("--suite", o.suite, "Run the seeded random suite instead of a file");
  verify_cmd->add_option("--count", o.count, "Networks in the property suite")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", o.seed, "First seed of the suite");
  verify_cmd->add_option("--shaped", o.shaped, "Run the shaped-network suite with this many networks");
  auto* chain_cmd = app.add_subcommand("chain", "Write the chain network of length N");
  add_common(chain_cmd, o, false);
  chain_cmd->add_option("n", o.chain_n, "Chain length")->required();
  auto* stg_cmd = app.add_subcommand("stg", "Asynchronous state transition graph");
  add_common(stg_cmd, o, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_text, e_text;
    const int code = app.exit(e, o_text, e_text);
    out << o_text.str();
    err << e_text.str();
    return code == 0 ? kExitOk : kExitInput;
  }

  std::string text;
  int code = kExitOk;
  try {
    if (*attractors_cmd) {
      code = cmd_attractors(o, in, text);
    } else if (*fixed_cmd) {
      code = cmd_fixed_points(o, in, text);
    } else if (*reduce_cmd) {
      code = cmd_reduce(o, in, text);
    } else if (*igraph_cmd) {
      code = cmd_igraph(o, in, text);
    } else if (*pfvs_cmd) {
      code = cmd_pfvs(o, in, text);
    } else if (*bound_cmd) {
      code = cmd_bound(o, in, text);
    } else if (*verify_cmd) {
      code = (o.suite || o.shaped > 0) ? cmd_verify_suite(o, text) : cmd_verify_file(o, in, text);
    } else if (*chain_cmd) {
      code = cmd_chain(o, text);
    } else if (*stg_cmd) {
      code = cmd_stg(o, in, text);
    }
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const ParseError& e) {
    err << "error: " << o.file << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const ForbiddenElimination& e) {
    err << "error: cannot eliminate " << e.component() << ": positive loop\n";
    return kExitForbidden;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  out << text;
  out.flush();
  return code;
}

}  // namespace bnelim::cli
