#include "bnelim/verify.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "bnelim/dynamics.hpp"
#include "bnelim/errors.hpp"
#include "bnelim/reduction.hpp"

namespace bnelim {

namespace {

constexpr unsigned kStatementCap = 8;
constexpr unsigned kFullShapeSearchCap = 12;
constexpr unsigned kShapedRetries = 100;

std::uint64_t bit(unsigned k) { return std::uint64_t{1} << k; }

std::string transition(std::uint64_t x, std::uint64_t y, unsigned width) {
  return bits::display(x, width) + " -> " + bits::display(y, width);
}

std::string describe(const std::vector<std::uint64_t>& states, unsigned width) {
  std::string out = "{";
  for (std::size_t k = 0; k < states.size(); ++k) {
    out += (k ? "," : "") + bits::display(states[k], width);
  }
  return out + "}";
}

// Records the first violation only; later ones add nothing actionable.
void violate(CheckReport& report, std::vector<std::string> witness, std::string detail = {}) {
  if (!report.passed) {
    return;
  }
  report.passed = false;
  report.witness = std::move(witness);
  report.detail = std::move(detail);
}

CheckReport make_report(std::string statement, const std::string& fingerprint) {
  CheckReport r;
  r.statement = std::move(statement);
  r.fingerprint = fingerprint;
  return r;
}

std::vector<std::vector<bool>> reachability(const TransitionGraph& stg) {
  std::vector<std::vector<bool>> reach(stg.state_count());
  for (std::uint64_t x = 0; x < stg.state_count(); ++x) {
    reach[x].assign(stg.state_count(), false);
    for (auto y : reachable(stg, x)) {
      reach[x][y] = true;
    }
  }
  return reach;
}

std::vector<std::uint64_t> project_set(const std::vector<std::uint64_t>& states, unsigned v) {
  std::vector<std::uint64_t> out;
  out.reserve(states.size());
  for (auto x : states) {
    out.push_back(bits::remove(x, v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_attractor_set(const std::vector<Attractor>& found, const std::vector<std::uint64_t>& states) {
  return std::any_of(found.begin(), found.end(), [&](const Attractor& a) { return a.states == states; });
}

// Everything the statement checks need about f, v and the reduced f~.
struct EliminationCase {
  EliminationCase(const BooleanNetwork& network, unsigned eliminated)
      : net(network),
        v(eliminated),
        maps(network, eliminated),
        result(eliminate(network, eliminated)),
        full(network),
        reduced(result.reduced),
        full_attractors(attractors(full)),
        reduced_attractors(attractors(reduced)),
        full_census(census(full_attractors, network.size())),
        reduced_census(census(reduced_attractors, network.size() - 1)) {}

  unsigned width() const { return net.size(); }
  unsigned reduced_index(unsigned i) const { return i < v ? i : i - 1; }
  unsigned original_index(unsigned k) const { return k < v ? k : k + 1; }
  std::uint64_t project(std::uint64_t x) const { return bits::remove(x, v); }

  const BooleanNetwork& net;
  unsigned v;
  RepresentativeMaps maps;
  ReductionResult result;
  TransitionGraph full;
  TransitionGraph reduced;
  std::vector<Attractor> full_attractors;
  std::vector<Attractor> reduced_attractors;
  AttractorCensus full_census;
  AttractorCensus reduced_census;
};

CheckReport lemma2_i(const EliminationCase& c, const std::string& fp) {
  auto report = make_report("Lemma2.i", fp);
  const unsigned n = c.width();
  for (std::uint64_t x = 0; x < c.full.state_count(); ++x) {
    const std::uint64_t r0 = c.maps.representative(false, x);
    const std::uint64_t r1 = c.maps.representative(true, x);
    if (x == r0 && x == r1) {
      continue;
    }
    const bool step = (r0 != x || r1 != x) && c.full.has_transition(x, c.v);
    if (!step) {
      violate(report, {bits::display(x, n)}, "no transition to a representative");
    }
    if (r0 != r1 && !(c.full.has_transition(r0, c.v) && c.full.has_transition(r1, c.v))) {
      violate(report, {bits::display(r0, n), bits::display(r1, n)}, "representatives not strongly connected");
    }
  }
  return report;
}

CheckReport lemma2_ii(const EliminationCase& c, const std::string& fp) {
  auto report = make_report("Lemma2.ii", fp);
  const unsigned n = c.width();
  for (std::uint64_t x = 0; x < c.full.state_count(); ++x) {
    for (bool a : {false, true}) {
      const std::uint64_t ra = c.maps.representative(a, x);
      for (unsigned i = 0; i < n; ++i) {
        if (i == c.v || !c.full.has_transition(ra, i)) {
          continue;
        }
        if (!c.reduced.has_transition(c.project(x), c.reduced_index(i))) {
          violate(report, {transition(ra, ra ^ bit(i), n)}, "transition from representative not projected");
        }
      }
    }
  }
  return report;
}

CheckReport lemma2_iii(const EliminationCase& c, const std::string& fp) {
  auto report = make_report("Lemma2.iii", fp);
  const unsigned n = c.width();
  for (unsigned i = 0; i < n; ++i) {
    if (i == c.v || influence_signs(c.net.table(i), c.v) != 0) {
      continue;
    }
    for (std::uint64_t x = 0; x < c.full.state_count(); ++x) {
      if (!c.full.has_transition(x, i)) {
        continue;
      }
      for (bool a : {false, true}) {
        const std::uint64_t ra = c.maps.representative(a, x);
        if (!c.full.has_transition(ra, i)) {
          violate(report, {transition(x, x ^ bit(i), n), bits::display(ra, n)},
                  "transition not available at representative");
        }
      }
      if (!c.reduced.has_transition(c.project(x), c.reduced_index(i))) {
        violate(report, {transition(x, x ^ bit(i), n)}, "transition not projected");
      }
    }
  }
  return report;
}

CheckReport lemma2_iv(const EliminationCase& c, const std::vector<std::vector<bool>>& reach,
                      const std::string& fp) {
  auto report = make_report("Lemma2.iv", fp);
  const unsigned m = c.width() - 1;
  for (std::uint64_t y = 0; y < c.reduced.state_count(); ++y) {
    for (unsigned k = 0; k < m; ++k) {
      if (!c.reduced.has_transition(y, k)) {
        continue;
      }
      const unsigned i = c.original_index(k);
      bool lifted = false;
      for (bool a : {false, true}) {
        const std::uint64_t s = c.maps.section(a, y);
        if (!c.full.has_transition(s, i)) {
          continue;
        }
        const std::uint64_t target = s ^ bit(i);
        if (reach[bits::insert(y, c.v, false)][target] && reach[bits::insert(y, c.v, true)][target]) {
          lifted = true;
        }
      }
      if (!lifted) {
        violate(report, {transition(y, y ^ bit(k), m)}, "reduced transition does not lift");
      }
    }
  }
  return report;
}

std::vector<CheckReport> fixed_point_theorem(const EliminationCase& c, const std::string& fp) {
  const unsigned n = c.width();
  const unsigned m = n - 1;
  std::vector<CheckReport> out;

  auto i_report = make_report("Thm.fixed-points.i", fp);
  for (std::uint64_t x = 0; x < c.full.state_count(); ++x) {
    if (c.full.moves(x) != 0) {
      continue;
    }
    if (c.maps.representative(false, x) != x || c.maps.representative(true, x) != x) {
      violate(i_report, {bits::display(x, n)}, "fixed point is not its own representative");
    }
    if (c.reduced.moves(c.project(x)) != 0) {
      violate(i_report, {bits::display(x, n)}, "projection is not fixed");
    }
    if (c.full.moves(x ^ bit(c.v)) == 0) {
      violate(i_report, {bits::display(x, n), bits::display(x ^ bit(c.v), n)}, "two fixed points share a projection");
    }
  }
  out.push_back(std::move(i_report));

  auto ii_report = make_report("Thm.fixed-points.ii", fp);
  for (const auto& a : c.full_attractors) {
    if (a.two_state_direction() == c.v && c.reduced.moves(c.project(a.states.front())) != 0) {
      violate(ii_report, {describe(a.states, n)}, "projection of a v-oscillation is not fixed");
    }
  }
  out.push_back(std::move(ii_report));

  auto iii_report = make_report("Thm.fixed-points.iii", fp);
  for (std::uint64_t y = 0; y < c.reduced.state_count(); ++y) {
    if (c.reduced.moves(y) != 0) {
      continue;
    }
    std::vector<std::uint64_t> lifted{c.maps.section(false, y), c.maps.section(true, y)};
    std::sort(lifted.begin(), lifted.end());
    lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
    if (!is_attractor_set(c.full_attractors, lifted)) {
      violate(iii_report, {bits::display(y, m), describe(lifted, n)}, "sections of a fixed point are not an attractor");
    }
  }
  out.push_back(std::move(iii_report));

  // Trap sets: the whole space, every forward closure, every attractor and
  // the union of each closure with its complement-neighbour's closure.
  auto iv_report = make_report("Thm.fixed-points.iv", fp);
  std::vector<std::vector<std::uint64_t>> traps;
  std::vector<std::uint64_t> everything(c.full.state_count());
  for (std::uint64_t x = 0; x < everything.size(); ++x) {
    everything[x] = x;
  }
  traps.push_back(everything);
  std::vector<std::vector<std::uint64_t>> closures;
  for (std::uint64_t x = 0; x < c.full.state_count(); ++x) {
    closures.push_back(reachable(c.full, x));
  }
  for (std::uint64_t x = 0; x < c.full.state_count(); ++x) {
    traps.push_back(closures[x]);
    std::vector<std::uint64_t> joined;
    const auto& other = closures[(x + c.full.state_count() / 2 + 1) % c.full.state_count()];
    std::set_union(closures[x].begin(), closures[x].end(), other.begin(), other.end(), std::back_inserter(joined));
    traps.push_back(std::move(joined));
  }
  for (const auto& a : c.full_attractors) {
    traps.push_back(a.states);
  }
  for (const auto& t : traps) {
    if (!is_trap_set(c.full, t)) {
      throw std::logic_error("trap set family contains a non-trap set");
    }
    if (!is_trap_set(c.reduced, project_set(t, c.v))) {
      violate(iv_report, {describe(t, n)}, "projection of a trap set is not a trap set");
    }
  }
  out.push_back(std::move(iv_report));

  auto v_report = make_report("Thm.fixed-points.v", fp);
  for (const auto& a : c.full_attractors) {
    const auto dir = a.two_state_direction();
    if (!dir || *dir == c.v) {
      continue;
    }
    if (!is_attractor_set(c.reduced_attractors, project_set(a.states, c.v))) {
      violate(v_report, {describe(a.states, n)}, "two-state attractor does not project to an attractor");
    }
  }
  out.push_back(std::move(v_report));

  auto vi_report = make_report("Thm.fixed-points.vi", fp);
  for (const auto& reduced : c.reduced_attractors) {
    std::vector<std::string> hits;
    for (const auto& a : c.full_attractors) {
      const bool meets = std::any_of(a.states.begin(), a.states.end(),
                                     [&](std::uint64_t x) { return reduced.contains(c.project(x)); });
      if (meets) {
        hits.push_back(describe(a.states, n));
      }
    }
    if (hits.size() > 1) {
      hits.insert(hits.begin(), describe(reduced.states, m));
      violate(vi_report, hits, "several attractors meet the preimage of one reduced attractor");
    }
  }
  out.push_back(std::move(vi_report));
  return out;
}

std::vector<CheckReport> corollary(const EliminationCase& c, const std::string& fp) {
  const auto& f = c.full_census;
  const auto& r = c.reduced_census;
  std::vector<CheckReport> out;

  auto i_report = make_report("Cor.i", fp);
  i_report.detail = "S(f~)=" + std::to_string(r.fixed_points) + " S(f)=" + std::to_string(f.fixed_points) +
                    " A(f,v)=" + std::to_string(f.two_state_by_component[c.v]);
  if (r.fixed_points != f.fixed_points + f.two_state_by_component[c.v]) {
    std::vector<std::string> witness;
    for (const auto& a : c.reduced_attractors) {
      if (a.is_fixed_point()) {
        witness.push_back(describe(a.states, c.width() - 1));
      }
    }
    witness.push_back("fixed points of f~ listed; expected " +
                      std::to_string(f.fixed_points + f.two_state_by_component[c.v]));
    const std::string detail = i_report.detail;
    violate(i_report, witness, detail);
  }
  out.push_back(std::move(i_report));

  auto ii_report = make_report("Cor.ii", fp);
  for (unsigned i = 0; i < c.width(); ++i) {
    if (i == c.v) {
      continue;
    }
    const unsigned before = f.two_state_by_component[i];
    const unsigned after = r.two_state_by_component[c.reduced_index(i)];
    if (before > after) {
      violate(ii_report, {c.net.name(i)},
              "A(f,i)=" + std::to_string(before) + " > A(f~,i)=" + std::to_string(after));
    }
  }
  out.push_back(std::move(ii_report));

  auto iii_report = make_report("Cor.iii", fp);
  iii_report.detail = "S(f)+A(f)=" + std::to_string(f.total()) + " S(f~)+A(f~)=" + std::to_string(r.total());
  if (f.total() > r.total()) {
    std::vector<std::string> witness;
    for (const auto& a : c.full_attractors) {
      witness.push_back(describe(a.states, c.width()));
    }
    const std::string detail = iii_report.detail;
    violate(iii_report, witness, detail);
  }
  out.push_back(std::move(iii_report));
  return out;
}

bool has_signed_two_cycle(const SignedDigraph& g, unsigned i, unsigned v, Sign sign) {
  for (Sign a : {Sign::positive, Sign::negative}) {
    for (Sign b : {Sign::positive, Sign::negative}) {
      if (g.has_edge(i, v, a) && g.has_edge(v, i, b) && a * b == sign) {
        return true;
      }
    }
  }
  return false;
}

bool has_signed_detour(const SignedDigraph& g, unsigned j, unsigned v, unsigned i, Sign sign) {
  for (Sign a : {Sign::positive, Sign::negative}) {
    for (Sign b : {Sign::positive, Sign::negative}) {
      if (g.has_edge(j, v, a) && g.has_edge(v, i, b) && a * b == sign) {
        return true;
      }
    }
  }
  return false;
}

// Signs of walks of length >= 1 from `source`, per target.
std::vector<std::uint8_t> walk_signs(const SignedDigraph& g, unsigned source) {
  const unsigned n = g.vertex_count();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<std::pair<unsigned, Sign>> frontier{{source, Sign::positive}};
  while (!frontier.empty()) {
    const auto [u, sign] = frontier.back();
    frontier.pop_back();
    for (unsigned w = 0; w < n; ++w) {
      for (Sign e : {Sign::positive, Sign::negative}) {
        if (!g.has_edge(u, w, e)) {
          continue;
        }
        const Sign next = sign * e;
        if ((seen[w] & sign_bit(next)) == 0) {
          seen[w] |= sign_bit(next);
          frontier.emplace_back(w, next);
        }
      }
    }
  }
  return seen;
}

std::vector<unsigned> members(std::uint64_t mask) {
  std::vector<unsigned> out;
  while (mask != 0) {
    out.push_back(static_cast<unsigned>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Random table over the components in `allowed`, reading at most
// `max_regulators` of them.
TruthTable random_table(std::mt19937_64& rng, unsigned n, std::uint64_t allowed, unsigned max_regulators) {
  std::vector<unsigned> pool = members(allowed);
  const std::size_t take =
      max_regulators == 0 ? pool.size() : std::min<std::size_t>(pool.size(), max_regulators);
  for (std::size_t k = 0; k < take; ++k) {
    const std::size_t pick = k + static_cast<std::size_t>(rng() % (pool.size() - k));
    std::swap(pool[k], pool[pick]);
  }
  pool.resize(take);
  std::sort(pool.begin(), pool.end());

  const std::size_t local_size = std::size_t{1} << take;
  std::vector<bool> local(local_size);
  std::uint64_t word = 0;
  for (std::size_t k = 0; k < local_size; ++k) {
    if (k % 64 == 0) {
      word = rng();
    }
    local[k] = ((word >> (k % 64)) & 1U) != 0;
  }
  TruthTable t(n);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    std::size_t index = 0;
    for (std::size_t b = 0; b < take; ++b) {
      if (bits::get(x, pool[b])) {
        index |= std::size_t{1} << b;
      }
    }
    t.set(x, local[index]);
  }
  return t;
}

void remove_positive_loop(TruthTable& t, unsigned v) {
  for (std::uint64_t x = 0; x < t.size(); ++x) {
    if (!bits::get(x, v) && !t[x] && t[x | bit(v)]) {
      t.set(x | bit(v), false);
    }
  }
}

void remove_loop(TruthTable& t, unsigned v) {
  for (std::uint64_t x = 0; x < t.size(); ++x) {
    if (!bits::get(x, v)) {
      t.set(x | bit(v), t[x]);
    }
  }
}

std::vector<std::string> default_names(unsigned n) {
  std::vector<std::string> names;
  for (unsigned k = 1; k <= n; ++k) {
    names.push_back("x" + std::to_string(k));
  }
  return names;
}

}  // namespace

std::vector<CheckReport> check_reduction_statements(const BooleanNetwork& net, unsigned v,
                                                    const std::string& fingerprint) {
  require_within("statement checks", net.size(), kStatementCap);
  if (v >= net.size()) {
    throw InvalidArgument("component index out of range");
  }
  const EliminationCase c(net, v);
  const auto reach = reachability(c.full);
  std::vector<CheckReport> out;
  out.push_back(lemma2_i(c, fingerprint));
  out.push_back(lemma2_ii(c, fingerprint));
  out.push_back(lemma2_iii(c, fingerprint));
  out.push_back(lemma2_iv(c, reach, fingerprint));
  for (auto& r : fixed_point_theorem(c, fingerprint)) {
    out.push_back(std::move(r));
  }
  for (auto& r : corollary(c, fingerprint)) {
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckReport> check_ig_statements(const BooleanNetwork& net, unsigned v, const std::string& fingerprint,
                                             const Limits& limits) {
  require_within("statement checks", net.size(), kStatementCap);
  const ReductionResult result = eliminate(net, v);
  const SignedDigraph g = global_interaction_graph(net, limits);
  const SignedDigraph h = global_interaction_graph(result.reduced, limits);
  const unsigned m = h.vertex_count();
  auto original = [v](unsigned k) { return k < v ? k : k + 1; };
  std::vector<CheckReport> out;

  auto neg = make_report("Prop.ig-neg-loop", fingerprint);
  auto pos = make_report("Prop.ig-pos-loop", fingerprint);
  for (unsigned k = 0; k < m; ++k) {
    const unsigned i = original(k);
    if (h.has_edge(k, k, Sign::negative) &&
        !(g.has_edge(i, i, Sign::negative) || g.has_edge(v, v, Sign::negative) ||
          has_signed_two_cycle(g, i, v, Sign::negative))) {
      violate(neg, {h.name(k) + " -| " + h.name(k)}, "no negative cycle within {i, v}");
    }
    if (h.has_edge(k, k, Sign::positive) &&
        !(g.has_edge(i, i, Sign::positive) || has_signed_two_cycle(g, i, v, Sign::positive))) {
      violate(pos, {h.name(k) + " -> " + h.name(k)}, "no positive loop at i or positive cycle on {i, v}");
    }
  }
  out.push_back(std::move(neg));
  out.push_back(std::move(pos));

  auto edges = make_report("Prop.edges-in-ig", fingerprint);
  for (const auto& e : h.edges()) {
    if (e.source == e.target) {
      continue;
    }
    const unsigned j = original(e.source);
    const unsigned i = original(e.target);
    if (!g.has_edge(j, i, e.sign) && !has_signed_detour(g, j, v, i, e.sign)) {
      violate(edges, {h.name(e.source) + " -> " + h.name(e.target) + " (" + to_string(e.sign) + ")"},
              "no edge or path through v of the same sign");
    }
  }
  out.push_back(std::move(edges));

  auto paths = make_report("Prop.ig", fingerprint);
  for (unsigned kj = 0; kj < m; ++kj) {
    const unsigned j = original(kj);
    const auto reduced_signs = elementary_path_signs(h, kj, false);
    const auto full_signs = elementary_path_signs(g, j, true);
    for (unsigned ki = 0; ki < m; ++ki) {
      for (Sign s : {Sign::positive, Sign::negative}) {
        if ((reduced_signs[ki] & sign_bit(s)) != 0 && (full_signs[original(ki)] & sign_bit(s)) == 0) {
          violate(paths, {h.name(kj) + " ~> " + h.name(ki) + " (" + to_string(s) + ")"},
                  "elementary path missing in G(f)");
        }
      }
    }
  }
  out.push_back(std::move(paths));

  // Loop-free elimination: signed walks of G(f~), loops included, exist in G(f).
  if (result.mode == EliminationMode::classical) {
    auto walks = make_report("Prop.ig-classical", fingerprint);
    for (unsigned kj = 0; kj < m; ++kj) {
      const auto reduced_signs = walk_signs(h, kj);
      const auto full_signs = walk_signs(g, original(kj));
      for (unsigned ki = 0; ki < m; ++ki) {
        for (Sign s : {Sign::positive, Sign::negative}) {
          if ((reduced_signs[ki] & sign_bit(s)) != 0 && (full_signs[original(ki)] & sign_bit(s)) == 0) {
            violate(walks, {h.name(kj) + " ~> " + h.name(ki) + " (" + to_string(s) + ")"},
                    "signed path missing in G(f)");
          }
        }
      }
    }
    out.push_back(std::move(walks));
  }

  // Every PFVS of G(f) avoiding v stays a PFVS after elimination.
  auto lemma = make_report("Lemma.pfvs", fingerprint);
  const auto full_supports = positive_cycle_supports(g, limits);
  const auto reduced_supports = positive_cycle_supports(h, limits);
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << net.size()); ++set) {
    if ((set & bit(v)) != 0) {
      continue;
    }
    const bool hits = std::all_of(full_supports.begin(), full_supports.end(),
                                  [set](std::uint64_t s) { return (s & set) != 0; });
    if (!hits) {
      continue;
    }
    const std::uint64_t reduced_set = bits::remove(set, v);
    const bool still = std::all_of(reduced_supports.begin(), reduced_supports.end(),
                                   [reduced_set](std::uint64_t s) { return (s & reduced_set) != 0; });
    if (g.has_edge(v, v, Sign::positive) || !still) {
      std::string names;
      for (unsigned k : members(set)) {
        names += (names.empty() ? "" : ",") + net.name(k);
      }
      violate(lemma, {"{" + names + "}"}, "PFVS of G(f) is not a PFVS of G(f~)");
    }
  }
  out.push_back(std::move(lemma));
  return out;
}

PreservationResult attractors_preserved(const BooleanNetwork& net, unsigned v, const Limits& limits) {
  const ReductionResult result = eliminate(net, v);
  const auto full = attractors(net, limits);
  const auto reduced = attractors(result.reduced, limits);
  const unsigned n = net.size();
  PreservationResult out{true, make_report("Def.preserved", {})};

  std::vector<std::vector<std::uint64_t>> images;
  for (const auto& a : full) {
    images.push_back(project_set(a.states, v));
    if (!is_attractor_set(reduced, images.back())) {
      violate(out.report, {describe(a.states, n)}, "projection is not an attractor of the reduced network");
    }
  }
  for (const auto& r : reduced) {
    const auto count = std::count(images.begin(), images.end(), r.states);
    if (count != 1) {
      violate(out.report, {describe(r.states, n - 1)},
              "reduced attractor is the projection of " + std::to_string(count) + " attractors");
    }
  }
  if (out.report.passed) {
    out.report.detail = std::to_string(full.size()) + " attractors on both sides";
  }
  out.preserved = out.report.passed;
  return out;
}

bool matches_shape(const SignedDigraph& g, const ShapePartition& p) {
  enum Role : int { kUnassigned = -1, kUpstream, kRegulator, kEliminated, kDownstream };
  const unsigned n = g.vertex_count();
  std::vector<int> role(n, kUnassigned);
  auto assign = [&](unsigned vertex, int r) {
    if (vertex >= n || role[vertex] != kUnassigned) {
      throw InvalidArgument("shape partition is not a partition of the vertex set");
    }
    role[vertex] = r;
  };
  for (unsigned u : p.upstream) {
    assign(u, kUpstream);
  }
  for (unsigned u : p.regulators) {
    assign(u, kRegulator);
  }
  assign(p.v, kEliminated);
  for (unsigned u : p.downstream) {
    assign(u, kDownstream);
  }
  if (std::find(role.begin(), role.end(), kUnassigned) != role.end()) {
    throw InvalidArgument("shape partition does not cover every vertex");
  }

  for (const auto& e : g.edges()) {
    const int from = role[e.source];
    const int to = role[e.target];
    bool allowed = false;
    switch (from) {
      case kUpstream:
        allowed = to != kEliminated;
        break;
      case kRegulator:
        allowed = to == kRegulator || to == kEliminated;
        break;
      case kEliminated:
        allowed = to == kDownstream || (to == kEliminated && e.sign == Sign::negative);
        break;
      case kDownstream:
        allowed = to == kDownstream;
        break;
      default:
        break;
    }
    if (!allowed) {
      return false;
    }
  }
  return true;
}

std::optional<ShapePartition> find_shape_partition(const SignedDigraph& g, unsigned v) {
  const unsigned n = g.vertex_count();
  if (v >= n) {
    throw InvalidArgument("unknown vertex");
  }
  // Canonical guess: W downstream of v, U2 its regulators, U1 the rest.
  std::vector<bool> downstream(n, false);
  std::vector<unsigned> frontier{v};
  while (!frontier.empty()) {
    const unsigned u = frontier.back();
    frontier.pop_back();
    for (unsigned w = 0; w < n; ++w) {
      if (w != v && g.has_edge(u, w) && !downstream[w]) {
        downstream[w] = true;
        frontier.push_back(w);
      }
    }
  }
  ShapePartition canonical;
  canonical.v = v;
  for (unsigned u = 0; u < n; ++u) {
    if (u == v) {
      continue;
    }
    if (downstream[u]) {
      canonical.downstream.push_back(u);
    } else if (g.has_edge(u, v)) {
      canonical.regulators.push_back(u);
    } else {
      canonical.upstream.push_back(u);
    }
  }
  if (matches_shape(g, canonical)) {
    return canonical;
  }
  if (n > kFullShapeSearchCap) {
    return std::nullopt;
  }

  std::vector<unsigned> others;
  for (unsigned u = 0; u < n; ++u) {
    if (u != v) {
      others.push_back(u);
    }
  }
  std::uint64_t assignments = 1;
  for (std::size_t k = 0; k < others.size(); ++k) {
    assignments *= 3;
  }
  for (std::uint64_t code = 0; code < assignments; ++code) {
    ShapePartition p;
    p.v = v;
    std::uint64_t rest = code;
    for (unsigned u : others) {
      switch (rest % 3) {
        case 0:
          p.upstream.push_back(u);
          break;
        case 1:
          p.regulators.push_back(u);
          break;
        default:
          p.downstream.push_back(u);
          break;
      }
      rest /= 3;
    }
    if (matches_shape(g, p)) {
      return p;
    }
  }
  return std::nullopt;
}

BooleanNetwork chain_counterexample(unsigned n, const Limits& limits) {
  if (n == 0) {
    throw InvalidArgument("chain length must be at least 1");
  }
  const unsigned size = 2 * (n + 2);
  require_within("chain construction", size, limits.max_table_components);
  const unsigned u = 0;
  auto mediator = [](unsigned i) { return i; };        // v_i, i = 1..n+1
  auto w = [n](unsigned i) { return n + 1 + i; };      // w_i, i = 1..n+2

  std::vector<std::string> names{"u"};
  for (unsigned i = 1; i <= n + 1; ++i) {
    names.push_back("v" + std::to_string(i));
  }
  for (unsigned i = 1; i <= n + 2; ++i) {
    names.push_back("w" + std::to_string(i));
  }

  auto all_w = [&] {
    std::vector<Expr> terms;
    for (unsigned j = 1; j <= n + 2; ++j) {
      terms.push_back(Expr::variable(w(j)));
    }
    return Expr::conjunction(std::move(terms));
  };
  auto no_w = [&] {
    std::vector<Expr> terms;
    for (unsigned j = 1; j <= n + 2; ++j) {
      terms.push_back(Expr::negation(Expr::variable(w(j))));
    }
    return Expr::conjunction(std::move(terms));
  };

  std::vector<Expr> sources;
  sources.push_back(Expr::disjunction({
      all_w(),
      Expr::conjunction({Expr::negation(Expr::variable(u)), no_w()}),
      Expr::conjunction({Expr::variable(u), Expr::negation(all_w()), Expr::negation(no_w())}),
  }));
  sources.push_back(Expr::variable(u));
  for (unsigned i = 2; i <= n + 1; ++i) {
    sources.push_back(Expr::variable(mediator(i - 1)));
  }
  for (unsigned i = 1; i <= n + 2; ++i) {
    std::vector<Expr> ramp;
    Expr last = Expr::variable(mediator(n + 1));
    ramp.push_back(i % 2 == 1 ? last : Expr::negation(last));
    for (unsigned j = 1; j < i; ++j) {
      ramp.push_back(Expr::variable(w(j)));
    }
    for (unsigned j = i; j <= n + 2; ++j) {
      ramp.push_back(Expr::negation(Expr::variable(w(j))));
    }
    sources.push_back(Expr::disjunction({all_w(), Expr::conjunction(std::move(ramp))}));
  }
  return BooleanNetwork::from_expressions(std::move(names), std::move(sources), limits);
}

ShapePartition shaped_partition(ShapeSizes sizes) {
  ShapePartition p;
  unsigned next = 0;
  for (unsigned k = 0; k < sizes.upstream; ++k) {
    p.upstream.push_back(next++);
  }
  for (unsigned k = 0; k < sizes.regulators; ++k) {
    p.regulators.push_back(next++);
  }
  p.v = next++;
  for (unsigned k = 0; k < sizes.downstream; ++k) {
    p.downstream.push_back(next++);
  }
  return p;
}

BooleanNetwork random_network(unsigned n, std::uint64_t seed, const RandomConstraint& constraint,
                              unsigned max_regulators, const Limits& limits) {
  require_within("random network", n, limits.max_table_components);
  if (n == 0) {
    throw InvalidArgument("a network needs at least one component");
  }
  if (constraint.kind != RandomConstraint::Kind::none && constraint.v >= n) {
    throw InvalidArgument("constrained component out of range");
  }
  std::mt19937_64 rng(mix(seed, n * 4 + static_cast<unsigned>(constraint.kind)));
  const std::uint64_t everyone = (std::uint64_t{1} << n) - 1;

  if (constraint.kind != RandomConstraint::Kind::shaped) {
    std::vector<TruthTable> tables;
    for (unsigned i = 0; i < n; ++i) {
      tables.push_back(random_table(rng, n, everyone, max_regulators));
    }
    if (constraint.kind == RandomConstraint::Kind::no_positive_loop_at) {
      remove_positive_loop(tables[constraint.v], constraint.v);
    } else if (constraint.kind == RandomConstraint::Kind::no_loop_at) {
      remove_loop(tables[constraint.v], constraint.v);
    }
    return BooleanNetwork::from_tables(default_names(n), std::move(tables));
  }

  if (constraint.sizes.components() != n) {
    throw InvalidArgument("shaped sizes describe " + std::to_string(constraint.sizes.components()) +
                          " components, not " + std::to_string(n));
  }
  const ShapePartition p = shaped_partition(constraint.sizes);
  auto mask_of = [](const std::vector<unsigned>& vs) {
    std::uint64_t m = 0;
    for (unsigned u : vs) {
      m |= bit(u);
    }
    return m;
  };
  const std::uint64_t upstream = mask_of(p.upstream);
  const std::uint64_t regulators = mask_of(p.regulators);
  const std::uint64_t downstream = mask_of(p.downstream);
  for (unsigned attempt = 0; attempt < kShapedRetries; ++attempt) {
    std::vector<TruthTable> tables;
    for (unsigned i = 0; i < n; ++i) {
      std::uint64_t allowed = 0;
      if (upstream & bit(i)) {
        allowed = upstream;
      } else if (regulators & bit(i)) {
        allowed = upstream | regulators;
      } else if (i == p.v) {
        allowed = regulators | bit(p.v);
      } else {
        allowed = upstream | bit(p.v) | downstream;
      }
      tables.push_back(random_table(rng, n, allowed, max_regulators));
    }
    remove_positive_loop(tables[p.v], p.v);
    auto net = BooleanNetwork::from_tables(default_names(n), std::move(tables));
    if (matches_shape(global_interaction_graph(net, limits), p)) {
      return net;
    }
  }
  throw Error("shaped sampling failed after " + std::to_string(kShapedRetries) + " attempts");
}

CheckReport check_paths_lemma(const BooleanNetwork& net, unsigned max_pairs, const std::string& fingerprint) {
  require_within("paths property", net.size(), kStatementCap);
  auto report = make_report("Lemma.paths-I", fingerprint);
  const unsigned n = net.size();
  const SignedDigraph g = global_interaction_graph(net);

  // reaches[j]: vertices at the end of a path of length >= 1 from j.
  std::vector<std::uint64_t> reaches(n, 0);
  for (unsigned j = 0; j < n; ++j) {
    std::vector<unsigned> frontier{j};
    while (!frontier.empty()) {
      const unsigned u = frontier.back();
      frontier.pop_back();
      for (unsigned w = 0; w < n; ++w) {
        if (g.has_edge(u, w) && (reaches[j] & bit(w)) == 0) {
          reaches[j] |= bit(w);
          frontier.push_back(w);
        }
      }
    }
  }

  const TransitionGraph stg(net);
  const auto reach = reachability(stg);
  std::uint64_t codes = 1;
  for (unsigned k = 0; k < n; ++k) {
    codes *= 3;
  }
  // Visit assignments in a stride order coprime to 3^n to spread the sample.
  constexpr std::uint64_t kStride = 7919;
  unsigned checked = 0;
  for (std::uint64_t step = 0; step < codes && checked < max_pairs; ++step) {
    std::uint64_t code = (step * kStride) % codes;
    std::uint64_t w_mask = 0;
    std::uint64_t i_mask = 0;
    for (unsigned k = 0; k < n; ++k) {
      if (code % 3 == 1) {
        w_mask |= bit(k);
      } else if (code % 3 == 2) {
        i_mask |= bit(k);
      }
      code /= 3;
    }
    if (w_mask == 0 || i_mask == 0) {
      continue;
    }
    bool blocked = true;
    for (unsigned j : members(w_mask)) {
      if (reaches[j] & i_mask) {
        blocked = false;
      }
    }
    if (!blocked) {
      continue;
    }
    ++checked;
    for (std::uint64_t x = 0; x < stg.state_count(); ++x) {
      const std::uint64_t flipped_i = (x ^ i_mask) & i_mask;
      bool target = false;
      bool kept = false;
      for (std::uint64_t y = 0; y < stg.state_count(); ++y) {
        if (!reach[x][y] || (y & i_mask) != flipped_i) {
          continue;
        }
        target = true;
        if ((y & w_mask) == (x & w_mask)) {
          kept = true;
          break;
        }
      }
      if (target && !kept) {
        violate(report, {bits::display(x, n), "W=" + bits::display(w_mask, n), "I=" + bits::display(i_mask, n)},
                "I can be flipped only by moving W");
      }
    }
  }
  report.detail = std::to_string(checked) + " (W, I) pairs";
  return report;
}

CheckReport check_attractor_bound(const BooleanNetwork& net, const std::string& fingerprint, const Limits& limits) {
  auto report = make_report("Thm.bound-attrs", fingerprint);
  const auto pfvs = minimum_pfvs(global_interaction_graph(net, limits), limits);
  const auto found = attractors(net, limits);
  const std::uint64_t bound = std::uint64_t{1} << pfvs.size();
  report.detail = std::to_string(found.size()) + " attractors, bound " + std::to_string(bound);
  if (found.size() > bound) {
    std::vector<std::string> witness;
    for (const auto& a : found) {
      witness.push_back(describe(a.states, net.size()));
    }
    violate(report, witness, report.detail);
    return report;
  }

  // The elimination pipeline: the PFVS never grows and attractors never shrink.
  const AttractorBound pipeline = attractor_bound(net, limits);
  const auto residual_pfvs = minimum_pfvs(global_interaction_graph(pipeline.residual, limits), limits);
  const auto residual_found = attractors(pipeline.residual, limits);
  if (pipeline.bound != bound || residual_pfvs.size() > pfvs.size() || residual_found.size() < found.size() ||
      residual_found.size() > (std::uint64_t{1} << residual_pfvs.size())) {
    std::string order;
    for (const auto& name : pipeline.order) {
      order += (order.empty() ? "" : ",") + name;
    }
    violate(report, {"order=" + order, "residual attractors=" + std::to_string(residual_found.size())},
            "elimination pipeline inconsistent with the bound");
  }
  return report;
}

SuiteInstance suite_instance(const SuiteOptions& options, unsigned k) {
  if (options.min_components < 2 || options.max_components < options.min_components) {
    throw InvalidArgument("suite needs 2 <= min_components <= max_components");
  }
  const unsigned span = options.max_components - options.min_components + 1;
  constexpr unsigned kRegulatorLimits[3] = {0, 2, 3};
  const std::uint64_t seed = options.seed + k;
  const unsigned n = options.min_components + k % span;
  const unsigned v = static_cast<unsigned>(mix(seed, 7) % n);
  const unsigned max_regulators = kRegulatorLimits[(k / span) % 3];
  BooleanNetwork net = random_network(n, seed, RandomConstraint::no_positive_loop_at(v), max_regulators);
  std::string fp = "seed=" + std::to_string(seed) + " n=" + std::to_string(n) + " v=" + net.name(v) +
                   " k=" + std::to_string(max_regulators);
  return {std::move(net), v, std::move(fp)};
}

SuiteSummary run_property_suite(const SuiteOptions& options) {
  if (options.min_components < 2 || options.max_components < options.min_components) {
    throw InvalidArgument("suite needs 2 <= min_components <= max_components");
  }
  SuiteSummary summary;
  for (unsigned k = 0; k < options.networks; ++k) {
    const SuiteInstance instance = suite_instance(options, k);
    const BooleanNetwork& net = instance.net;
    const unsigned v = instance.v;
    const std::string& fp = instance.fingerprint;

    std::vector<CheckReport> reports = check_reduction_statements(net, v, fp);
    for (auto& r : check_ig_statements(net, v, fp)) {
      reports.push_back(std::move(r));
    }
    reports.push_back(check_paths_lemma(net, 16, fp));
    auto bound = check_attractor_bound(net, fp);
    const auto pfvs = minimum_pfvs(global_interaction_graph(net));
    if (bound.passed && attractors(net).size() == (std::uint64_t{1} << pfvs.size())) {
      ++summary.tight_bounds;
      if (summary.tight_examples.size() < 5) {
        summary.tight_examples.push_back(fp);
      }
    }
    reports.push_back(std::move(bound));

    ++summary.networks;
    summary.checks += reports.size();
    for (auto& r : reports) {
      if (!r.passed) {
        summary.failures.push_back(std::move(r));
      }
    }
  }
  // Seeds were visited in order, so a stable sort keeps them ascending.
  std::stable_sort(summary.failures.begin(), summary.failures.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.statement < b.statement; });
  return summary;
}

SuiteSummary run_shape_suite(unsigned networks, std::uint64_t seed, unsigned max_components) {
  if (max_components < 2) {
    throw InvalidArgument("shaped networks need at least 2 components");
  }
  SuiteSummary summary;
  for (unsigned k = 0; k < networks; ++k) {
    const std::uint64_t s = seed + k;
    std::mt19937_64 rng(mix(s, 99));
    const unsigned n = 2 + static_cast<unsigned>(rng() % (max_components - 1));
    ShapeSizes sizes;
    for (unsigned j = 0; j + 1 < n; ++j) {
      switch (rng() % 3) {
        case 0:
          ++sizes.upstream;
          break;
        case 1:
          ++sizes.regulators;
          break;
        default:
          ++sizes.downstream;
          break;
      }
    }
    const unsigned max_regulators = 1 + static_cast<unsigned>(rng() % 3);
    const BooleanNetwork net = random_network(n, s, RandomConstraint::shaped(sizes), max_regulators);
    const ShapePartition p = shaped_partition(sizes);
    const std::string fp = "seed=" + std::to_string(s) + " U1=" + std::to_string(sizes.upstream) +
                           " U2=" + std::to_string(sizes.regulators) + " W=" + std::to_string(sizes.downstream);
    ++summary.networks;

    auto certified = make_report("Shape.certified", fp);
    if (!matches_shape(global_interaction_graph(net), p)) {
      violate(certified, {render_network(net)}, "generator produced an off-shape network");
    }
    auto preserved = attractors_preserved(net, p.v);
    preserved.report.statement = "Thm.pres-attr";
    preserved.report.fingerprint = fp;
    summary.checks += 2;
    for (auto* r : {&certified, &preserved.report}) {
      if (!r->passed) {
        summary.failures.push_back(*r);
      }
    }
  }
  return summary;
}

}  // namespace bnelim
