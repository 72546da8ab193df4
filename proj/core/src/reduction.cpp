#include "bnelim/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "bnelim/errors.hpp"
#include "bnelim/igraph.hpp"

namespace bnelim {

namespace {

void check_component(const BooleanNetwork& net, unsigned v) {
  if (v >= net.size()) {
    throw InvalidArgument("component index " + std::to_string(v) + " out of range for " +
                          std::to_string(net.size()) + " components");
  }
}

unsigned lookup(const BooleanNetwork& net, std::string_view name) {
  if (auto k = net.index_of(name)) {
    return *k;
  }
  throw InvalidArgument("unknown component '" + std::string(name) + "'");
}

// f_v with x_v fixed to `a`, as a function of all n components.
TruthTable restricted_update(const BooleanNetwork& net, unsigned v, bool a) {
  const TruthTable& fv = net.table(v);
  TruthTable out(net.size());
  for (std::uint64_t x = 0; x < net.state_count(); ++x) {
    out.set(x, fv[bits::set(x, v, a)]);
  }
  return out;
}

std::string describe_substitution(const BooleanNetwork& net, unsigned v, EliminationMode mode) {
  if (mode == EliminationMode::classical) {
    const auto& fn = net.function(v);
    const Expr e = fn.source() ? *fn.source() : synthesize_dnf(fn.table());
    return to_string(e, net.names());
  }
  const std::string e0 = to_string(synthesize_dnf(restricted_update(net, v, false)), net.names());
  const std::string e1 = to_string(synthesize_dnf(restricted_update(net, v, true)), net.names());
  return "S0: " + e0 + "; S1: " + e1;
}

}  // namespace

std::string to_string(EliminationMode mode) {
  switch (mode) {
    case EliminationMode::classical:
      return "classical";
    case EliminationMode::generalized:
      return "generalized";
    case EliminationMode::forbidden:
      return "forbidden";
  }
  return "unknown";
}

EliminationMode can_eliminate(const BooleanNetwork& net, unsigned v) {
  check_component(net, v);
  const std::uint8_t loop = influence_signs(net.table(v), v);
  if (loop & kPositiveBit) {
    return EliminationMode::forbidden;
  }
  return loop == 0 ? EliminationMode::classical : EliminationMode::generalized;
}

RepresentativeMaps::RepresentativeMaps(const BooleanNetwork& net, unsigned v)
    : net_(&net), v_(v), width_(net.size()) {
  if (can_eliminate(net, v) == EliminationMode::forbidden) {
    throw ForbiddenElimination(net.name(v));
  }
}

std::uint64_t RepresentativeMaps::representative(bool a, std::uint64_t x) const {
  return bits::set(x, v_, net_->value(v_, bits::set(x, v_, a)));
}

std::uint64_t RepresentativeMaps::section(bool a, std::uint64_t y) const {
  return representative(a, bits::insert(y, v_, a));
}

State representative(const BooleanNetwork& net, unsigned v, bool a, const State& x) {
  if (x.width() != net.size()) {
    throw InvalidArgument("state width does not match the network");
  }
  check_component(net, v);
  const RepresentativeMaps maps(net, v);
  return State(net.size(), maps.representative(a, x.bits()));
}

State section(const BooleanNetwork& net, unsigned v, bool a, const State& y) {
  check_component(net, v);
  if (y.width() + 1 != net.size()) {
    throw InvalidArgument("section expects a state of width n-1");
  }
  const RepresentativeMaps maps(net, v);
  return State(net.size(), maps.section(a, y.bits()));
}

ReductionResult eliminate(const BooleanNetwork& net, unsigned v) {
  check_component(net, v);
  if (net.size() == 1) {
    throw InvalidArgument("cannot eliminate the only component of a network");
  }
  const EliminationMode mode = can_eliminate(net, v);
  if (mode == EliminationMode::forbidden) {
    throw ForbiddenElimination(net.name(v));
  }
  const RepresentativeMaps maps(net, v);
  const unsigned m = net.size() - 1;
  const std::uint64_t reduced_states = std::uint64_t{1} << m;

  std::vector<TruthTable> tables(m, TruthTable(m));
  for (std::uint64_t y = 0; y < reduced_states; ++y) {
    const std::uint64_t img0 = net.image(maps.section(false, y));
    const std::uint64_t img1 = net.image(maps.section(true, y));
    for (unsigned k = 0; k < m; ++k) {
      const unsigned original = k < v ? k : k + 1;
      const bool a = bits::get(img0, original);
      const bool b = bits::get(img1, original);
      tables[k].set(y, bits::get(y, k) ? (a && b) : (a || b));
    }
  }

  if (mode == EliminationMode::classical) {
    // pi . f . S with S(y) = y lifted and x_v := f_v, independent of the cases above.
    for (std::uint64_t y = 0; y < reduced_states; ++y) {
      const std::uint64_t lifted = bits::insert(y, v, false);
      const std::uint64_t s = bits::set(lifted, v, net.value(v, lifted));
      const std::uint64_t expected = bits::remove(net.image(s), v);
      for (unsigned k = 0; k < m; ++k) {
        if (tables[k][y] != bits::get(expected, k)) {
          throw std::logic_error("classical and generalized elimination disagree");
        }
      }
    }
  }

  std::vector<std::string> names;
  std::vector<std::optional<unsigned>> index_map;
  for (unsigned k = 0; k < net.size(); ++k) {
    if (k == v) {
      index_map.push_back(std::nullopt);
    } else {
      index_map.push_back(static_cast<unsigned>(names.size()));
      names.push_back(net.name(k));
    }
  }
  return ReductionResult{BooleanNetwork::from_tables(std::move(names), std::move(tables)),
                         net.name(v),
                         v,
                         std::move(index_map),
                         mode,
                         describe_substitution(net, v, mode)};
}

ReductionResult eliminate(const BooleanNetwork& net, std::string_view name) {
  return eliminate(net, lookup(net, name));
}

std::vector<std::optional<unsigned>> ReductionChain::index_map() const {
  std::vector<std::optional<unsigned>> map;
  for (unsigned k = 0; k < original.size(); ++k) {
    map.emplace_back(k);
  }
  for (const auto& step : steps) {
    for (auto& entry : map) {
      if (entry) {
        entry = step.index_map[*entry];
      }
    }
  }
  return map;
}

ReductionChain eliminate_sequence(const BooleanNetwork& net, std::span<const std::string> names) {
  ReductionChain chain{net, {}};
  for (const auto& name : names) {
    const BooleanNetwork& current = chain.result();
    const unsigned v = lookup(current, name);
    chain.steps.push_back(eliminate(current, v));
  }
  return chain;
}

AttractorBound attractor_bound(const BooleanNetwork& net, const Limits& limits) {
  AttractorBound out{minimum_pfvs(global_interaction_graph(net, limits), limits), 1, {}, net};
  out.bound = std::uint64_t{1} << out.pfvs.size();

  while (out.residual.size() > 1) {
    const SignedDigraph g = global_interaction_graph(out.residual, limits);
    const auto minimum = all_minimum_pfvs(g, limits);
    if (minimum.front().size() == out.residual.size()) {
      break;
    }
    std::optional<unsigned> choice;
    for (unsigned u = 0; u < out.residual.size() && !choice; ++u) {
      bool outside = false;
      for (const auto& set : minimum) {
        if (std::find(set.begin(), set.end(), u) == set.end()) {
          outside = true;
          break;
        }
      }
      if (outside && can_eliminate(out.residual, u) != EliminationMode::forbidden) {
        choice = u;
      }
    }
    if (!choice) {
      break;
    }
    out.order.push_back(out.residual.name(*choice));
    out.residual = eliminate(out.residual, *choice).reduced;
  }
  return out;
}

}  // namespace bnelim
