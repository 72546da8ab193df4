#include "bnelim/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "bnelim/errors.hpp"

namespace bnelim {

namespace {

void check_width(const BooleanNetwork& net, const State& x) {
  if (x.width() != net.size()) {
    throw InvalidArgument("state width " + std::to_string(x.width()) + " does not match " +
                          std::to_string(net.size()) + " components");
  }
}

}  // namespace

TransitionGraph::TransitionGraph(const BooleanNetwork& net, const Limits& limits) : width_(net.size()) {
  require_within("state transition graph", net.size(), limits.max_stg_components);
  moves_.resize(net.state_count());
  for (std::uint64_t x = 0; x < moves_.size(); ++x) {
    moves_[x] = static_cast<std::uint32_t>(net.image(x) ^ x);
  }
}

std::vector<std::uint64_t> TransitionGraph::successors(std::uint64_t x) const {
  std::vector<std::uint64_t> out;
  for (unsigned i = 0; i < width_; ++i) {
    if (has_transition(x, i)) {
      out.push_back(x ^ (std::uint64_t{1} << i));
    }
  }
  return out;
}

std::uint64_t TransitionGraph::edge_count() const {
  std::uint64_t total = 0;
  for (auto m : moves_) {
    total += static_cast<std::uint64_t>(std::popcount(m));
  }
  return total;
}

bool Attractor::contains(std::uint64_t x) const { return std::binary_search(states.begin(), states.end(), x); }

std::optional<unsigned> Attractor::two_state_direction() const {
  if (states.size() != 2) {
    return std::nullopt;
  }
  const std::uint64_t diff = states[0] ^ states[1];
  if (std::popcount(diff) != 1) {
    return std::nullopt;
  }
  return static_cast<unsigned>(std::countr_zero(diff));
}

std::vector<State> Attractor::to_states() const {
  std::vector<State> out;
  out.reserve(states.size());
  for (auto x : states) {
    out.emplace_back(width, x);
  }
  return out;
}

std::vector<State> async_successors(const BooleanNetwork& net, const State& x) {
  check_width(net, x);
  const std::uint64_t moves = net.image(x.bits()) ^ x.bits();
  std::vector<State> out;
  for (unsigned i = 0; i < net.size(); ++i) {
    if ((moves >> i) & 1U) {
      out.emplace_back(net.size(), x.bits() ^ (std::uint64_t{1} << i));
    }
  }
  return out;
}

TransitionGraph build_stg(const BooleanNetwork& net, const Limits& limits) { return TransitionGraph(net, limits); }

std::vector<Attractor> attractors(const TransitionGraph& stg) {
  // Iterative Tarjan; an SCC is terminal when no member has a transition
  // leaving it. Successors are tried in increasing component order.
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  const std::uint64_t count = stg.state_count();
  const unsigned width = stg.width();
  std::vector<std::uint32_t> order(count, kUnvisited);
  std::vector<std::uint32_t> low(count, 0);
  std::vector<bool> on_stack(count, false);
  std::vector<std::uint64_t> stack;

  struct Frame {
    std::uint64_t state;
    unsigned next;
  };
  std::vector<Frame> frames;
  std::uint32_t counter = 0;
  std::vector<Attractor> found;

  auto open = [&](std::uint64_t x) {
    order[x] = low[x] = counter++;
    stack.push_back(x);
    on_stack[x] = true;
    frames.push_back(Frame{x, 0});
  };

  for (std::uint64_t root = 0; root < count; ++root) {
    if (order[root] != kUnvisited) {
      continue;
    }
    open(root);
    while (!frames.empty()) {
      Frame& frame = frames.back();
      const std::uint64_t x = frame.state;
      bool descended = false;
      while (frame.next < width) {
        const unsigned i = frame.next++;
        if (!stg.has_transition(x, i)) {
          continue;
        }
        const std::uint64_t y = x ^ (std::uint64_t{1} << i);
        if (order[y] == kUnvisited) {
          open(y);
          descended = true;
          break;
        }
        if (on_stack[y]) {
          low[x] = std::min(low[x], order[y]);
        }
      }
      if (descended) {
        continue;
      }

      if (low[x] == order[x]) {
        std::vector<std::uint64_t> members;
        std::uint64_t member = 0;
        do {
          member = stack.back();
          stack.pop_back();
          on_stack[member] = false;
          members.push_back(member);
        } while (member != x);
        std::sort(members.begin(), members.end());
        bool terminal = true;
        for (auto z : members) {
          for (unsigned i = 0; i < width && terminal; ++i) {
            if (stg.has_transition(z, i) &&
                !std::binary_search(members.begin(), members.end(), z ^ (std::uint64_t{1} << i))) {
              terminal = false;
            }
          }
          if (!terminal) {
            break;
          }
        }
        if (terminal) {
          found.push_back(Attractor{width, std::move(members)});
        }
      }
      frames.pop_back();
      if (!frames.empty()) {
        const std::uint64_t parent = frames.back().state;
        low[parent] = std::min(low[parent], low[x]);
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const Attractor& a, const Attractor& b) { return a.states.front() < b.states.front(); });
  return found;
}

std::vector<Attractor> attractors(const BooleanNetwork& net, const Limits& limits) {
  return attractors(TransitionGraph(net, limits));
}

std::vector<State> fixed_points(const BooleanNetwork& net, const Limits& limits) {
  require_within("fixed point scan", net.size(), limits.max_table_components);
  std::vector<State> out;
  for (std::uint64_t x = 0; x < net.state_count(); ++x) {
    if (net.image(x) == x) {
      out.emplace_back(net.size(), x);
    }
  }
  return out;
}

bool is_trap_set(const TransitionGraph& stg, std::span<const std::uint64_t> states) {
  std::vector<std::uint64_t> sorted(states.begin(), states.end());
  std::sort(sorted.begin(), sorted.end());
  for (auto x : sorted) {
    if (x >= stg.state_count()) {
      throw InvalidArgument("state " + std::to_string(x) + " outside the state space");
    }
    for (unsigned i = 0; i < stg.width(); ++i) {
      if (stg.has_transition(x, i) &&
          !std::binary_search(sorted.begin(), sorted.end(), x ^ (std::uint64_t{1} << i))) {
        return false;
      }
    }
  }
  return true;
}

bool is_trap_set(const BooleanNetwork& net, std::span<const State> states) {
  std::vector<std::uint64_t> sorted;
  sorted.reserve(states.size());
  for (const auto& s : states) {
    check_width(net, s);
    sorted.push_back(s.bits());
  }
  std::sort(sorted.begin(), sorted.end());
  for (auto x : sorted) {
    const std::uint64_t moves = net.image(x) ^ x;
    for (unsigned i = 0; i < net.size(); ++i) {
      if (((moves >> i) & 1U) &&
          !std::binary_search(sorted.begin(), sorted.end(), x ^ (std::uint64_t{1} << i))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::uint64_t> reachable(const TransitionGraph& stg, std::uint64_t x) {
  std::vector<bool> seen(stg.state_count(), false);
  std::vector<std::uint64_t> frontier{x};
  std::vector<std::uint64_t> out;
  seen[x] = true;
  while (!frontier.empty()) {
    const std::uint64_t z = frontier.back();
    frontier.pop_back();
    out.push_back(z);
    for (unsigned i = 0; i < stg.width(); ++i) {
      if (stg.has_transition(z, i)) {
        const std::uint64_t y = z ^ (std::uint64_t{1} << i);
        if (!seen[y]) {
          seen[y] = true;
          frontier.push_back(y);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<State> reachable(const BooleanNetwork& net, const State& x, const Limits& limits) {
  check_width(net, x);
  const TransitionGraph stg(net, limits);
  std::vector<State> out;
  for (auto z : reachable(stg, x.bits())) {
    out.emplace_back(net.size(), z);
  }
  return out;
}

AttractorCensus census(std::span<const Attractor> found, unsigned width) {
  AttractorCensus c;
  c.two_state_by_component.assign(width, 0);
  for (const auto& a : found) {
    if (a.is_fixed_point()) {
      ++c.fixed_points;
      continue;
    }
    ++c.cyclic;
    if (auto i = a.two_state_direction()) {
      ++c.two_state_by_component[*i];
    }
  }
  return c;
}

AttractorCensus census(const BooleanNetwork& net, const Limits& limits) {
  const auto found = attractors(net, limits);
  return census(found, net.size());
}

std::string stg_to_dot(const TransitionGraph& stg) {
  std::string out = "digraph stg {\n";
  for (std::uint64_t x = 0; x < stg.state_count(); ++x) {
    out += "  s" + std::to_string(x) + " [label=\"" + bits::display(x, stg.width()) + "\"];\n";
  }
  for (std::uint64_t x = 0; x < stg.state_count(); ++x) {
    for (auto y : stg.successors(x)) {
      out += "  s" + std::to_string(x) + " -> s" + std::to_string(y) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace bnelim
