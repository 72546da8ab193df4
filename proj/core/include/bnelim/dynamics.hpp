#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bnelim/limits.hpp"
#include "bnelim/network.hpp"
#include "bnelim/state.hpp"

namespace bnelim {

/// Asynchronous state transition graph over all 2^n states. For each state
/// the graph stores the mask of components whose update differs from the
/// current value; the successors of x are x ^ (1 << i) for each set bit i.
class TransitionGraph {
 public:
  TransitionGraph(const BooleanNetwork& net, const Limits& limits = {});

  unsigned width() const { return width_; }
  std::uint64_t state_count() const { return moves_.size(); }

  std::uint32_t moves(std::uint64_t x) const { return moves_[x]; }
  bool has_transition(std::uint64_t x, unsigned component) const {
    return ((moves_[x] >> component) & 1U) != 0;
  }
  std::vector<std::uint64_t> successors(std::uint64_t x) const;
  std::uint64_t edge_count() const;

 private:
  unsigned width_;
  std::vector<std::uint32_t> moves_;
};

struct Attractor {
  unsigned width = 0;
  std::vector<std::uint64_t> states;  // ascending

  bool is_fixed_point() const { return states.size() == 1; }
  bool contains(std::uint64_t x) const;
  /// Component i when the attractor is exactly {x, x̄^i}.
  std::optional<unsigned> two_state_direction() const;
  std::vector<State> to_states() const;
};

struct AttractorCensus {
  unsigned fixed_points = 0;                  // S(f)
  unsigned cyclic = 0;                        // A(f)
  std::vector<unsigned> two_state_by_component;  // A(f,i)

  unsigned total() const { return fixed_points + cyclic; }
};

std::vector<State> async_successors(const BooleanNetwork& net, const State& x);

TransitionGraph build_stg(const BooleanNetwork& net, const Limits& limits = {});

/// Terminal strongly connected components, ordered by smallest state.
std::vector<Attractor> attractors(const TransitionGraph& stg);
std::vector<Attractor> attractors(const BooleanNetwork& net, const Limits& limits = {});

/// All x with f(x) = x, ascending. Scans tables; no transition graph needed.
std::vector<State> fixed_points(const BooleanNetwork& net, const Limits& limits = {});

bool is_trap_set(const TransitionGraph& stg, std::span<const std::uint64_t> states);
bool is_trap_set(const BooleanNetwork& net, std::span<const State> states);

/// Forward-closed set generated by x, ascending.
std::vector<std::uint64_t> reachable(const TransitionGraph& stg, std::uint64_t x);
std::vector<State> reachable(const BooleanNetwork& net, const State& x, const Limits& limits = {});

AttractorCensus census(std::span<const Attractor> found, unsigned width);
AttractorCensus census(const BooleanNetwork& net, const Limits& limits = {});

std::string stg_to_dot(const TransitionGraph& stg);

}  // namespace bnelim
