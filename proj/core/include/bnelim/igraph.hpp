#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bnelim/limits.hpp"
#include "bnelim/network.hpp"

namespace bnelim {

enum class Sign : int { negative = -1, positive = 1 };

inline Sign operator*(Sign a, Sign b) {
  return static_cast<int>(a) * static_cast<int>(b) > 0 ? Sign::positive : Sign::negative;
}

// Two-bit set of signs.
inline constexpr std::uint8_t kPositiveBit = 1;
inline constexpr std::uint8_t kNegativeBit = 2;
inline std::uint8_t sign_bit(Sign s) { return s == Sign::positive ? kPositiveBit : kNegativeBit; }

std::string to_string(Sign s);

struct SignedEdge {
  unsigned source;
  unsigned target;
  Sign sign;

  friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

/// Signed directed graph with at most one edge per (source, target, sign),
/// so at most two parallel edges between an ordered pair.
class SignedDigraph {
 public:
  explicit SignedDigraph(std::vector<std::string> names);
  SignedDigraph(std::vector<std::string> names, std::span<const SignedEdge> edges);

  unsigned vertex_count() const { return static_cast<unsigned>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(unsigned v) const { return names_.at(v); }

  void add_edge(unsigned source, unsigned target, Sign sign);

  /// Sorted by (source, target, sign).
  std::vector<SignedEdge> edges() const;
  std::size_t edge_count() const;

  std::uint8_t signs(unsigned source, unsigned target) const { return masks_[source * vertex_count() + target]; }
  bool has_edge(unsigned source, unsigned target) const { return signs(source, target) != 0; }
  bool has_edge(unsigned source, unsigned target, Sign sign) const {
    return (signs(source, target) & sign_bit(sign)) != 0;
  }

  friend bool operator==(const SignedDigraph&, const SignedDigraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::uint8_t> masks_;
};

struct SignedCycle {
  std::vector<unsigned> vertices;  // closed: front() == back(), front() is the minimum
  std::vector<Sign> edge_signs;
  Sign sign = Sign::positive;

  std::uint64_t support() const;
  std::size_t length() const { return edge_signs.size(); }
};

/// Signs with which component j can influence a function with table t:
/// kPositiveBit when some context has t(x^{j=0}) = 0 and t(x^{j=1}) = 1,
/// kNegativeBit for the reverse.
std::uint8_t influence_signs(const TruthTable& t, unsigned j);

SignedDigraph local_interaction_graph(const BooleanNetwork& net, const State& x);
SignedDigraph global_interaction_graph(const BooleanNetwork& net, const Limits& limits = {});

bool has_loop(const SignedDigraph& g, unsigned v, std::optional<Sign> sign = std::nullopt);

/// Every elementary cycle once, rotated to start at its smallest vertex.
/// A cycle through parallel edges of both signs is reported once per sign
/// choice.
std::vector<SignedCycle> elementary_cycles(const SignedDigraph& g, const Limits& limits = {});

/// Supports of the positive elementary cycles, deduplicated and reduced to
/// inclusion-minimal sets.
std::vector<std::uint64_t> positive_cycle_supports(const SignedDigraph& g, const Limits& limits = {});

bool is_pfvs(const SignedDigraph& g, std::span<const unsigned> vertices, const Limits& limits = {});

/// Minimum positive feedback vertex set; lexicographically smallest among
/// those of minimum size.
std::vector<unsigned> minimum_pfvs(const SignedDigraph& g, const Limits& limits = {});

/// All positive feedback vertex sets of minimum size, in lexicographic order.
std::vector<std::vector<unsigned>> all_minimum_pfvs(const SignedDigraph& g, const Limits& limits = {});

/// Signs of elementary paths from `source` of length >= 1, per target: entry t
/// is a mask of kPositiveBit/kNegativeBit. Entry `source` describes cycles
/// through it; with include_loops false, length-1 loops are left out.
std::vector<std::uint8_t> elementary_path_signs(const SignedDigraph& g, unsigned source,
                                                bool include_loops = true);

/// Elementary path from j to i of the given sign. For j == i this is a cycle
/// through j, loops included.
bool has_signed_path(const SignedDigraph& g, unsigned j, unsigned i, Sign sign);

std::string igraph_to_dot(const SignedDigraph& g);

}  // namespace bnelim
