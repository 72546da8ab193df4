#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bnelim/limits.hpp"
#include "bnelim/network.hpp"
#include "bnelim/state.hpp"

namespace bnelim {

enum class EliminationMode { classical, generalized, forbidden };

std::string to_string(EliminationMode mode);

/// classical: no loop at v; generalized: only a negative loop at v;
/// forbidden: some context has f_v(x^{v=0}) = 0 and f_v(x^{v=1}) = 1.
EliminationMode can_eliminate(const BooleanNetwork& net, unsigned v);

/// The maps R^a (state to representative) and their sections S^a for a
/// component without positive autoregulation.
class RepresentativeMaps {
 public:
  /// Throws ForbiddenElimination on a positive loop at v.
  RepresentativeMaps(const BooleanNetwork& net, unsigned v);

  unsigned eliminated() const { return v_; }
  unsigned width() const { return width_; }

  /// R^a(x): x with component v replaced by f_v(x^{v=a}).
  std::uint64_t representative(bool a, std::uint64_t x) const;
  /// S^a(y) for y of width n-1; pi(S^a(y)) = y.
  std::uint64_t section(bool a, std::uint64_t y) const;

 private:
  const BooleanNetwork* net_;
  unsigned v_;
  unsigned width_;
};

State representative(const BooleanNetwork& net, unsigned v, bool a, const State& x);
State section(const BooleanNetwork& net, unsigned v, bool a, const State& y);

struct ReductionResult {
  BooleanNetwork reduced;
  std::string eliminated_name;
  unsigned eliminated_index = 0;
  /// Original index -> reduced index; nullopt at the eliminated component.
  std::vector<std::optional<unsigned>> index_map;
  EliminationMode mode = EliminationMode::classical;
  /// What replaced x_v, in terms of the original names. Classical mode: the
  /// update expression of v. Generalized mode: "S0: e0; S1: e1", the update of v
  /// with x_v fixed to 0 and to 1.
  std::string substitution;
};

/// Reduced network f~ with f~_i(x) = f_i(S0(x)) & f_i(S1(x)) when x_i = 1 and
/// f_i(S0(x)) | f_i(S1(x)) when x_i = 0. In classical mode the result is also
/// computed as pi . f . S and the two are required to agree.
ReductionResult eliminate(const BooleanNetwork& net, unsigned v);
ReductionResult eliminate(const BooleanNetwork& net, std::string_view name);

struct ReductionChain {
  BooleanNetwork original;
  std::vector<ReductionResult> steps;

  const BooleanNetwork& result() const { return steps.empty() ? original : steps.back().reduced; }
  /// Original index -> index in result().
  std::vector<std::optional<unsigned>> index_map() const;
};

/// Left fold of eliminate over component names. Throws ForbiddenElimination
/// naming the first component whose elimination is forbidden at its turn.
ReductionChain eliminate_sequence(const BooleanNetwork& net, std::span<const std::string> names);

struct AttractorBound {
  std::vector<unsigned> pfvs;  // minimum PFVS of the original network
  std::uint64_t bound = 1;     // 2^|pfvs|
  std::vector<std::string> order;  // eliminated components, in order
  BooleanNetwork residual;
};

/// Eliminates, one at a time, the smallest-index component lying outside some
/// minimum positive feedback vertex set of the current network, until every
/// minimum PFVS is the whole vertex set (or one component remains).
AttractorBound attractor_bound(const BooleanNetwork& net, const Limits& limits = {});

}  // namespace bnelim
