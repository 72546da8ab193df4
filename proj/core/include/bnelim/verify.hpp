#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bnelim/igraph.hpp"
#include "bnelim/limits.hpp"
#include "bnelim/network.hpp"

namespace bnelim {

/// Outcome of checking one statement on one network. A failing report always
/// carries the states or transitions that violate the statement.
struct CheckReport {
  std::string statement;    // e.g. "Lemma2.iii", "Thm.fixed-points.v", "Cor.i"
  std::string fingerprint;  // seed or source hash
  bool passed = true;
  std::vector<std::string> witness;
  std::string detail;
};

/// Components split into U1, U2, {v}, W.
struct ShapePartition {
  std::vector<unsigned> upstream;     // U1
  std::vector<unsigned> regulators;   // U2
  unsigned v = 0;
  std::vector<unsigned> downstream;   // W
};

struct ShapeSizes {
  unsigned upstream = 0;
  unsigned regulators = 0;
  unsigned downstream = 0;

  unsigned components() const { return upstream + regulators + 1 + downstream; }
};

/// Statements about eliminating v, each by exhaustive enumeration: the four
/// representative-map properties (Lemma2.*), the six fixed-point and trap-set
/// properties (Thm.fixed-points.*) and the three census bounds (Cor.*). n <= 8.
std::vector<CheckReport> check_reduction_statements(const BooleanNetwork& net, unsigned v,
                                                    const std::string& fingerprint = {});

/// Interaction-graph statements for eliminating v: negative and positive loop
/// propositions, edge and path preservation, and the PFVS lemma.
std::vector<CheckReport> check_ig_statements(const BooleanNetwork& net, unsigned v,
                                             const std::string& fingerprint = {},
                                             const Limits& limits = {});

struct PreservationResult {
  bool preserved = false;
  CheckReport report;
};

/// Attractor preservation: (i) every attractor projects onto an attractor of
/// the reduced network; (ii) every reduced attractor is the projection of
/// exactly one attractor.
PreservationResult attractors_preserved(const BooleanNetwork& net, unsigned v,
                                        const Limits& limits = {});

/// Allowed edges: inside U1, U2 or W; U1->U2, U1->W, U2->v, v->W and the
/// negative loop at v. Throws InvalidArgument when p is not a partition.
bool matches_shape(const SignedDigraph& g, const ShapePartition& p);

/// Tries the canonical partition (W = forward closure of v, U2 = regulators of
/// v, U1 = rest), then every assignment when |V| <= 12.
std::optional<ShapePartition> find_shape_partition(const SignedDigraph& g, unsigned v);

/// Mediator-chain network on u, v1..v{n+1}, w1..w{n+2} whose only attractor is
/// the all-ones fixed point, while eliminating any v_i adds an attractor.
BooleanNetwork chain_counterexample(unsigned n, const Limits& limits = {});

struct RandomConstraint {
  enum class Kind { none, no_positive_loop_at, no_loop_at, shaped };

  Kind kind = Kind::none;
  unsigned v = 0;
  ShapeSizes sizes;

  static RandomConstraint none() { return {}; }
  static RandomConstraint no_positive_loop_at(unsigned v) { return {Kind::no_positive_loop_at, v, {}}; }
  static RandomConstraint no_loop_at(unsigned v) { return {Kind::no_loop_at, v, {}}; }
  static RandomConstraint shaped(ShapeSizes sizes) { return {Kind::shaped, sizes.upstream + sizes.regulators, sizes}; }
};

/// Components of a shaped network are laid out U1, U2, v, W.
ShapePartition shaped_partition(ShapeSizes sizes);

/// Deterministic in (n, seed, constraint, max_regulators). Each function reads
/// at most max_regulators components (0 means no limit); regulators are drawn
/// from the components the constraint allows.
BooleanNetwork random_network(unsigned n, std::uint64_t seed, const RandomConstraint& constraint = {},
                              unsigned max_regulators = 0, const Limits& limits = {});

/// Path-projection property on disjoint W, I with no interaction-graph path
/// from W to I: a reachable y with y_I = x̄_I implies a reachable z with
/// z_I = x̄_I and z_W = x_W. Checks up to `max_pairs` admissible (W, I) pairs.
CheckReport check_paths_lemma(const BooleanNetwork& net, unsigned max_pairs = 64,
                              const std::string& fingerprint = {});

/// |attractors| <= 2^|I| for a minimum PFVS I, and attractor_bound agrees.
CheckReport check_attractor_bound(const BooleanNetwork& net, const std::string& fingerprint = {},
                                  const Limits& limits = {});

struct SuiteOptions {
  unsigned networks = 500;
  std::uint64_t seed = 1;
  unsigned min_components = 3;
  unsigned max_components = 6;
};

struct SuiteSummary {
  unsigned networks = 0;
  std::vector<CheckReport> failures;
  std::size_t checks = 0;
  unsigned tight_bounds = 0;
  std::vector<std::string> tight_examples;
};

struct SuiteInstance {
  BooleanNetwork net;
  unsigned v = 0;
  std::string fingerprint;  // "seed=.. n=.. v=.. k=.."
};

/// The k-th network of the property suite: n cycles through the component
/// range, v has no positive loop, regulator limits cycle through {any, 2, 3}.
SuiteInstance suite_instance(const SuiteOptions& options, unsigned k);

/// For each seed: a network with no positive loop at a chosen v, all
/// reduction and interaction-graph statements, the PFVS bound and the paths
/// property.
SuiteSummary run_property_suite(const SuiteOptions& options);

/// Shaped networks: matches_shape certified, attractors_preserved required.
SuiteSummary run_shape_suite(unsigned networks, std::uint64_t seed, unsigned max_components = 7);

}  // namespace bnelim
