#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bnelim/expr.hpp"
#include "bnelim/limits.hpp"
#include "bnelim/state.hpp"
#include "bnelim/truth_table.hpp"

namespace bnelim {

class UpdateFunction {
 public:
  explicit UpdateFunction(TruthTable table, std::optional<Expr> source = std::nullopt);

  const TruthTable& table() const { return table_; }
  const std::optional<Expr>& source() const { return source_; }

 private:
  TruthTable table_;
  std::optional<Expr> source_;
};

/// f: B^n -> B^n with named components. Declaration order fixes the
/// component indices. Immutable once built.
class BooleanNetwork {
 public:
  BooleanNetwork(std::vector<std::string> names, std::vector<UpdateFunction> functions);

  static BooleanNetwork from_tables(std::vector<std::string> names, std::vector<TruthTable> tables);
  static BooleanNetwork from_expressions(std::vector<std::string> names, std::vector<Expr> sources,
                                         const Limits& limits = {});

  unsigned size() const { return static_cast<unsigned>(names_.size()); }
  std::uint64_t state_count() const { return std::uint64_t{1} << size(); }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(unsigned k) const { return names_.at(k); }
  std::optional<unsigned> index_of(std::string_view name) const;

  const UpdateFunction& function(unsigned k) const { return functions_.at(k); }
  const TruthTable& table(unsigned k) const { return functions_[k].table(); }

  bool value(unsigned k, std::uint64_t x) const { return functions_[k].table()[x]; }
  /// Integer encoding of f(x).
  std::uint64_t image(std::uint64_t x) const;

  friend bool same_tables(const BooleanNetwork& a, const BooleanNetwork& b);

 private:
  std::vector<std::string> names_;
  std::vector<UpdateFunction> functions_;
};

bool same_tables(const BooleanNetwork& a, const BooleanNetwork& b);

/// Synchronous image f(x).
State evaluate(const BooleanNetwork& net, const State& x);

/// Line format: "name, expression" per line, '#' comments, blank lines
/// ignored. A leading "targets, factors" header line is accepted and skipped.
BooleanNetwork parse_network(std::string_view text, const Limits& limits = {});

/// Inverse of parse_network up to table equality. Functions without a source
/// expression are written in disjunctive normal form.
std::string render_network(const BooleanNetwork& net);

}  // namespace bnelim
