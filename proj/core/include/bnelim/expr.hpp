#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bnelim/truth_table.hpp"

namespace bnelim {

/// Boolean expression over component indices. Conjunction and disjunction are
/// n-ary; an empty conjunction is never produced (use constants).
class Expr {
 public:
  enum class Kind { constant, variable, negation, conjunction, disjunction };

  static Expr constant(bool value);
  static Expr variable(unsigned index);
  static Expr negation(Expr operand);
  static Expr conjunction(std::vector<Expr> operands);
  static Expr disjunction(std::vector<Expr> operands);

  Kind kind() const { return kind_; }
  bool value() const { return value_; }
  unsigned index() const { return index_; }
  const std::vector<Expr>& operands() const { return operands_; }

  bool evaluate(std::uint64_t state) const;
  std::size_t node_count() const;
  /// Largest referenced index + 1, or 0 for a closed expression.
  unsigned min_arity() const;

  friend bool operator==(const Expr&, const Expr&) = default;

 private:
  Expr(Kind kind, bool value, unsigned index, std::vector<Expr> operands);

  Kind kind_;
  bool value_ = false;
  unsigned index_ = 0;
  std::vector<Expr> operands_;
};

/// Builds the table bitwise, one word-parallel pass per node.
TruthTable compile(const Expr& e, unsigned arity);

using NameResolver = std::function<std::optional<unsigned>(std::string_view)>;

/// Grammar: or := and ('|' and)*; and := unary ('&' unary)*;
/// unary := '!' unary | '(' or ')' | '0' | '1' | name.
/// Columns in thrown ParseErrors are 1-based offsets into `text` plus
/// `column_offset`; the line is `line`.
Expr parse_expression(std::string_view text, const NameResolver& resolve, std::size_t line = 1,
                      std::size_t column_offset = 0);

std::string to_string(const Expr& e, std::span<const std::string> names);

/// Disjunctive normal form over the variables the table actually depends on,
/// using prime implicants and a greedy cover when that set is small.
Expr synthesize_dnf(const TruthTable& table);

/// Replaces every occurrence of variable `index` by `replacement`.
Expr substitute(const Expr& e, unsigned index, const Expr& replacement);

}  // namespace bnelim
