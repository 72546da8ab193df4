#include "bnelim/expr.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <unordered_set>

#include "bnelim/errors.hpp"

namespace bnelim {

Expr::Expr(Kind kind, bool value, unsigned index, std::vector<Expr> operands)
    : kind_(kind), value_(value), index_(index), operands_(std::move(operands)) {}

Expr Expr::constant(bool value) { return Expr(Kind::constant, value, 0, {}); }

Expr Expr::variable(unsigned index) { return Expr(Kind::variable, false, index, {}); }

Expr Expr::negation(Expr operand) {
  std::vector<Expr> operands;
  operands.push_back(std::move(operand));
  return Expr(Kind::negation, false, 0, std::move(operands));
}

Expr Expr::conjunction(std::vector<Expr> operands) {
  if (operands.empty()) {
    return constant(true);
  }
  if (operands.size() == 1) {
    return std::move(operands.front());
  }
  return Expr(Kind::conjunction, false, 0, std::move(operands));
}

Expr Expr::disjunction(std::vector<Expr> operands) {
  if (operands.empty()) {
    return constant(false);
  }
  if (operands.size() == 1) {
    return std::move(operands.front());
  }
  return Expr(Kind::disjunction, false, 0, std::move(operands));
}

bool Expr::evaluate(std::uint64_t state) const {
  switch (kind_) {
    case Kind::constant:
      return value_;
    case Kind::variable:
      return ((state >> index_) & 1U) != 0;
    case Kind::negation:
      return !operands_.front().evaluate(state);
    case Kind::conjunction:
      return std::all_of(operands_.begin(), operands_.end(),
                         [state](const Expr& e) { return e.evaluate(state); });
    case Kind::disjunction:
      return std::any_of(operands_.begin(), operands_.end(),
                         [state](const Expr& e) { return e.evaluate(state); });
  }
  return false;
}

std::size_t Expr::node_count() const {
  std::size_t total = 1;
  for (const auto& e : operands_) {
    total += e.node_count();
  }
  return total;
}

unsigned Expr::min_arity() const {
  if (kind_ == Kind::variable) {
    return index_ + 1;
  }
  unsigned best = 0;
  for (const auto& e : operands_) {
    best = std::max(best, e.min_arity());
  }
  return best;
}

TruthTable compile(const Expr& e, unsigned arity) {
  switch (e.kind()) {
    case Expr::Kind::constant:
      return TruthTable::constant(arity, e.value());
    case Expr::Kind::variable:
      return TruthTable::variable(arity, e.index());
    case Expr::Kind::negation:
      return ~compile(e.operands().front(), arity);
    case Expr::Kind::conjunction: {
      TruthTable acc = compile(e.operands().front(), arity);
      for (std::size_t i = 1; i < e.operands().size(); ++i) {
        acc &= compile(e.operands()[i], arity);
      }
      return acc;
    }
    case Expr::Kind::disjunction: {
      TruthTable acc = compile(e.operands().front(), arity);
      for (std::size_t i = 1; i < e.operands().size(); ++i) {
        acc |= compile(e.operands()[i], arity);
      }
      return acc;
    }
  }
  return TruthTable(arity);
}

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, const NameResolver& resolve, std::size_t line, std::size_t offset)
      : text_(text), resolve_(resolve), line_(line), offset_(offset) {}

  Expr parse() {
    skip_space();
    if (pos_ == text_.size()) {
      fail("empty expression");
    }
    Expr e = parse_or();
    skip_space();
    if (pos_ != text_.size()) {
      fail(std::string("unexpected '") + text_[pos_] + "'");
    }
    return e;
  }

 private:
  Expr parse_or() {
    std::vector<Expr> terms;
    terms.push_back(parse_and());
    while (accept('|')) {
      terms.push_back(parse_and());
    }
    return Expr::disjunction(std::move(terms));
  }

  Expr parse_and() {
    std::vector<Expr> factors;
    factors.push_back(parse_unary());
    while (accept('&')) {
      factors.push_back(parse_unary());
    }
    return Expr::conjunction(std::move(factors));
  }

  Expr parse_unary() {
    skip_space();
    if (pos_ == text_.size()) {
      fail("expected an operand");
    }
    const char c = text_[pos_];
    if (c == '!') {
      ++pos_;
      return Expr::negation(parse_unary());
    }
    if (c == '(') {
      ++pos_;
      Expr inner = parse_or();
      if (!accept(')')) {
        fail("expected ')'");
      }
      return inner;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < text_.size() && is_name_char(text_[pos_])) {
        --pos_;
        fail("names must start with a letter or '_'");
      }
      return Expr::constant(c == '1');
    }
    if (is_name_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_name_char(text_[pos_])) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto index = resolve_(name);
      if (!index) {
        pos_ = start;
        fail("undeclared component '" + std::string(name) + "'");
      }
      return Expr::variable(*index);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, offset_ + pos_ + 1, what);
  }

  std::string_view text_;
  const NameResolver& resolve_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::disjunction:
      return 1;
    case Expr::Kind::conjunction:
      return 2;
    default:
      return 3;
  }
}

void write(const Expr& e, std::span<const std::string> names, std::string& out) {
  auto child = [&](const Expr& c, int needed) {
    if (precedence(c) < needed) {
      out += '(';
      write(c, names, out);
      out += ')';
    } else {
      write(c, names, out);
    }
  };
  switch (e.kind()) {
    case Expr::Kind::constant:
      out += e.value() ? '1' : '0';
      break;
    case Expr::Kind::variable:
      if (e.index() >= names.size()) {
        throw InvalidArgument("expression references component " + std::to_string(e.index()) +
                              " with only " + std::to_string(names.size()) + " names");
      }
      out += names[e.index()];
      break;
    case Expr::Kind::negation:
      out += '!';
      child(e.operands().front(), 3);
      break;
    case Expr::Kind::conjunction:
    case Expr::Kind::disjunction: {
      const bool is_and = e.kind() == Expr::Kind::conjunction;
      bool first = true;
      for (const auto& c : e.operands()) {
        if (!first) {
          out += is_and ? " & " : " | ";
        }
        first = false;
        child(c, is_and ? 3 : 2);
      }
      break;
    }
  }
}

// A product term over compressed variable positions: `mask` marks the
// positions present, `value` their required polarity.
struct Cube {
  std::uint32_t value;
  std::uint32_t mask;

  friend bool operator==(const Cube&, const Cube&) = default;
};

struct CubeHash {
  std::size_t operator()(const Cube& c) const { return (std::size_t{c.mask} << 32) ^ c.value; }
};

bool covers(const Cube& c, std::uint32_t minterm) { return (minterm & c.mask) == c.value; }

std::vector<Cube> prime_implicants(const std::vector<std::uint32_t>& minterms, unsigned width) {
  const std::uint32_t full = width == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << width) - 1;
  std::unordered_set<Cube, CubeHash> level;
  for (auto m : minterms) {
    level.insert(Cube{m, full});
  }
  std::vector<Cube> primes;
  while (!level.empty()) {
    std::unordered_set<Cube, CubeHash> next;
    std::unordered_set<Cube, CubeHash> merged;
    for (const Cube& c : level) {
      for (unsigned b = 0; b < width; ++b) {
        const std::uint32_t bit = std::uint32_t{1} << b;
        if ((c.mask & bit) == 0) {
          continue;
        }
        const Cube partner{c.value ^ bit, c.mask};
        if (level.count(partner) != 0) {
          next.insert(Cube{c.value & ~bit, c.mask & ~bit});
          merged.insert(c);
        }
      }
    }
    for (const Cube& c : level) {
      if (merged.count(c) == 0) {
        primes.push_back(c);
      }
    }
    level = std::move(next);
  }
  return primes;
}

std::vector<Cube> greedy_cover(const std::vector<std::uint32_t>& minterms, std::vector<Cube> primes) {
  std::sort(primes.begin(), primes.end(), [](const Cube& a, const Cube& b) {
    const int la = std::popcount(a.mask);
    const int lb = std::popcount(b.mask);
    if (la != lb) {
      return la < lb;
    }
    return std::tie(a.mask, a.value) < std::tie(b.mask, b.value);
  });
  std::vector<bool> covered(minterms.size(), false);
  std::size_t remaining = minterms.size();
  std::vector<Cube> chosen;
  while (remaining > 0) {
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t p = 0; p < primes.size(); ++p) {
      std::size_t gain = 0;
      for (std::size_t m = 0; m < minterms.size(); ++m) {
        if (!covered[m] && covers(primes[p], minterms[m])) {
          ++gain;
        }
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = p;
      }
    }
    chosen.push_back(primes[best]);
    for (std::size_t m = 0; m < minterms.size(); ++m) {
      if (!covered[m] && covers(primes[best], minterms[m])) {
        covered[m] = true;
        --remaining;
      }
    }
  }
  return chosen;
}

constexpr unsigned kMaxMinimizedVariables = 12;

}  // namespace

Expr parse_expression(std::string_view text, const NameResolver& resolve, std::size_t line,
                      std::size_t column_offset) {
  return Parser(text, resolve, line, column_offset).parse();
}

std::string to_string(const Expr& e, std::span<const std::string> names) {
  std::string out;
  write(e, names, out);
  return out;
}

Expr synthesize_dnf(const TruthTable& table) {
  if (table.is_constant()) {
    return Expr::constant(table.count() != 0);
  }
  std::vector<unsigned> support;
  for (unsigned k = 0; k < table.arity(); ++k) {
    if (table.depends_on(k)) {
      support.push_back(k);
    }
  }
  const auto width = static_cast<unsigned>(support.size());
  std::vector<std::uint32_t> minterms;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << width); ++m) {
    std::uint64_t x = 0;
    for (unsigned b = 0; b < width; ++b) {
      if ((m >> b) & 1U) {
        x |= std::uint64_t{1} << support[b];
      }
    }
    if (table[x]) {
      minterms.push_back(m);
    }
  }

  std::vector<Cube> cubes;
  if (width <= kMaxMinimizedVariables) {
    cubes = greedy_cover(minterms, prime_implicants(minterms, width));
  } else {
    const std::uint32_t full = (std::uint32_t{1} << width) - 1;
    for (auto m : minterms) {
      cubes.push_back(Cube{m, full});
    }
  }
  // Print terms in the order of their first literal assignment.
  std::sort(cubes.begin(), cubes.end(), [width](const Cube& a, const Cube& b) {
    for (unsigned bit = 0; bit < width; ++bit) {
      const std::uint32_t m = std::uint32_t{1} << bit;
      const int ka = (a.mask & m) ? ((a.value & m) ? 2 : 1) : 3;
      const int kb = (b.mask & m) ? ((b.value & m) ? 2 : 1) : 3;
      if (ka != kb) {
        return ka < kb;
      }
    }
    return false;
  });

  std::vector<Expr> terms;
  for (const Cube& c : cubes) {
    std::vector<Expr> literals;
    for (unsigned b = 0; b < width; ++b) {
      const std::uint32_t m = std::uint32_t{1} << b;
      if (c.mask & m) {
        Expr lit = Expr::variable(support[b]);
        literals.push_back((c.value & m) ? std::move(lit) : Expr::negation(std::move(lit)));
      }
    }
    terms.push_back(Expr::conjunction(std::move(literals)));
  }
  return Expr::disjunction(std::move(terms));
}

Expr substitute(const Expr& e, unsigned index, const Expr& replacement) {
  switch (e.kind()) {
    case Expr::Kind::constant:
      return e;
    case Expr::Kind::variable:
      return e.index() == index ? replacement : e;
    case Expr::Kind::negation:
      return Expr::negation(substitute(e.operands().front(), index, replacement));
    case Expr::Kind::conjunction:
    case Expr::Kind::disjunction: {
      std::vector<Expr> operands;
      operands.reserve(e.operands().size());
      for (const auto& c : e.operands()) {
        operands.push_back(substitute(c, index, replacement));
      }
      return e.kind() == Expr::Kind::conjunction ? Expr::conjunction(std::move(operands))
                                                 : Expr::disjunction(std::move(operands));
    }
  }
  return e;
}

}  // namespace bnelim
