#include "bnelim/network.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "bnelim/errors.hpp"

namespace bnelim {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) != 0 || name[0] == '_')) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

std::string_view trim(std::string_view s, std::size_t* leading = nullptr) {
  std::size_t begin = 0;
  while (begin < s.size() && std::isspace(static_cast<unsigned char>(s[begin])) != 0) {
    ++begin;
  }
  std::size_t end = s.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1])) != 0) {
    --end;
  }
  if (leading != nullptr) {
    *leading = begin;
  }
  return s.substr(begin, end - begin);
}

bool is_header(std::string_view name, std::string_view rest) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
  };
  return lower(name) == "targets" && lower(trim(rest)) == "factors";
}

struct Declaration {
  std::size_t line;
  std::string name;
  std::string_view expression;
  std::size_t expression_column;  // 0-based offset of expression in its line
};

}  // namespace

UpdateFunction::UpdateFunction(TruthTable table, std::optional<Expr> source)
    : table_(std::move(table)), source_(std::move(source)) {
  if (source_ && source_->min_arity() > table_.arity()) {
    throw InvalidArgument("source expression references components beyond the table arity");
  }
}

BooleanNetwork::BooleanNetwork(std::vector<std::string> names, std::vector<UpdateFunction> functions)
    : names_(std::move(names)), functions_(std::move(functions)) {
  if (names_.empty()) {
    throw InvalidArgument("a network needs at least one component");
  }
  if (names_.size() != functions_.size()) {
    throw InvalidArgument("name and function counts differ");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (!valid_name(name)) {
      throw InvalidArgument("invalid component name '" + name + "'");
    }
    if (!seen.insert(name).second) {
      throw InvalidArgument("duplicate component name '" + name + "'");
    }
  }
  for (const auto& fn : functions_) {
    if (fn.table().arity() != size()) {
      throw InvalidArgument("update table arity " + std::to_string(fn.table().arity()) +
                            " does not match " + std::to_string(size()) + " components");
    }
  }
}

BooleanNetwork BooleanNetwork::from_tables(std::vector<std::string> names, std::vector<TruthTable> tables) {
  std::vector<UpdateFunction> functions;
  functions.reserve(tables.size());
  for (auto& t : tables) {
    functions.emplace_back(std::move(t));
  }
  return BooleanNetwork(std::move(names), std::move(functions));
}

BooleanNetwork BooleanNetwork::from_expressions(std::vector<std::string> names, std::vector<Expr> sources,
                                                const Limits& limits) {
  const auto n = static_cast<unsigned>(names.size());
  require_within("truth table construction", n, limits.max_table_components);
  std::vector<UpdateFunction> functions;
  functions.reserve(sources.size());
  for (auto& e : sources) {
    TruthTable table = compile(e, n);
    functions.emplace_back(std::move(table), std::move(e));
  }
  return BooleanNetwork(std::move(names), std::move(functions));
}

std::optional<unsigned> BooleanNetwork::index_of(std::string_view name) const {
  for (unsigned k = 0; k < size(); ++k) {
    if (names_[k] == name) {
      return k;
    }
  }
  return std::nullopt;
}

std::uint64_t BooleanNetwork::image(std::uint64_t x) const {
  std::uint64_t y = 0;
  for (unsigned k = 0; k < size(); ++k) {
    if (functions_[k].table()[x]) {
      y |= std::uint64_t{1} << k;
    }
  }
  return y;
}

bool same_tables(const BooleanNetwork& a, const BooleanNetwork& b) {
  if (a.names_ != b.names_) {
    return false;
  }
  for (unsigned k = 0; k < a.size(); ++k) {
    if (!(a.table(k) == b.table(k))) {
      return false;
    }
  }
  return true;
}

State evaluate(const BooleanNetwork& net, const State& x) {
  if (x.width() != net.size()) {
    throw InvalidArgument("state width " + std::to_string(x.width()) + " does not match " +
                          std::to_string(net.size()) + " components");
  }
  return State(net.size(), net.image(x.bits()));
}

BooleanNetwork parse_network(std::string_view text, const Limits& limits) {
  std::vector<Declaration> declarations;
  std::unordered_map<std::string, unsigned> index;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  bool first_content = true;
  while (pos <= text.size()) {
    const std::size_t newline = text.find('\n', pos);
    std::string_view line = text.substr(pos, newline == std::string_view::npos ? text.npos : newline - pos);
    pos = newline == std::string_view::npos ? text.size() + 1 : newline + 1;
    ++line_number;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (trim(line).empty()) {
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      std::size_t lead = 0;
      trim(line, &lead);
      throw ParseError(line_number, lead + 1, "expected 'name, expression'");
    }
    std::size_t name_lead = 0;
    const std::string_view name = trim(line.substr(0, comma), &name_lead);
    const std::string_view rest = line.substr(comma + 1);
    if (first_content && is_header(name, rest)) {
      first_content = false;
      continue;
    }
    first_content = false;
    if (!valid_name(name)) {
      throw ParseError(line_number, name_lead + 1, "invalid component name '" + std::string(name) + "'");
    }
    if (index.count(std::string(name)) != 0) {
      throw ParseError(line_number, name_lead + 1, "duplicate component '" + std::string(name) + "'");
    }
    index.emplace(std::string(name), static_cast<unsigned>(declarations.size()));
    declarations.push_back(Declaration{line_number, std::string(name), rest, comma + 1});
  }
  if (declarations.empty()) {
    throw ParseError(1, 1, "empty network: no 'name, expression' lines");
  }
  require_within("truth table construction", static_cast<unsigned>(declarations.size()),
                 limits.max_table_components);

  const NameResolver resolve = [&index](std::string_view name) -> std::optional<unsigned> {
    auto it = index.find(std::string(name));
    if (it == index.end()) {
      return std::nullopt;
    }
    return it->second;
  };
  std::vector<std::string> names;
  std::vector<Expr> sources;
  for (const auto& d : declarations) {
    names.push_back(d.name);
    sources.push_back(parse_expression(d.expression, resolve, d.line, d.expression_column));
  }
  return BooleanNetwork::from_expressions(std::move(names), std::move(sources), limits);
}

std::string render_network(const BooleanNetwork& net) {
  std::string out;
  for (unsigned k = 0; k < net.size(); ++k) {
    const auto& fn = net.function(k);
    const Expr e = fn.source() ? *fn.source() : synthesize_dnf(fn.table());
    out += net.name(k);
    out += ", ";
    out += to_string(e, net.names());
    out += '\n';
  }
  return out;
}

}  // namespace bnelim
