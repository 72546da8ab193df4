#include "bnelim/igraph.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "bnelim/errors.hpp"

namespace bnelim {

namespace {

constexpr std::uint64_t kLowPatterns[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

void check_vertex(const SignedDigraph& g, unsigned v) {
  if (v >= g.vertex_count()) {
    throw InvalidArgument("unknown vertex " + std::to_string(v));
  }
}

}  // namespace

// Scans all 2^(n-1) contexts a word at a time.
std::uint8_t influence_signs(const TruthTable& t, unsigned j) {
  const auto& words = t.words();
  std::uint64_t rising = 0;
  std::uint64_t falling = 0;
  if (j < 6) {
    const unsigned shift = 1U << j;
    for (auto w : words) {
      const std::uint64_t low = w & ~kLowPatterns[j];
      const std::uint64_t high = (w >> shift) & ~kLowPatterns[j];
      rising |= high & ~low;
      falling |= low & ~high;
    }
  } else {
    const std::size_t block = std::size_t{1} << (j - 6);
    for (std::size_t i = 0; i < words.size(); ++i) {
      if ((i / block) % 2 == 0) {
        rising |= words[i + block] & ~words[i];
        falling |= words[i] & ~words[i + block];
      }
    }
  }
  std::uint8_t mask = 0;
  if (rising != 0) {
    mask |= kPositiveBit;
  }
  if (falling != 0) {
    mask |= kNegativeBit;
  }
  return mask;
}

namespace {

// Johnson's elementary circuit enumeration on the unsigned support of g.
// Calls `visit` with each circuit as an open vertex sequence starting at its
// smallest vertex.
void for_each_circuit(const SignedDigraph& g, const std::function<void(const std::vector<unsigned>&)>& visit) {
  const unsigned n = g.vertex_count();
  std::vector<std::vector<unsigned>> adjacency(n);
  for (unsigned u = 0; u < n; ++u) {
    for (unsigned w = 0; w < n; ++w) {
      if (g.has_edge(u, w)) {
        adjacency[u].push_back(w);
      }
    }
  }
  std::vector<bool> blocked(n, false);
  std::vector<std::vector<unsigned>> block_map(n);
  std::vector<unsigned> path;

  std::function<void(unsigned)> unblock = [&](unsigned u) {
    blocked[u] = false;
    auto pending = std::move(block_map[u]);
    block_map[u].clear();
    for (unsigned w : pending) {
      if (blocked[w]) {
        unblock(w);
      }
    }
  };

  for (unsigned start = 0; start < n; ++start) {
    std::fill(blocked.begin(), blocked.end(), false);
    for (auto& b : block_map) {
      b.clear();
    }
    std::function<bool(unsigned)> circuit = [&](unsigned u) {
      bool closed = false;
      path.push_back(u);
      blocked[u] = true;
      for (unsigned w : adjacency[u]) {
        if (w < start) {
          continue;
        }
        if (w == start) {
          visit(path);
          closed = true;
        } else if (!blocked[w] && circuit(w)) {
          closed = true;
        }
      }
      if (closed) {
        unblock(u);
      } else {
        for (unsigned w : adjacency[u]) {
          if (w >= start && std::find(block_map[w].begin(), block_map[w].end(), u) == block_map[w].end()) {
            block_map[w].push_back(u);
          }
        }
      }
      path.pop_back();
      return closed;
    };
    circuit(start);
  }
}

std::uint64_t support_of(const std::vector<unsigned>& circuit) {
  std::uint64_t mask = 0;
  for (unsigned v : circuit) {
    mask |= std::uint64_t{1} << v;
  }
  return mask;
}

bool hits_all(std::uint64_t set, const std::vector<std::uint64_t>& supports) {
  return std::all_of(supports.begin(), supports.end(), [set](std::uint64_t s) { return (s & set) != 0; });
}

// Calls visit(indices) for each k-subset of {0..n-1} in lexicographic order
// until it returns true.
bool for_each_subset(unsigned n, unsigned k, const std::function<bool(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> pick(k);
  for (unsigned i = 0; i < k; ++i) {
    pick[i] = i;
  }
  if (k > n) {
    return false;
  }
  while (true) {
    if (visit(pick)) {
      return true;
    }
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && pick[i] == n - k + static_cast<unsigned>(i)) {
      --i;
    }
    if (i < 0) {
      return false;
    }
    ++pick[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) {
      pick[j] = pick[j - 1] + 1;
    }
  }
}

}  // namespace

std::string to_string(Sign s) { return s == Sign::positive ? "+1" : "-1"; }

SignedDigraph::SignedDigraph(std::vector<std::string> names)
    : names_(std::move(names)), masks_(names_.size() * names_.size(), 0) {}

SignedDigraph::SignedDigraph(std::vector<std::string> names, std::span<const SignedEdge> edges)
    : SignedDigraph(std::move(names)) {
  for (const auto& e : edges) {
    add_edge(e.source, e.target, e.sign);
  }
}

void SignedDigraph::add_edge(unsigned source, unsigned target, Sign sign) {
  if (source >= vertex_count() || target >= vertex_count()) {
    throw InvalidArgument("edge endpoint out of range");
  }
  masks_[source * vertex_count() + target] |= sign_bit(sign);
}

std::vector<SignedEdge> SignedDigraph::edges() const {
  std::vector<SignedEdge> out;
  for (unsigned s = 0; s < vertex_count(); ++s) {
    for (unsigned t = 0; t < vertex_count(); ++t) {
      const std::uint8_t m = signs(s, t);
      if (m & kNegativeBit) {
        out.push_back(SignedEdge{s, t, Sign::negative});
      }
      if (m & kPositiveBit) {
        out.push_back(SignedEdge{s, t, Sign::positive});
      }
    }
  }
  return out;
}

std::size_t SignedDigraph::edge_count() const {
  std::size_t total = 0;
  for (auto m : masks_) {
    total += static_cast<std::size_t>(std::popcount(m));
  }
  return total;
}

std::uint64_t SignedCycle::support() const {
  std::uint64_t mask = 0;
  for (unsigned v : vertices) {
    mask |= std::uint64_t{1} << v;
  }
  return mask;
}

SignedDigraph local_interaction_graph(const BooleanNetwork& net, const State& x) {
  if (x.width() != net.size()) {
    throw InvalidArgument("state width does not match the network");
  }
  SignedDigraph g(net.names());
  const std::uint64_t bits = x.bits();
  for (unsigned j = 0; j < net.size(); ++j) {
    const std::uint64_t flipped = bits ^ (std::uint64_t{1} << j);
    const int dx = bits::get(bits, j) ? -1 : 1;
    for (unsigned i = 0; i < net.size(); ++i) {
      const int df = static_cast<int>(net.value(i, flipped)) - static_cast<int>(net.value(i, bits));
      if (df != 0) {
        g.add_edge(j, i, df * dx > 0 ? Sign::positive : Sign::negative);
      }
    }
  }
  return g;
}

SignedDigraph global_interaction_graph(const BooleanNetwork& net, const Limits& limits) {
  require_within("interaction graph", net.size(), limits.max_table_components);
  SignedDigraph g(net.names());
  for (unsigned i = 0; i < net.size(); ++i) {
    for (unsigned j = 0; j < net.size(); ++j) {
      const std::uint8_t m = influence_signs(net.table(i), j);
      if (m & kPositiveBit) {
        g.add_edge(j, i, Sign::positive);
      }
      if (m & kNegativeBit) {
        g.add_edge(j, i, Sign::negative);
      }
    }
  }
  return g;
}

bool has_loop(const SignedDigraph& g, unsigned v, std::optional<Sign> sign) {
  check_vertex(g, v);
  return sign ? g.has_edge(v, v, *sign) : g.has_edge(v, v);
}

std::vector<SignedCycle> elementary_cycles(const SignedDigraph& g, const Limits& limits) {
  require_within("cycle enumeration", g.vertex_count(), limits.max_cycle_vertices);
  std::vector<SignedCycle> out;
  for_each_circuit(g, [&](const std::vector<unsigned>& circuit) {
    const std::size_t len = circuit.size();
    // One cycle per choice of sign on each arc; positive choices first.
    std::vector<std::vector<Sign>> options(len);
    for (std::size_t k = 0; k < len; ++k) {
      const std::uint8_t m = g.signs(circuit[k], circuit[(k + 1) % len]);
      if (m & kPositiveBit) {
        options[k].push_back(Sign::positive);
      }
      if (m & kNegativeBit) {
        options[k].push_back(Sign::negative);
      }
    }
    std::vector<std::size_t> choice(len, 0);
    while (true) {
      SignedCycle c;
      c.vertices = circuit;
      c.vertices.push_back(circuit.front());
      for (std::size_t k = 0; k < len; ++k) {
        c.edge_signs.push_back(options[k][choice[k]]);
        c.sign = c.sign * options[k][choice[k]];
      }
      out.push_back(std::move(c));
      std::size_t k = len;
      while (k > 0) {
        --k;
        if (++choice[k] < options[k].size()) {
          break;
        }
        choice[k] = 0;
        if (k == 0) {
          return;
        }
      }
    }
  });
  return out;
}

std::vector<std::uint64_t> positive_cycle_supports(const SignedDigraph& g, const Limits& limits) {
  require_within("cycle enumeration", g.vertex_count(), limits.max_cycle_vertices);
  std::vector<std::uint64_t> supports;
  for_each_circuit(g, [&](const std::vector<unsigned>& circuit) {
    const std::size_t len = circuit.size();
    bool ambiguous = false;
    Sign product = Sign::positive;
    for (std::size_t k = 0; k < len; ++k) {
      const std::uint8_t m = g.signs(circuit[k], circuit[(k + 1) % len]);
      if (m == (kPositiveBit | kNegativeBit)) {
        ambiguous = true;
      } else {
        product = product * (m == kPositiveBit ? Sign::positive : Sign::negative);
      }
    }
    if (ambiguous || product == Sign::positive) {
      supports.push_back(support_of(circuit));
    }
  });
  std::sort(supports.begin(), supports.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  std::vector<std::uint64_t> minimal;
  for (auto s : supports) {
    const bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                       [s](std::uint64_t m) { return (m & s) == m; });
    if (!dominated) {
      minimal.push_back(s);
    }
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

bool is_pfvs(const SignedDigraph& g, std::span<const unsigned> vertices, const Limits& limits) {
  std::uint64_t set = 0;
  for (unsigned v : vertices) {
    check_vertex(g, v);
    set |= std::uint64_t{1} << v;
  }
  return hits_all(set, positive_cycle_supports(g, limits));
}

std::vector<std::vector<unsigned>> all_minimum_pfvs(const SignedDigraph& g, const Limits& limits) {
  const auto supports = positive_cycle_supports(g, limits);
  const unsigned n = g.vertex_count();
  std::vector<std::vector<unsigned>> found;
  for (unsigned k = 0; k <= n && found.empty(); ++k) {
    for_each_subset(n, k, [&](const std::vector<unsigned>& pick) {
      if (hits_all(support_of(pick), supports)) {
        found.push_back(pick);
      }
      return false;
    });
  }
  return found;
}

std::vector<unsigned> minimum_pfvs(const SignedDigraph& g, const Limits& limits) {
  const auto supports = positive_cycle_supports(g, limits);
  const unsigned n = g.vertex_count();
  std::vector<unsigned> best;
  for (unsigned k = 0; k <= n; ++k) {
    const bool hit = for_each_subset(n, k, [&](const std::vector<unsigned>& pick) {
      if (hits_all(support_of(pick), supports)) {
        best = pick;
        return true;
      }
      return false;
    });
    if (hit) {
      break;
    }
  }
  return best;
}

std::vector<std::uint8_t> elementary_path_signs(const SignedDigraph& g, unsigned source, bool include_loops) {
  check_vertex(g, source);
  const unsigned n = g.vertex_count();
  std::vector<std::uint8_t> reached(n, 0);
  std::function<void(unsigned, std::uint64_t, Sign, unsigned)> walk = [&](unsigned u, std::uint64_t visited,
                                                                          Sign sign, unsigned length) {
    for (unsigned w = 0; w < n; ++w) {
      const std::uint8_t m = g.signs(u, w);
      if (m == 0) {
        continue;
      }
      for (Sign edge : {Sign::positive, Sign::negative}) {
        if ((m & sign_bit(edge)) == 0) {
          continue;
        }
        const Sign total = sign * edge;
        if (w == source) {
          if (length + 1 >= 2 || include_loops) {
            reached[w] |= sign_bit(total);
          }
        } else if (((visited >> w) & 1U) == 0) {
          reached[w] |= sign_bit(total);
          walk(w, visited | (std::uint64_t{1} << w), total, length + 1);
        }
      }
    }
  };
  walk(source, std::uint64_t{1} << source, Sign::positive, 0);
  return reached;
}

bool has_signed_path(const SignedDigraph& g, unsigned j, unsigned i, Sign sign) {
  check_vertex(g, j);
  check_vertex(g, i);
  return (elementary_path_signs(g, j, true)[i] & sign_bit(sign)) != 0;
}

std::string igraph_to_dot(const SignedDigraph& g) {
  std::string out = "digraph interactions {\n";
  for (const auto& name : g.names()) {
    out += "  \"" + name + "\";\n";
  }
  for (const auto& e : g.edges()) {
    const bool positive = e.sign == Sign::positive;
    out += "  \"" + g.name(e.source) + "\" -> \"" + g.name(e.target) + "\" [color=" +
           (positive ? "green" : "red") + ", style=" + (positive ? "solid" : "dashed") + ", sign=\"" +
           to_string(e.sign) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace bnelim
