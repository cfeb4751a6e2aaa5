#include "netaug/cactus.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "netaug/graph_core.hpp"
#include "text_tokens.hpp"

namespace netaug {

bool cactus_validate(const CactusGraph& c) {
  const std::size_t m = c.m;
  if (m == 0) return false;
  if (c.phi.empty() && m != 1) return false;
  for (Vertex x : c.phi) {
    if (x >= m) return false;
  }
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(m);
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto [a, b] = c.edges[i];
    if (a >= m || b >= m || a == b) return false;
    adj[a].push_back({b, i});
    adj[b].push_back({a, i});
  }

  // Biconnected blocks by edge stack; a cactus has |E| = |V| in every block.
  std::vector<int> disc(m, -1), low(m, 0);
  std::vector<std::size_t> stack;
  int timer = 0;
  bool ok = true;
  std::function<void(Vertex, std::size_t)> dfs = [&](Vertex x, std::size_t via) {
    disc[x] = low[x] = timer++;
    for (auto [y, id] : adj[x]) {
      if (id == via || !ok) continue;
      if (disc[y] == -1) {
        stack.push_back(id);
        dfs(y, id);
        low[x] = std::min(low[x], low[y]);
        if (low[y] >= disc[x]) {
          std::set<Vertex> nodes;
          std::size_t count = 0;
          while (true) {
            const std::size_t top = stack.back();
            stack.pop_back();
            ++count;
            nodes.insert(c.edges[top].first);
            nodes.insert(c.edges[top].second);
            if (top == id) break;
          }
          if (count != nodes.size()) ok = false;
        }
      } else if (disc[y] < disc[x]) {
        stack.push_back(id);
        low[x] = std::min(low[x], disc[y]);
      }
    }
  };
  dfs(0, static_cast<std::size_t>(-1));
  if (!ok) return false;
  return std::all_of(disc.begin(), disc.end(), [](int d) { return d != -1; });
}

namespace {

using Mask = std::uint64_t;

Mask bit(unsigned e) { return Mask{1} << e; }

class CactusBuilder {
 public:
  explicit CactusBuilder(std::size_t n) : next_element_(static_cast<unsigned>(n)), node_of_(64, 0) {}

  void build(Mask ground, std::vector<Mask> family) {
    if (family.empty()) {
      const Vertex node = new_node();
      for (Mask g = ground; g; g &= g - 1) node_of_[std::countr_zero(g)] = node;
      return;
    }
    // Crossing class of the first member that crosses anything at all.
    std::size_t seed = 0;
    for (std::size_t i = 0; i < family.size() && seed == 0; ++i) {
      for (std::size_t j = 0; j < family.size(); ++j) {
        if (crossing(ground, family[i], family[j])) {
          seed = i + 1;
          break;
        }
      }
    }
    seed = seed == 0 ? 0 : seed - 1;
    std::vector<Mask> klass{family[seed]};
    std::vector<bool> in_class(family.size(), false);
    in_class[seed] = true;
    for (std::size_t h = 0; h < klass.size(); ++h) {
      for (std::size_t i = 0; i < family.size(); ++i) {
        if (!in_class[i] && crossing(ground, klass[h], family[i])) {
          in_class[i] = true;
          klass.push_back(family[i]);
        }
      }
    }

    std::vector<Mask> parts;
    if (klass.size() == 1) {
      parts = {klass[0], ground & ~klass[0]};
    } else {
      parts = circular_atoms(ground, klass);
    }
    const std::size_t k = parts.size();
    std::vector<Vertex> ring(k);
    for (auto& r : ring) r = new_node();
    for (std::size_t i = 0; i < k; ++i) edges_.push_back({ring[i], ring[(i + 1) % k]});

    std::vector<std::vector<Mask>> sub(k);
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (in_class[i]) continue;
      const Mask side = family[i];
      const Mask other = ground & ~side;
      bool placed = false;
      for (std::size_t p = 0; p < k && !placed; ++p) {
        for (Mask t : {side, other}) {
          if ((t & ~parts[p]) == 0) {
            if (t != parts[p]) sub[p].push_back(t);
            placed = true;
            break;
          }
        }
      }
      if (!placed) throw std::logic_error("cut family is not representable as a cactus");
    }
    for (std::size_t p = 0; p < k; ++p) {
      if (next_element_ >= 64) throw SizeLimitExceeded("cactus construction ran out of element slots");
      const unsigned dummy = next_element_++;
      const Mask sub_ground = parts[p] | bit(dummy);
      const unsigned low = std::countr_zero(sub_ground);
      std::vector<Mask> normalized;
      for (Mask t : sub[p]) normalized.push_back((t >> low) & 1U ? sub_ground & ~t : t);
      std::sort(normalized.begin(), normalized.end());
      normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
      build(sub_ground, std::move(normalized));
      glue(node_of_[dummy], ring[p]);
    }
  }

  CactusGraph finish(std::size_t n) {
    // Renumber: nodes holding original vertices in order of their smallest
    // vertex, then the empty nodes in creation order.
    std::map<Vertex, Vertex> id;
    for (unsigned v = 0; v < n; ++v) id.try_emplace(find(node_of_[v]), static_cast<Vertex>(id.size()));
    for (Vertex x = 0; x < parent_.size(); ++x) {
      if (find(x) == x) id.try_emplace(x, static_cast<Vertex>(id.size()));
    }
    CactusGraph c;
    c.m = id.size();
    for (unsigned v = 0; v < n; ++v) c.phi.push_back(id.at(find(node_of_[v])));
    for (auto [a, b] : edges_) {
      Vertex x = id.at(find(a)), y = id.at(find(b));
      c.edges.push_back({std::min(x, y), std::max(x, y)});
    }
    std::sort(c.edges.begin(), c.edges.end());
    return c;
  }

 private:
  static bool crossing(Mask ground, Mask a, Mask b) {
    return (a & b) && (a & ~b) && (~a & b & ground) && (ground & ~a & ~b);
  }

  static std::vector<Mask> circular_atoms(Mask ground, const std::vector<Mask>& klass) {
    std::map<std::vector<bool>, Mask> by_signature;
    for (Mask g = ground; g; g &= g - 1) {
      const unsigned e = std::countr_zero(g);
      std::vector<bool> sig;
      for (Mask s : klass) sig.push_back((s >> e) & 1U);
      by_signature[sig] |= bit(e);
    }
    std::vector<Mask> atoms;
    for (const auto& [sig, mask] : by_signature) atoms.push_back(mask);
    std::sort(atoms.begin(), atoms.end(), [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });

    std::set<Mask> sides;
    for (Mask s : klass) {
      sides.insert(s);
      sides.insert(ground & ~s);
    }
    const auto adjacent = [&](Mask a, Mask b) { return sides.count(a | b) > 0; };
    std::vector<Mask> order{atoms[0]};
    std::vector<bool> used(atoms.size(), false);
    used[0] = true;
    while (order.size() < atoms.size()) {
      bool extended = false;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (!used[i] && adjacent(order.back(), atoms[i])) {
          used[i] = true;
          order.push_back(atoms[i]);
          extended = true;
          break;
        }
      }
      if (!extended) throw std::logic_error("crossing cuts do not form a circular partition");
    }
    if (order.size() > 3 && !adjacent(order.back(), order.front())) {
      throw std::logic_error("crossing cuts do not close into a cycle");
    }
    return order;
  }

  Vertex new_node() {
    parent_.push_back(static_cast<Vertex>(parent_.size()));
    return parent_.back();
  }
  Vertex find(Vertex x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void glue(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  unsigned next_element_;
  std::vector<Vertex> node_of_;
  std::vector<Vertex> parent_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

}  // namespace

CactusGraph cactus_build(const std::vector<WeightedEdge>& edges, std::size_t n) {
  if (n > kMaxCactusBuildVertices) {
    throw SizeLimitExceeded("cactus construction supports at most " + std::to_string(kMaxCactusBuildVertices) +
                            " vertices");
  }
  if (n == 0) throw std::invalid_argument("cactus of an empty graph");
  for (const auto& e : edges) check_endpoints(e, n);
  if (connected_components(edges, n).class_count() != 1) {
    throw std::invalid_argument("cactus construction needs a connected graph");
  }
  CactusBuilder builder(n);
  const Mask ground = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<Mask> family;
  if (n >= 2) {
    const std::size_t lambda = edge_connectivity(edges, n, edges.size() + 1);
    for (const auto& side : cuts_of_size_at_most(edges, n, lambda)) family.push_back(side.members);
  }
  builder.build(ground, std::move(family));
  return builder.finish(n);
}

UnfoldedCycle cactus_unfold(const CactusGraph& c) {
  if (!cactus_validate(c)) throw std::invalid_argument("not a valid cactus");
  UnfoldedCycle out;
  out.psi.assign(c.m, {});
  if (c.edges.empty()) {
    out.cycle_length = 1;
    out.tour = {0};
    out.psi[0] = {0};
    return out;
  }
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(c.m);
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    adj[c.edges[i].first].push_back({c.edges[i].second, i});
    adj[c.edges[i].second].push_back({c.edges[i].first, i});
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  std::vector<std::size_t> cursor(c.m, 0);
  std::vector<bool> used(c.edges.size(), false);
  std::vector<Vertex> stack{0}, circuit;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    auto& cur = cursor[x];
    while (cur < adj[x].size() && used[adj[x][cur].second]) ++cur;
    if (cur == adj[x].size()) {
      circuit.push_back(x);
      stack.pop_back();
    } else {
      used[adj[x][cur].second] = true;
      stack.push_back(adj[x][cur].first);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  circuit.pop_back();
  out.cycle_length = circuit.size();
  out.tour = circuit;
  for (Vertex p = 0; p < circuit.size(); ++p) out.psi[circuit[p]].push_back(p);
  for (const auto& positions : out.psi) {
    for (std::size_t i = 1; i < positions.size(); ++i) {
      out.zero_links.push_back({positions[i - 1], positions[i], 0, out.zero_links.size()});
    }
  }
  return out;
}

std::vector<WeightedEdge> cycle_edges(const UnfoldedCycle& u) {
  std::vector<WeightedEdge> out;
  if (u.cycle_length < 2) return out;
  for (Vertex p = 0; p < u.cycle_length; ++p) {
    out.push_back({p, static_cast<Vertex>((p + 1) % u.cycle_length), 0, p});
  }
  return out;
}

void write_cactus(std::ostream& out, const CactusGraph& c) {
  out << "cactus m=" << c.m << " n=" << c.phi.size() << '\n';
  for (auto [a, b] : c.edges) out << "C " << a << ' ' << b << '\n';
  for (std::size_t v = 0; v < c.phi.size(); ++v) out << "P " << v << ' ' << c.phi[v] << '\n';
}

using detail::parse_keyed;
using detail::parse_uint;
using detail::Tokenizer;

CactusGraph read_cactus(std::istream& in) {
  CactusGraph c;
  std::string raw;
  std::size_t line_no = 0;
  bool header = false;
  std::vector<bool> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    Tokenizer tok{raw, line_no};
    std::string word;
    std::size_t col = 1;
    if (!tok.next(word, col) || word[0] == '#') continue;
    std::vector<std::pair<std::string, std::size_t>> fields;
    std::string more;
    std::size_t mcol = 0;
    while (tok.next(more, mcol)) fields.push_back({more, mcol});
    if (!header) {
      if (word != "cactus" || fields.size() != 2) throw ParseError(line_no, col, "expected 'cactus m=<M> n=<N>'");
      c.m = parse_keyed(fields[0].first, "m", line_no, fields[0].second);
      const auto n = parse_keyed(fields[1].first, "n", line_no, fields[1].second);
      c.phi.assign(n, 0);
      seen.assign(n, false);
      header = true;
      continue;
    }
    if ((word != "C" && word != "P") || fields.size() != 2) {
      throw ParseError(line_no, col, "expected 'C <u> <v>' or 'P <orig> <node>'");
    }
    const auto a = parse_uint(fields[0].first, line_no, fields[0].second);
    const auto b = parse_uint(fields[1].first, line_no, fields[1].second);
    if (word == "C") {
      if (a >= c.m) throw ParseError(line_no, fields[0].second, "cactus node out of range");
      if (b >= c.m) throw ParseError(line_no, fields[1].second, "cactus node out of range");
      c.edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    } else {
      if (a >= c.phi.size()) throw ParseError(line_no, fields[0].second, "original vertex out of range");
      if (b >= c.m) throw ParseError(line_no, fields[1].second, "cactus node out of range");
      if (seen[a]) throw ParseError(line_no, fields[0].second, "vertex mapped twice");
      seen[a] = true;
      c.phi[a] = static_cast<Vertex>(b);
    }
  }
  if (!header) throw ParseError(line_no + 1, 1, "missing cactus header");
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) throw ParseError(line_no + 1, 1, "vertex " + std::to_string(v) + " has no P entry");
  }
  return c;
}

CactusGraph read_cactus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_cactus(in);
}

}  // namespace netaug
