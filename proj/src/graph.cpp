#include "isomat/graph.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace isomat {

std::string to_string(const GraphMove& m) {
  switch (m.kind) {
    case MoveKind::LoopComplement: return "lc " + std::to_string(m.v);
    case MoveKind::SimpleLocalComplement: return "ls " + std::to_string(m.v);
    case MoveKind::NonSimpleLocalComplement: return "lns " + std::to_string(m.v);
    case MoveKind::EdgePivot: return "piv " + std::to_string(m.v) + " " + std::to_string(m.w);
  }
  return "?";
}

GraphMove move_from_string(const std::string& s) {
  std::istringstream is(s);
  std::string kind;
  is >> kind;
  GraphMove m{};
  if (kind == "lc") m.kind = MoveKind::LoopComplement;
  else if (kind == "ls") m.kind = MoveKind::SimpleLocalComplement;
  else if (kind == "lns") m.kind = MoveKind::NonSimpleLocalComplement;
  else if (kind == "piv") m.kind = MoveKind::EdgePivot;
  else throw Error(Errc::ParseError, "unknown move kind: " + kind);
  if (!(is >> m.v)) throw Error(Errc::ParseError, "move needs a vertex");
  if (m.kind == MoveKind::EdgePivot && !(is >> m.w))
    throw Error(Errc::ParseError, "pivot needs two vertices");
  return m;
}

LoopedGraph::LoopedGraph(int n) : n_(n), adj_(n, 0) {
  if (n < 0 || n > 63) throw Error(Errc::CapExceeded, "graph order must be within 0..63");
}

void LoopedGraph::set_edge(int v, int w, bool present) {
  check_vertex(v);
  check_vertex(w);
  if (v == w) throw Error(Errc::NotAnEdge, "loops are stored separately from edges");
  if (present) { adj_[v] |= bit(w); adj_[w] |= bit(v); }
  else { adj_[v] &= ~bit(w); adj_[w] &= ~bit(v); }
}

void LoopedGraph::toggle_edge(int v, int w) { set_edge(v, w, !adjacent(v, w)); }

void LoopedGraph::set_loop(int v, bool present) {
  check_vertex(v);
  if (present) loops_ |= bit(v); else loops_ &= ~bit(v);
}

int LoopedGraph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<std::pair<int, int>> LoopedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < n_; ++v)
    for (int w : bits_of(adj_[v] & ~full_mask(v + 1))) out.emplace_back(v, w);
  return out;
}

LoopedGraph loop_complement(const LoopedGraph& g, int v) {
  LoopedGraph h = g;
  h.toggle_loop(v);
  return h;
}

LoopedGraph local_complement_simple(const LoopedGraph& g, int v) {
  g.check_vertex(v);
  LoopedGraph h = g;
  Mask nb = g.neighbors(v);
  for (int x : bits_of(nb))
    for (int y : bits_of(nb & ~full_mask(x + 1))) h.toggle_edge(x, y);
  return h;
}

LoopedGraph local_complement_nonsimple(const LoopedGraph& g, int v) {
  LoopedGraph h = local_complement_simple(g, v);
  for (int w : bits_of(g.neighbors(v))) h.toggle_loop(w);
  return h;
}

LoopedGraph edge_pivot(const LoopedGraph& g, int v, int w) {
  if (!g.adjacent(v, w)) throw Error(Errc::NotAnEdge, "pivot needs an edge");
  if (g.looped(v) || g.looped(w)) throw Error(Errc::LoopedEndpoint, "pivot endpoints must be unlooped");
  return local_complement_simple(local_complement_simple(local_complement_simple(g, v), w), v);
}

LoopedGraph apply_move(const LoopedGraph& g, const GraphMove& m) {
  switch (m.kind) {
    case MoveKind::LoopComplement: return loop_complement(g, m.v);
    case MoveKind::SimpleLocalComplement: return local_complement_simple(g, m.v);
    case MoveKind::NonSimpleLocalComplement: return local_complement_nonsimple(g, m.v);
    case MoveKind::EdgePivot: return edge_pivot(g, m.v, m.w);
  }
  throw Error(Errc::ParseError, "bad move");
}

Gf2Matrix adjacency_matrix(const LoopedGraph& g) {
  Gf2Matrix a(g.order(), g.order());
  for (int v = 0; v < g.order(); ++v) {
    a.set_row(v, g.neighbors(v));
    if (g.looped(v)) a.set(v, v, true);
  }
  return a;
}

LoopedGraph graph_from_adjacency(const Gf2Matrix& a) {
  if (a.rows() != a.cols()) throw Error(Errc::IndexMismatch, "adjacency matrix must be square");
  LoopedGraph g(a.rows());
  for (int v = 0; v < a.rows(); ++v) {
    if (a.get(v, v)) g.set_loop(v, true);
    for (int w = v + 1; w < a.cols(); ++w) {
      if (a.get(v, w) != a.get(w, v)) throw Error(Errc::IndexMismatch, "adjacency matrix must be symmetric");
      if (a.get(v, w)) g.add_edge(v, w);
    }
  }
  return g;
}

bool is_stable(const LoopedGraph& g, Mask x) {
  if (x & ~g.vertex_mask()) throw Error(Errc::UnknownVertex, "stable-set query outside vertex set");
  for (int v : bits_of(x))
    if (g.neighbors(v) & x) return false;
  return true;
}

std::optional<std::pair<Mask, Mask>> bipartition(const LoopedGraph& g) {
  std::vector<int> color(g.order(), -1);
  Mask v1 = 0, v2 = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      (color[v] == 0 ? v1 : v2) |= bit(v);
      for (int w : bits_of(g.neighbors(v))) {
        if (color[w] < 0) { color[w] = 1 - color[v]; queue.push_back(w); }
        else if (color[w] == color[v]) return std::nullopt;
      }
    }
  }
  return std::make_pair(v1, v2);
}

Mask component_of(const LoopedGraph& g, int v) {
  g.check_vertex(v);
  Mask seen = bit(v), frontier = bit(v);
  while (frontier) {
    Mask next = 0;
    for (int x : bits_of(frontier)) next |= g.neighbors(x);
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool is_connected(const LoopedGraph& g) {
  if (g.order() <= 1) return true;
  return component_of(g, 0) == g.vertex_mask();
}

bool is_forest(const LoopedGraph& g) {
  if (g.loops()) return false;
  // acyclic iff every component has |edges| = |vertices| - 1
  Mask left = g.vertex_mask();
  while (left) {
    Mask comp = component_of(g, lowest_bit(left));
    int edges = 0;
    for (int v : bits_of(comp)) edges += g.degree(v);
    if (edges / 2 != popcount(comp) - 1) return false;
    left &= ~comp;
  }
  return true;
}

LoopedGraph relabel(const LoopedGraph& g, const std::vector<int>& perm) {
  LoopedGraph h(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (g.looped(v)) h.set_loop(perm[v], true);
    for (int w : bits_of(g.neighbors(v) & ~full_mask(v + 1))) h.add_edge(perm[v], perm[w]);
  }
  return h;
}

LoopedGraph induced_subgraph(const LoopedGraph& g, Mask keep) {
  std::vector<int> map(g.order(), -1);
  int k = 0;
  for (int v : bits_of(keep & g.vertex_mask())) map[v] = k++;
  LoopedGraph h(k);
  for (int v : bits_of(keep & g.vertex_mask())) {
    if (g.looped(v)) h.set_loop(map[v], true);
    for (int w : bits_of(g.neighbors(v) & keep & ~full_mask(v + 1))) h.add_edge(map[v], map[w]);
  }
  return h;
}

LoopedGraph delete_vertex(const LoopedGraph& g, int v) {
  g.check_vertex(v);
  return induced_subgraph(g, g.vertex_mask() & ~bit(v));
}

LoopedGraph strip_loops(const LoopedGraph& g) {
  LoopedGraph h = g;
  for (int v : bits_of(g.loops())) h.set_loop(v, false);
  return h;
}

LoopedGraph disjoint_union(const LoopedGraph& a, const LoopedGraph& b) {
  LoopedGraph g(a.order() + b.order());
  for (int v = 0; v < a.order(); ++v) {
    if (a.looped(v)) g.set_loop(v, true);
    for (int w : bits_of(a.neighbors(v) & ~full_mask(v + 1))) g.add_edge(v, w);
  }
  int off = a.order();
  for (int v = 0; v < b.order(); ++v) {
    if (b.looped(v)) g.set_loop(off + v, true);
    for (int w : bits_of(b.neighbors(v) & ~full_mask(v + 1))) g.add_edge(off + v, off + w);
  }
  return g;
}

namespace {

bool extend_isomorphism(const LoopedGraph& g, const LoopedGraph& h, std::vector<int>& map,
                        Mask& used, int v) {
  const int n = g.order();
  if (v == n) return true;
  for (int t = 0; t < n; ++t) {
    if (has_bit(used, t)) continue;
    if (g.looped(v) != h.looped(t) || g.degree(v) != h.degree(t)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (g.adjacent(v, u) != h.adjacent(t, map[u])) ok = false;
    if (!ok) continue;
    map[v] = t;
    used |= bit(t);
    if (extend_isomorphism(g, h, map, used, v + 1)) return true;
    used &= ~bit(t);
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const LoopedGraph& g, const LoopedGraph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count() ||
      popcount(g.loops()) != popcount(h.loops()))
    return std::nullopt;
  auto degseq = [](const LoopedGraph& x) {
    std::vector<std::pair<int, bool>> d;
    for (int v = 0; v < x.order(); ++v) d.emplace_back(x.degree(v), x.looped(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degseq(g) != degseq(h)) return std::nullopt;
  std::vector<int> map(g.order(), -1);
  Mask used = 0;
  if (extend_isomorphism(g, h, map, used, 0)) return map;
  return std::nullopt;
}

namespace {

// Branch-and-bound minimization of the permutation encoding. When vertex
// `cand` lands at position k, it contributes its loop bit followed by its
// adjacency bits against positions 0..k-1. A branch survives only while its
// encoding prefix is <= the best complete encoding found so far; the prefix
// is recompared against the current best at every node, so best updates deep
// in one subtree prune siblings correctly.
struct CanonSearch {
  const LoopedGraph& g;
  std::vector<int> pos;       // position -> original vertex
  std::vector<char> best;     // best full encoding found so far
  std::vector<char> current;  // encoding prefix for pos
  bool have_best = false;
  Mask used = 0;

  explicit CanonSearch(const LoopedGraph& graph) : g(graph) {}

  void run() { dfs(); }

  void dfs() {
    const int k = static_cast<int>(pos.size());
    if (have_best) {
      for (size_t i = 0; i < current.size(); ++i) {
        if (current[i] < best[i]) break;
        if (current[i] > best[i]) return;
      }
    }
    if (k == g.order()) {
      if (!have_best || current < best) { best = current; have_best = true; }
      return;
    }
    for (int cand = 0; cand < g.order(); ++cand) {
      if (has_bit(used, cand)) continue;
      size_t base = current.size();
      current.push_back(g.looped(cand) ? '1' : '0');
      for (int i = 0; i < k; ++i) current.push_back(g.adjacent(cand, pos[i]) ? '1' : '0');
      pos.push_back(cand);
      used |= bit(cand);
      dfs();
      used &= ~bit(cand);
      pos.pop_back();
      current.resize(base);
    }
  }
};

}  // namespace

std::string canonical_form(const LoopedGraph& g, int cap) {
  if (g.order() > cap) throw Error(Errc::CapExceeded, "canonical form capped at " + std::to_string(cap) + " vertices");
  CanonSearch search(g);
  search.run();
  std::string out = "n" + std::to_string(g.order()) + ":";
  out.append(search.best.begin(), search.best.end());
  return out;
}

std::string to_lsg(const LoopedGraph& g) {
  std::ostringstream os;
  os << "n " << g.order() << "\nloops ";
  for (int v = 0; v < g.order(); ++v) os << (g.looped(v) ? '1' : '0');
  os << "\n";
  for (auto [v, w] : g.edges()) os << "e " << v << " " << w << "\n";
  return os.str();
}

LoopedGraph graph_from_lsg(const std::string& text) {
  std::istringstream is(text);
  std::string key;
  int n = -1;
  if (!(is >> key >> n) || key != "n" || n < 0)
    throw Error(Errc::ParseError, "lsg: expected 'n <count>'");
  if (n > 63) throw Error(Errc::CapExceeded, "graph order must be within 0..63");
  LoopedGraph g(n);
  std::string loops;
  if (!(is >> key >> loops) || key != "loops" || static_cast<int>(loops.size()) != n) {
    if (n == 0 && key == "loops") loops.clear();
    else throw Error(Errc::ParseError, "lsg: expected 'loops <bitstring>'");
  }
  for (int v = 0; v < n; ++v) {
    if (loops[v] == '1') g.set_loop(v, true);
    else if (loops[v] != '0') throw Error(Errc::ParseError, "lsg: loops must be a 0/1 string");
  }
  while (is >> key) {
    if (key != "e") throw Error(Errc::ParseError, "lsg: expected 'e i j'");
    int i = -1, j = -1;
    if (!(is >> i >> j) || i < 0 || j <= i || j >= n)
      throw Error(Errc::ParseError, "lsg: edge must have 0 <= i < j < n");
    g.add_edge(i, j);
  }
  return g;
}

std::string to_graph6(const LoopedGraph& g) {
  if (g.loops()) throw Error(Errc::ParseError, "graph6 cannot carry loops");
  if (g.order() > 62) throw Error(Errc::CapExceeded, "graph6 writer handles n <= 62");
  std::string out(1, static_cast<char>(g.order() + 63));
  int bits = 0, acc = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) { out.push_back(static_cast<char>(acc + 63)); bits = 0; acc = 0; }
    }
  if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

LoopedGraph graph_from_graph6(const std::string& line) {
  if (line.empty()) throw Error(Errc::ParseError, "empty graph6 string");
  size_t at = 0;
  auto next = [&]() -> int {
    if (at >= line.size()) throw Error(Errc::ParseError, "graph6 string truncated");
    int c = static_cast<unsigned char>(line[at++]);
    if (c < 63 || c > 126) throw Error(Errc::ParseError, "graph6 byte out of range");
    return c - 63;
  };
  int n = next();
  if (n == 63) throw Error(Errc::CapExceeded, "graph6 reader handles n <= 62");
  LoopedGraph g(n);
  int bits = 0, acc = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (bits == 0) { acc = next(); bits = 6; }
      if (acc & (1 << (bits - 1))) g.add_edge(i, j);
      --bits;
    }
  return g;
}

LoopedGraph graph_from_text(const std::string& text) {
  size_t start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw Error(Errc::ParseError, "empty graph text");
  if (text[start] == 'n' && start + 1 < text.size() && (text[start + 1] == ' ' || text[start + 1] == '\t'))
    return graph_from_lsg(text);
  size_t end = text.find_first_of(" \t\r\n", start);
  return graph_from_graph6(text.substr(start, end == std::string::npos ? end : end - start));
}

LoopedGraph path_graph(int n) {
  LoopedGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

LoopedGraph cycle_graph(int n) {
  LoopedGraph g = path_graph(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

LoopedGraph complete_graph(int n) {
  LoopedGraph g(n);
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) g.add_edge(v, w);
  return g;
}

LoopedGraph star_graph(int leaves) {
  LoopedGraph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

LoopedGraph wheel_graph(int rim) {
  LoopedGraph g(rim + 1);
  for (int v = 1; v <= rim; ++v) {
    g.add_edge(0, v);
    g.add_edge(v, v == rim ? 1 : v + 1);
  }
  return g;
}

}  // namespace isomat
