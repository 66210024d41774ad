// Looped simple graphs on vertices 0..n-1, the elementary moves (loop
// complement, simple/non-simple local complement, edge pivot), small-scale
// isomorphism and canonical forms, and the .lsg / graph6 file formats.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isomat/gf2.hpp"

namespace isomat {

enum class MoveKind { LoopComplement, SimpleLocalComplement, NonSimpleLocalComplement, EdgePivot };

struct GraphMove {
  MoveKind kind;
  int v = -1;
  int w = -1;  // EdgePivot only
  bool operator==(const GraphMove&) const = default;
};

std::string to_string(const GraphMove& m);  // "lc 0", "ls 3", "lns 2", "piv 2 4"
GraphMove move_from_string(const std::string& s);

class LoopedGraph {
 public:
  LoopedGraph() = default;
  explicit LoopedGraph(int n);

  int order() const { return n_; }
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v) + " out of range");
  }
  bool adjacent(int v, int w) const { return v != w && has_bit(adj_[v], w); }
  void set_edge(int v, int w, bool present);
  void add_edge(int v, int w) { set_edge(v, w, true); }
  void toggle_edge(int v, int w);
  bool looped(int v) const { return has_bit(loops_, v); }
  void set_loop(int v, bool present);
  void toggle_loop(int v) { check_vertex(v); loops_ ^= bit(v); }

  Mask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  Mask loops() const { return loops_; }
  Mask vertex_mask() const { return full_mask(n_); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // lexicographically sorted

  bool operator==(const LoopedGraph& o) const {
    return n_ == o.n_ && loops_ == o.loops_ && adj_ == o.adj_;
  }
  // Equality of edge structures, ignoring loops.
  bool same_edges(const LoopedGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  std::vector<Mask> adj_;
  Mask loops_ = 0;
};

LoopedGraph loop_complement(const LoopedGraph& g, int v);
LoopedGraph local_complement_simple(const LoopedGraph& g, int v);
LoopedGraph local_complement_nonsimple(const LoopedGraph& g, int v);
LoopedGraph edge_pivot(const LoopedGraph& g, int v, int w);
LoopedGraph apply_move(const LoopedGraph& g, const GraphMove& m);

Gf2Matrix adjacency_matrix(const LoopedGraph& g);
LoopedGraph graph_from_adjacency(const Gf2Matrix& a);

bool is_stable(const LoopedGraph& g, Mask x);
// A 2-coloring (V1, V2) of the edge structure, or nullopt; loops are ignored.
std::optional<std::pair<Mask, Mask>> bipartition(const LoopedGraph& g);
bool is_connected(const LoopedGraph& g);
Mask component_of(const LoopedGraph& g, int v);
bool is_forest(const LoopedGraph& g);

LoopedGraph relabel(const LoopedGraph& g, const std::vector<int>& perm);  // vertex v -> perm[v]
LoopedGraph delete_vertex(const LoopedGraph& g, int v);  // remaining ids compacted, order kept
LoopedGraph induced_subgraph(const LoopedGraph& g, Mask keep);
LoopedGraph strip_loops(const LoopedGraph& g);
LoopedGraph disjoint_union(const LoopedGraph& a, const LoopedGraph& b);

// Edge- and loop-preserving bijection, or nullopt. Backtracking with
// (degree, loop) pruning; fine well beyond the canonical-form cap.
std::optional<std::vector<int>> find_isomorphism(const LoopedGraph& g, const LoopedGraph& h);
inline bool are_isomorphic(const LoopedGraph& g, const LoopedGraph& h) {
  return find_isomorphism(g, h).has_value();
}

// Minimum over vertex permutations of the (loops, upper triangle) encoding,
// found by branch-and-bound. Equal strings iff the graphs are isomorphic.
std::string canonical_form(const LoopedGraph& g, int cap = 10);

// .lsg format: "n <count>" / "loops <bitstring>" / "e i j" lines (i < j).
std::string to_lsg(const LoopedGraph& g);
LoopedGraph graph_from_lsg(const std::string& text);
// graph6 for unlooped graphs (single-byte order, n <= 62).
std::string to_graph6(const LoopedGraph& g);
LoopedGraph graph_from_graph6(const std::string& line);
// Auto-detects .lsg vs graph6 content.
LoopedGraph graph_from_text(const std::string& text);

// Small named graphs used as fixtures throughout.
LoopedGraph path_graph(int n);
LoopedGraph cycle_graph(int n);
LoopedGraph complete_graph(int n);
LoopedGraph star_graph(int leaves);
LoopedGraph wheel_graph(int rim);  // hub 0 joined to a cycle on 1..rim

}  // namespace isomat
