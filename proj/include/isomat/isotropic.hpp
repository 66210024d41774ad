// Everything specific to the ground set W(G): the matroids of IAS(G) and
// IA(G), vertex triples, transversals, neighborhood circuits and matroids,
// the isomorphisms induced by elementary moves, isotropic minors, parallel
// classification and reduction, pendant-twin reductions, and the bipartite
// double B(G). Ground element (v, kind) lives at index 3v + kind, so masks
// over W(G) follow the (vertex, phi < chi < psi) order.
#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "isomat/graph.hpp"
#include "isomat/matroid.hpp"

namespace isomat {

enum class Kind : int { Phi = 0, Chi = 1, Psi = 2 };

struct GroundElem {
  int vertex;
  Kind kind;
  bool operator==(const GroundElem&) const = default;
};

inline int ground_index(int v, Kind k) { return 3 * v + static_cast<int>(k); }
inline int ground_index(const GroundElem& e) { return ground_index(e.vertex, e.kind); }
inline GroundElem ground_elem(int index) { return {index / 3, static_cast<Kind>(index % 3)}; }
inline Mask triple_mask(int v) { return Mask{7} << (3 * v); }

std::string to_string(Kind k);                 // "phi" / "chi" / "psi"
std::string to_string(const GroundElem& e);    // "phi:3"
GroundElem ground_elem_from_string(const std::string& s);
std::string subtransversal_to_string(Mask s);  // sorted space-separated elements
Mask subtransversal_from_string(const std::string& s, int n);

class IsotropicMatroid {
 public:
  static IsotropicMatroid build(const LoopedGraph& g);  // M[IAS(G)]

  const LoopedGraph& graph() const { return graph_; }
  const BinaryMatroid& matroid() const { return matroid_; }
  int order() const { return graph_.order(); }
  Mask ground_mask() const { return full_mask(3 * order()); }
  Mask triple(int v) const { graph_.check_vertex(v); return triple_mask(v); }

 private:
  LoopedGraph graph_;
  BinaryMatroid matroid_;
};

// M[IA(G)] = column matroid of (I | A); element (v, phi/chi) at index 2v + kind.
// The natural partition into vertex pairs makes it a 2-sheltering matroid.
struct IaMatroid {
  BinaryMatroid matroid;
  int order = 0;
  Mask pair_mask(int v) const { return Mask{3} << (2 * v); }
};
IaMatroid build_ia(const LoopedGraph& g);

// zeta_G(v): {chi or psi at v} + {phi at each neighbor}; IsolatedVertex error.
Mask neighborhood_circuit(const LoopedGraph& g, int v);

// The transversal T_G(X) of Definition-style stable-set form; NotStable error.
Mask stable_set_transversal(const LoopedGraph& g, Mask x);

struct TransverseMatroid {
  Mask transversal = 0;
  BinaryMatroid matroid;        // restriction, columns in ground order
  std::vector<int> old_index;   // restriction position -> W(G) index
};
TransverseMatroid neighborhood_matroid(const IsotropicMatroid& im, Mask x);
TransverseMatroid restrict_to_transversal(const IsotropicMatroid& im, Mask t);

// Transversal enumeration, lexicographic in (kind(0), kind(1), ...).
long long transversal_count(int n);  // 3^n
Mask transversal_from_index(long long idx, int n);
std::vector<Kind> transversal_kinds(Mask t, int n);
bool is_subtransversal(Mask s, int n);
bool is_transversal(Mask t, int n);
std::vector<Mask> all_transversals(int n, long long cap = 1'000'000);

// Chunked scan over all transversal indices; merge is applied in chunk order,
// so the result is deterministic whenever it is merge-order independent.
template <typename T, typename Fn, typename Merge>
T scan_transversals(int n, T init, Fn fn, Merge merge, unsigned threads = 0) {
  const long long total = transversal_count(n);
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads <= 1 || total < 2048) {
    T acc = init;
    for (long long i = 0; i < total; ++i) acc = merge(acc, fn(i));
    return acc;
  }
  const long long chunk = (total + threads - 1) / threads;
  std::vector<T> results(threads, init);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      T acc = init;
      for (long long i = t * chunk; i < std::min<long long>(total, (t + 1) * chunk); ++i)
        acc = merge(acc, fn(i));
      results[t] = acc;
    });
  }
  for (auto& th : pool) th.join();
  T acc = init;
  for (const T& r : results) acc = merge(acc, r);
  return acc;
}

// All subtransversal circuits of M[IAS(G)], smallest first.
std::vector<Mask> transverse_circuits(const IsotropicMatroid& im,
                                      std::optional<int> size_cap = std::nullopt);

// Ground bijection W(G) -> W(H) respecting vertex triples.
struct CompatibleIso {
  std::vector<int> vertex_map;
  std::vector<std::array<Kind, 3>> kind_map;  // kind_map[v][old kind]

  static CompatibleIso identity(int n);
  GroundElem apply(GroundElem e) const {
    return {vertex_map[e.vertex], kind_map[e.vertex][static_cast<int>(e.kind)]};
  }
  int apply_index(int idx) const { return ground_index(apply(ground_elem(idx))); }
  Mask apply_mask(Mask m) const;
  CompatibleIso then(const CompatibleIso& second) const;
  CompatibleIso inverse() const;
};

// The isomorphism induced by one elementary move (identity vertex bijection,
// kind swaps only at the moved vertex and, for simple local complementation,
// its neighbors).
std::pair<LoopedGraph, CompatibleIso> induced_iso(const LoopedGraph& g, const GraphMove& m);
std::pair<LoopedGraph, CompatibleIso> compose_induced(const LoopedGraph& g,
                                                      const std::vector<GraphMove>& moves);

// Minor with the triple partition: contract S, delete the sibling elements of
// the touched triples. Ground relabeled to the surviving vertices in order.
struct PartitionedMinor {
  BinaryMatroid matroid;
  std::vector<int> orig_vertices;  // new vertex id -> original id
};
PartitionedMinor isotropic_minor(const IsotropicMatroid& im, Mask s);

enum class ParallelCategory { IsolatedTriple = 1, NonadjacentTwins = 2, AdjacentTwins = 3, Pendant = 4 };

struct ParallelPair {
  int a = 0, b = 0;  // ground indices, a < b
  std::vector<ParallelCategory> categories;
};
std::vector<ParallelPair> classify_parallels(const IsotropicMatroid& im);

struct ParallelReduction {
  int removed_vertex;
  LoopedGraph reduced_graph;
  PartitionedMinor minor;
};
ParallelReduction isotropic_parallel_reduction(const IsotropicMatroid& im, int a, int b);

enum class ReductionKind { Isolated, Pendant, Twin };
std::string to_string(ReductionKind k);
std::vector<std::pair<int, ReductionKind>> pendant_twin_reductions(const LoopedGraph& g);

// Greedy pendant-twin resolution (isolated > pendant > twin, lowest vertex
// first); returns the removed original vertex ids, or nullopt when the graph
// is not fully reducible (i.e. some component is not distance hereditary).
std::optional<std::vector<int>> dh_resolution(const LoopedGraph& g);

// B(G): the fundamental graph of M[IAS(G)] with respect to Phi(G), as the
// simple bipartite graph on W(G) indices.
LoopedGraph bipartite_double(const LoopedGraph& g);

// The locally equivalent graph read off a transversal basis B through
// fundamental circuits: v ~ w iff B(w) lies in C(C(v), B).
LoopedGraph graph_from_transversal_basis(const IsotropicMatroid& im, Mask b);

}  // namespace isomat
