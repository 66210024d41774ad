// Column matroids of GF(2) matrices: rank and independence of ground
// subsets, circuit enumeration through the cycle space, fundamental circuits
// and graphs, duality, connectivity, parallels/series, and desk-scale
// matroid isomorphism. Ground subsets are masks over column positions.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isomat/gf2.hpp"
#include "isomat/graph.hpp"

namespace isomat {

class BinaryMatroid {
 public:
  BinaryMatroid() = default;
  explicit BinaryMatroid(Gf2Matrix rep);

  const Gf2Matrix& rep() const { return rep_; }
  const std::vector<std::string>& ground() const { return rep_.col_labels; }
  int size() const { return rep_.cols(); }
  Mask ground_mask() const { return full_mask(size()); }
  int rank() const { return rank_; }

  int rank_of(Mask s) const;
  bool independent(Mask s) const { return rank_of(s) == popcount(s); }
  bool is_basis(Mask s) const { return popcount(s) == rank_ && independent(s); }
  int nullity_of(Mask s) const { return popcount(s) - rank_of(s); }

  // All circuits, optionally only those of size <= size_cap. Enumerates the
  // cycle space, so the nullity is capped (CapExceeded beyond 2^22 vectors).
  std::vector<Mask> circuits(std::optional<int> size_cap = std::nullopt) const;
  // The unique circuit inside B + e, for a basis B and e outside B.
  Mask fundamental_circuit(int e, Mask basis) const;

  struct ElementClasses {
    Mask loops = 0;
    Mask coloops = 0;
    std::vector<Mask> parallel_classes;  // classes of size >= 2, non-loop elements
    std::vector<Mask> series_classes;    // classes of size >= 2, non-coloop elements
  };
  ElementClasses loops_coloops_parallel_series() const;

  BinaryMatroid dual() const;
  // Bipartite graph on ground positions: b ~ w iff b lies in C(w, basis).
  LoopedGraph fundamental_graph(Mask basis) const;

  std::vector<Mask> cycle_space() const { return nullspace_basis(rep_); }
  std::vector<Mask> bicycle_space() const;

  bool is_connected() const;
  std::vector<Mask> components() const;

  // keep's ground positions survive in order; old_index receives the map.
  BinaryMatroid restriction(Mask keep, std::vector<int>* old_index = nullptr) const;
  BinaryMatroid deletion(Mask drop, std::vector<int>* old_index = nullptr) const;
  BinaryMatroid contraction(Mask s, std::vector<int>* old_index = nullptr) const;

  // A deterministic RREF pivot basis.
  Mask some_basis() const;

 private:
  Gf2Matrix rep_;
  int rank_ = 0;
};

// Same ground size and the same cycle space, i.e. equal matroids under the
// positional identification of their grounds.
bool matroid_equal(const BinaryMatroid& a, const BinaryMatroid& b);

// Ground bijection carrying the cycle space of a onto that of b (positions of
// a -> positions of b), or nullopt. Backtracking over invariant classes with
// incremental linear-consistency checks.
std::optional<std::vector<int>> matroid_isomorphism(const BinaryMatroid& a, const BinaryMatroid& b);
inline bool matroids_isomorphic(const BinaryMatroid& a, const BinaryMatroid& b) {
  return matroid_isomorphism(a, b).has_value();
}

// Serialization: gf2 matrix text with a "ground:" label line.
std::string matroid_to_text(const BinaryMatroid& m);
BinaryMatroid matroid_from_text(const std::string& text);

}  // namespace isomat
