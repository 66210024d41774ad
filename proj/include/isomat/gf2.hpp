// Exact GF(2) linear algebra on small dense matrices with labeled rows and
// columns. Subsets of rows/columns are uint64_t bitmasks, so every dimension
// is capped at 64; that is far above anything the rest of the library needs.
#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isomat {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }
inline bool has_bit(Mask m, int i) { return (m >> i) & 1u; }
inline Mask bit(int i) { return Mask{1} << i; }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Iterate set bits: for (int i : bits_of(m)) ...
struct BitRange {
  Mask m;
  struct iterator {
    Mask m;
    int operator*() const { return std::countr_zero(m); }
    iterator& operator++() { m &= m - 1; return *this; }
    bool operator!=(const iterator& o) const { return m != o.m; }
  };
  iterator begin() const { return {m}; }
  iterator end() const { return {0}; }
};
inline BitRange bits_of(Mask m) { return {m}; }

enum class Errc {
  IndexMismatch,
  SingularPivot,
  UnknownVertex,
  NotAnEdge,
  LoopedEndpoint,
  CapExceeded,
  UnknownElement,
  NotABasis,
  ElementInBasis,
  NotStable,
  IsolatedVertex,
  NotSubtransversal,
  NotParallel,
  BothPhi,
  NotATransversal,
  HypothesisNotMet,
  NotTight,
  NotBinary,
  ClassNotInCycleSpace,
  NotAForest,
  WrongOrder,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Vector over GF(2) with a fixed length; bit i is coordinate i.
struct BitVec {
  int size = 0;
  Mask bits = 0;

  BitVec() = default;
  BitVec(int n, Mask b) : size(n), bits(b & full_mask(n)) {}

  bool get(int i) const { return has_bit(bits, i); }
  BitVec operator+(const BitVec& o) const {
    if (size != o.size) throw Error(Errc::IndexMismatch, "BitVec size mismatch");
    return BitVec(size, bits ^ o.bits);
  }
  bool operator==(const BitVec& o) const = default;
};

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const { return has_bit(row_[r], c); }
  void set(int r, int c, bool v) {
    if (v) row_[r] |= bit(c); else row_[r] &= ~bit(c);
  }
  Mask row(int r) const { return row_[r]; }
  void set_row(int r, Mask m) { row_[r] = m & full_mask(cols_); }
  void xor_row(int dst, int src) { row_[dst] ^= row_[src]; }
  Mask col(int c) const;
  BitVec col_vec(int c) const { return BitVec(rows_, col(c)); }

  std::vector<std::string> row_labels;  // defaults "0".."rows-1"
  std::vector<std::string> col_labels;  // defaults "0".."cols-1"

  bool operator==(const Gf2Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && row_ == o.row_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Mask> row_;
};

int rank(const Gf2Matrix& m);
// Rank of the column submatrix selected by `cols` (row rank of masked rows).
int rank_cols(const Gf2Matrix& m, Mask cols);

struct RrefResult {
  Gf2Matrix mat;
  std::vector<int> pivot_cols;
};
// Reduced row echelon form; pivots chosen as the first nonzero column.
RrefResult rref(const Gf2Matrix& m);

// A column subset of `m` whose sum is `v`, expressed over the RREF pivot
// basis, or nullopt when v is outside the column span.
std::optional<Mask> in_span(const Gf2Matrix& m, const BitVec& v);

// Basis of {x : Mx = 0} as masks over columns; size = cols - rank.
std::vector<Mask> nullspace_basis(const Gf2Matrix& m);

// Principal pivot transform of a square matrix over the principal submatrix
// on X (which must be nonsingular). Labels carry over unchanged.
Gf2Matrix principal_pivot_transform(const Gf2Matrix& a, Mask x);

// Incremental span of GF(2) vectors with expression tracking. Each inserted
// vector carries a tag mask; expressions come back as XORs of tags.
class Gf2Span {
 public:
  // Returns true if v enlarged the span.
  bool insert(Mask v, Mask tag);
  // Tag combination expressing v, or nullopt if v is outside the span.
  std::optional<Mask> express(Mask v) const;
  bool contains(Mask v) const { return express(v).has_value(); }
  int dim() const { return static_cast<int>(rows_.size()); }
  void pop() { rows_.pop_back(); }

 private:
  struct Row { Mask vec; Mask tag; };
  std::vector<Row> rows_;
};

// Canonical (RREF, sorted-pivot) basis for the span of the given vectors.
std::vector<Mask> canonical_basis(std::vector<Mask> vecs);
inline bool same_span(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  return canonical_basis(a) == canonical_basis(b);
}
// Basis of the intersection of two spans of masks of common width.
std::vector<Mask> span_intersection(const std::vector<Mask>& a, const std::vector<Mask>& b, int width);
// Basis of the orthogonal complement of span(vecs) in GF(2)^width.
std::vector<Mask> orthogonal_complement(const std::vector<Mask>& vecs, int width);

// Text format: "rows=<r> cols=<c>", r lines of 0/1 characters, optional
// "rowlabels:" / "collabels:" lines ("ground:" is accepted for collabels).
std::string matrix_to_text(const Gf2Matrix& m);
Gf2Matrix matrix_from_text(const std::string& text);

}  // namespace isomat
