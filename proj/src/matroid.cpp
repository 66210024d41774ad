#include "isomat/matroid.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace isomat {

BinaryMatroid::BinaryMatroid(Gf2Matrix rep) : rep_(std::move(rep)) { rank_ = ::isomat::rank(rep_); }

int BinaryMatroid::rank_of(Mask s) const {
  if (s & ~ground_mask()) throw Error(Errc::UnknownElement, "subset outside the ground set");
  return rank_cols(rep_, s);
}

std::vector<Mask> BinaryMatroid::circuits(std::optional<int> size_cap) const {
  std::vector<Mask> basis = cycle_space();
  const int nu = static_cast<int>(basis.size());
  if (nu > 22) throw Error(Errc::CapExceeded, "cycle space too large for circuit enumeration");
  std::vector<Mask> vecs;
  vecs.reserve((size_t{1} << nu) - 1);
  Mask cur = 0;
  for (Mask i = 1; i < (Mask{1} << nu); ++i) {
    cur ^= basis[lowest_bit(i)];  // gray-code walk of the span
    if (!size_cap || popcount(cur) <= *size_cap) vecs.push_back(cur);
  }
  std::sort(vecs.begin(), vecs.end(),
            [](Mask a, Mask b) { return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b; });
  std::vector<Mask> out;
  for (Mask v : vecs) {
    bool minimal = true;
    for (Mask c : out)
      if ((c & v) == c) { minimal = false; break; }
    if (minimal) out.push_back(v);
  }
  return out;
}

Mask BinaryMatroid::fundamental_circuit(int e, Mask basis) const {
  if (e < 0 || e >= size()) throw Error(Errc::UnknownElement, "element outside the ground set");
  if (!is_basis(basis)) throw Error(Errc::NotABasis, "fundamental circuit needs a basis");
  if (has_bit(basis, e)) throw Error(Errc::ElementInBasis, "element already in the basis");
  Gf2Span span;
  for (int b : bits_of(basis)) span.insert(rep_.col(b), bit(b));
  auto combo = span.express(rep_.col(e));
  if (!combo) throw Error(Errc::NotABasis, "basis does not span the element");
  return *combo | bit(e);
}

BinaryMatroid::ElementClasses BinaryMatroid::loops_coloops_parallel_series() const {
  ElementClasses out;
  std::map<Mask, Mask> by_column;
  for (int e = 0; e < size(); ++e) {
    Mask col = rep_.col(e);
    if (!col) out.loops |= bit(e);
    else by_column[col] |= bit(e);
  }
  for (auto& [col, cls] : by_column)
    if (popcount(cls) >= 2) out.parallel_classes.push_back(cls);

  BinaryMatroid d = dual();
  std::map<Mask, Mask> dual_cols;
  for (int e = 0; e < size(); ++e) {
    Mask col = d.rep_.col(e);
    if (!col) out.coloops |= bit(e);
    else dual_cols[col] |= bit(e);
  }
  for (auto& [col, cls] : dual_cols)
    if (popcount(cls) >= 2) out.series_classes.push_back(cls);
  return out;
}

BinaryMatroid BinaryMatroid::dual() const {
  RrefResult rr = rref(rep_);
  const int r = rank_, n = size();
  std::vector<int> pivots = rr.pivot_cols;
  std::vector<int> nonpivots;
  {
    Mask pm = 0;
    for (int p : pivots) pm |= bit(p);
    for (int c = 0; c < n; ++c)
      if (!has_bit(pm, c)) nonpivots.push_back(c);
  }
  // From standard form (I | A) build (A^T | I): non-pivot elements index the
  // dual's rows; pivot element p gets column (A[i, *])^T, non-pivot gets a unit.
  Gf2Matrix drep(n - r, n);
  drep.col_labels = rep_.col_labels;
  for (int i = 0; i < static_cast<int>(nonpivots.size()); ++i) {
    drep.set(i, nonpivots[i], true);
    for (int j = 0; j < r; ++j)
      if (rr.mat.get(j, nonpivots[i])) drep.set(i, pivots[j], true);
  }
  return BinaryMatroid(std::move(drep));
}

LoopedGraph BinaryMatroid::fundamental_graph(Mask basis) const {
  if (!is_basis(basis)) throw Error(Errc::NotABasis, "fundamental graph needs a basis");
  LoopedGraph g(size());
  Gf2Span span;
  for (int b : bits_of(basis)) span.insert(rep_.col(b), bit(b));
  for (int e : bits_of(ground_mask() & ~basis)) {
    auto combo = span.express(rep_.col(e));
    if (!combo) throw Error(Errc::NotABasis, "basis does not span the ground set");
    for (int b : bits_of(*combo)) g.add_edge(b, e);
  }
  return g;
}

std::vector<Mask> BinaryMatroid::bicycle_space() const {
  std::vector<Mask> cyc = cycle_space();
  std::vector<Mask> rows;
  for (int r = 0; r < rep_.rows(); ++r) rows.push_back(rep_.row(r));
  return span_intersection(cyc, rows, size());
}

Mask BinaryMatroid::some_basis() const {
  Mask b = 0;
  for (int p : rref(rep_).pivot_cols) b |= bit(p);
  return b;
}

std::vector<Mask> BinaryMatroid::components() const {
  if (size() == 0) return {};
  LoopedGraph fg = fundamental_graph(some_basis());
  std::vector<Mask> out;
  Mask left = fg.vertex_mask();
  while (left) {
    Mask comp = component_of(fg, lowest_bit(left));
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool BinaryMatroid::is_connected() const { return components().size() <= 1; }

BinaryMatroid BinaryMatroid::restriction(Mask keep, std::vector<int>* old_index) const {
  keep &= ground_mask();
  Gf2Matrix sub(rep_.rows(), popcount(keep));
  sub.row_labels = rep_.row_labels;
  if (old_index) old_index->clear();
  int j = 0;
  for (int c : bits_of(keep)) {
    for (int r = 0; r < rep_.rows(); ++r) sub.set(r, j, rep_.get(r, c));
    sub.col_labels[j] = rep_.col_labels[c];
    if (old_index) old_index->push_back(c);
    ++j;
  }
  return BinaryMatroid(std::move(sub));
}

BinaryMatroid BinaryMatroid::deletion(Mask drop, std::vector<int>* old_index) const {
  return restriction(ground_mask() & ~drop, old_index);
}

BinaryMatroid BinaryMatroid::contraction(Mask s, std::vector<int>* old_index) const {
  // Pivot each independent element of s to a unit column, drop its row; loops
  // created along the way (including dependent members of s) contract as
  // plain deletions.
  Gf2Matrix work = rep_;
  std::vector<char> row_gone(work.rows(), 0);
  for (int e : bits_of(s & ground_mask())) {
    int piv = -1;
    for (int r = 0; r < work.rows(); ++r)
      if (!row_gone[r] && work.get(r, e)) { piv = r; break; }
    if (piv < 0) continue;  // already a loop in the working minor
    for (int r = 0; r < work.rows(); ++r)
      if (r != piv && work.get(r, e)) work.xor_row(r, piv);
    row_gone[piv] = 1;
  }
  Mask keep = ground_mask() & ~s;
  Gf2Matrix out(static_cast<int>(std::count(row_gone.begin(), row_gone.end(), 0)), popcount(keep));
  if (old_index) old_index->clear();
  int i = 0;
  for (int r = 0; r < work.rows(); ++r) {
    if (row_gone[r]) continue;
    int j = 0;
    for (int c : bits_of(keep)) out.set(i, j++, work.get(r, c));
    ++i;
  }
  int j = 0;
  for (int c : bits_of(keep)) {
    out.col_labels[j++] = rep_.col_labels[c];
    if (old_index) old_index->push_back(c);
  }
  return BinaryMatroid(std::move(out));
}

bool matroid_equal(const BinaryMatroid& a, const BinaryMatroid& b) {
  if (a.size() != b.size()) return false;
  return canonical_basis(a.cycle_space()) == canonical_basis(b.cycle_space());
}

namespace {

// Per-element invariant used to pre-partition the ground sets: loop flag,
// parallel class size, and the multiset of small circuit sizes through it.
std::vector<std::string> element_invariants(const BinaryMatroid& m) {
  std::vector<std::vector<int>> small(m.size());
  for (Mask c : m.circuits(6))
    for (int e : bits_of(c)) small[e].push_back(popcount(c));
  std::vector<std::string> out(m.size());
  for (int e = 0; e < m.size(); ++e) {
    std::sort(small[e].begin(), small[e].end());
    std::ostringstream os;
    Mask col = m.rep().col(e);
    os << (col == 0) << '|';
    int par = 0;
    for (int f = 0; f < m.size(); ++f)
      if (m.rep().col(f) == col) ++par;
    os << par << '|';
    for (int s : small[e]) os << s << ',';
    out[e] = os.str();
  }
  return out;
}

struct IsoSearch {
  const BinaryMatroid& a;
  const BinaryMatroid& b;
  std::vector<std::vector<int>> candidates;  // per a-element, same-invariant b-elements
  std::vector<int> order;                    // a-elements, rarest class first
  std::vector<int> map;
  Mask used = 0;
  Gf2Span span_a, span_b;

  bool dfs(size_t k) {
    if (k == order.size()) return true;
    int x = order[k];
    Mask colx = a.rep().col(x);
    auto expr_x = span_a.express(colx);
    for (int y : candidates[x]) {
      if (has_bit(used, y)) continue;
      Mask coly = b.rep().col(y);
      auto expr_y = span_b.express(coly);
      // A ground bijection is a matroid isomorphism iff matched columns are
      // related by a fixed invertible linear map; so dependent columns must
      // use the same combination of previously matched columns.
      if (expr_x.has_value() != expr_y.has_value()) continue;
      if (expr_x && *expr_x != *expr_y) continue;
      map[x] = y;
      used |= bit(y);
      if (!expr_x) { span_a.insert(colx, bit(x)); span_b.insert(coly, bit(x)); }
      if (dfs(k + 1)) return true;
      if (!expr_x) { span_a.pop(); span_b.pop(); }
      used &= ~bit(y);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> matroid_isomorphism(const BinaryMatroid& a, const BinaryMatroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
  auto inv_a = element_invariants(a);
  auto inv_b = element_invariants(b);
  std::map<std::string, std::vector<int>> classes_b;
  for (int e = 0; e < b.size(); ++e) classes_b[inv_b[e]].push_back(e);
  {
    std::map<std::string, int> count_a;
    for (const auto& s : inv_a) ++count_a[s];
    for (const auto& [s, cnt] : count_a) {
      auto it = classes_b.find(s);
      if (it == classes_b.end() || static_cast<int>(it->second.size()) != cnt) return std::nullopt;
    }
  }
  IsoSearch search{a, b, {}, {}, std::vector<int>(a.size(), -1), 0, {}, {}};
  search.candidates.resize(a.size());
  for (int e = 0; e < a.size(); ++e) search.candidates[e] = classes_b[inv_a[e]];
  search.order.resize(a.size());
  for (int e = 0; e < a.size(); ++e) search.order[e] = e;
  std::stable_sort(search.order.begin(), search.order.end(), [&](int x, int y) {
    return search.candidates[x].size() < search.candidates[y].size();
  });
  if (search.dfs(0)) return search.map;
  return std::nullopt;
}

std::string matroid_to_text(const BinaryMatroid& m) {
  std::ostringstream os;
  os << "rows=" << m.rep().rows() << " cols=" << m.rep().cols() << "\n";
  for (int r = 0; r < m.rep().rows(); ++r) {
    for (int c = 0; c < m.rep().cols(); ++c) os << (m.rep().get(r, c) ? '1' : '0');
    os << "\n";
  }
  os << "ground:";
  for (const auto& l : m.ground()) os << ' ' << l;
  os << "\n";
  return os.str();
}

BinaryMatroid matroid_from_text(const std::string& text) { return BinaryMatroid(matrix_from_text(text)); }

}  // namespace isomat
