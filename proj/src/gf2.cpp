#include "isomat/gf2.hpp"

#include <algorithm>
#include <sstream>

namespace isomat {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

}  // namespace

Gf2Matrix::Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows, 0) {
  if (rows < 0 || cols < 0 || rows > 64 || cols > 64)
    throw Error(Errc::CapExceeded, "matrix dimensions must be within 0..64");
  row_labels = default_labels(rows);
  col_labels = default_labels(cols);
}

Mask Gf2Matrix::col(int c) const {
  Mask out = 0;
  for (int r = 0; r < rows_; ++r)
    if (has_bit(row_[r], c)) out |= bit(r);
  return out;
}

int rank(const Gf2Matrix& m) { return rank_cols(m, full_mask(m.cols())); }

int rank_cols(const Gf2Matrix& m, Mask cols) {
  std::vector<Mask> basis;
  for (int r = 0; r < m.rows(); ++r) {
    Mask v = m.row(r) & cols;
    for (Mask b : basis) v = std::min(v, v ^ b);
    if (v) basis.push_back(v);
  }
  return static_cast<int>(basis.size());
}

RrefResult rref(const Gf2Matrix& m) {
  RrefResult out{m, {}};
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (out.mat.get(i, c)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) {
      Mask tmp = out.mat.row(piv);
      out.mat.set_row(piv, out.mat.row(r));
      out.mat.set_row(r, tmp);
    }
    for (int i = 0; i < m.rows(); ++i)
      if (i != r && out.mat.get(i, c)) out.mat.xor_row(i, r);
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

std::optional<Mask> in_span(const Gf2Matrix& m, const BitVec& v) {
  if (v.size != m.rows()) throw Error(Errc::IndexMismatch, "vector length does not match row count");
  Gf2Span span;
  for (int c = 0; c < m.cols(); ++c) span.insert(m.col(c), bit(c));
  return span.express(v.bits);
}

std::vector<Mask> nullspace_basis(const Gf2Matrix& m) {
  std::vector<Mask> out;
  Gf2Span span;
  for (int c = 0; c < m.cols(); ++c) {
    Mask v = m.col(c);
    if (auto combo = span.express(v))
      out.push_back(*combo | bit(c));
    else
      span.insert(v, bit(c));
  }
  return out;
}

Gf2Matrix principal_pivot_transform(const Gf2Matrix& a, Mask x) {
  if (a.rows() != a.cols()) throw Error(Errc::IndexMismatch, "principal pivot transform needs a square matrix");
  const int n = a.rows();
  x &= full_mask(n);
  std::vector<int> xs, ys;
  for (int i = 0; i < n; ++i) (has_bit(x, i) ? xs : ys).push_back(i);
  const int k = static_cast<int>(xs.size());

  // Invert P = A[X] by Gauss-Jordan on (P | I).
  std::vector<Mask> aug(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j)
      if (a.get(xs[i], xs[j])) aug[i] |= bit(j);
    aug[i] |= bit(k + i);
  }
  for (int c = 0; c < k; ++c) {
    int piv = -1;
    for (int i = c; i < k; ++i)
      if (has_bit(aug[i], c)) { piv = i; break; }
    if (piv < 0) throw Error(Errc::SingularPivot, "principal submatrix is singular");
    std::swap(aug[piv], aug[c]);
    for (int i = 0; i < k; ++i)
      if (i != c && has_bit(aug[i], c)) aug[i] ^= aug[c];
  }
  auto pinv = [&](int i, int j) { return has_bit(aug[i], k + j); };

  // Blocks of A: P = A[X,X], Q = A[X,Y], R = A[Y,X], S = A[Y,Y];
  // A*X = [P^-1, P^-1 Q; R P^-1, S + R P^-1 Q] (all signs vanish over GF(2)).
  Gf2Matrix out(n, n);
  out.row_labels = a.row_labels;
  out.col_labels = a.col_labels;

  // P^-1 Q, with rows over xs and cols over ys.
  auto pinv_q = [&](int i, int yj) {
    bool s = false;
    for (int t = 0; t < k; ++t) s ^= pinv(i, t) && a.get(xs[t], ys[yj]);
    return s;
  };
  // R P^-1, rows over ys and cols over xs.
  auto r_pinv = [&](int yi, int j) {
    bool s = false;
    for (int t = 0; t < k; ++t) s ^= a.get(ys[yi], xs[t]) && pinv(t, j);
    return s;
  };

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out.set(xs[i], xs[j], pinv(i, j));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < static_cast<int>(ys.size()); ++j) out.set(xs[i], ys[j], pinv_q(i, j));
  for (int i = 0; i < static_cast<int>(ys.size()); ++i)
    for (int j = 0; j < k; ++j) out.set(ys[i], xs[j], r_pinv(i, j));
  for (int i = 0; i < static_cast<int>(ys.size()); ++i)
    for (int j = 0; j < static_cast<int>(ys.size()); ++j) {
      bool s = a.get(ys[i], ys[j]);
      for (int t = 0; t < k; ++t) s ^= r_pinv(i, t) && pinv_q(t, j);
      out.set(ys[i], ys[j], s);
    }
  return out;
}

bool Gf2Span::insert(Mask v, Mask tag) {
  for (const Row& row : rows_) {
    Mask r = v ^ row.vec;
    if (r < v) { v = r; tag ^= row.tag; }
  }
  if (!v) return false;
  rows_.push_back({v, tag});
  return true;
}

std::optional<Mask> Gf2Span::express(Mask v) const {
  Mask tag = 0;
  for (const Row& row : rows_) {
    Mask r = v ^ row.vec;
    if (r < v) { v = r; tag ^= row.tag; }
  }
  if (v) return std::nullopt;
  return tag;
}

std::vector<Mask> canonical_basis(std::vector<Mask> vecs) {
  std::vector<Mask> basis;
  for (Mask v : vecs) {
    for (Mask b : basis) v = std::min(v, v ^ b);
    if (!v) continue;
    // Back-substitute so each leading bit appears in one basis vector only.
    for (Mask& b : basis) b = std::min(b, b ^ v);
    basis.push_back(v);
  }
  std::sort(basis.begin(), basis.end(), std::greater<Mask>());
  return basis;
}

std::vector<Mask> orthogonal_complement(const std::vector<Mask>& vecs, int width) {
  Gf2Matrix m(static_cast<int>(vecs.size()), width);
  for (size_t i = 0; i < vecs.size(); ++i) m.set_row(static_cast<int>(i), vecs[i]);
  return nullspace_basis(m);
}

std::vector<Mask> span_intersection(const std::vector<Mask>& a, const std::vector<Mask>& b, int width) {
  // span(a) ∩ span(b) = (a^⊥ ∪ b^⊥)^⊥
  std::vector<Mask> gens = orthogonal_complement(a, width);
  for (Mask v : orthogonal_complement(b, width)) gens.push_back(v);
  return canonical_basis(orthogonal_complement(gens, width));
}

std::string matrix_to_text(const Gf2Matrix& m) {
  std::ostringstream os;
  os << "rows=" << m.rows() << " cols=" << m.cols() << "\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) os << (m.get(r, c) ? '1' : '0');
    os << "\n";
  }
  os << "rowlabels:";
  for (const auto& l : m.row_labels) os << ' ' << l;
  os << "\ncollabels:";
  for (const auto& l : m.col_labels) os << ' ' << l;
  os << "\n";
  return os.str();
}

Gf2Matrix matrix_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw Error(Errc::ParseError, "empty matrix text");
  int r = -1, c = -1;
  if (std::sscanf(line.c_str(), "rows=%d cols=%d", &r, &c) != 2 || r < 0 || c < 0)
    throw Error(Errc::ParseError, "expected 'rows=<r> cols=<c>'");
  if (r > 64 || c > 64) throw Error(Errc::CapExceeded, "matrix dimensions must be within 0..64");
  Gf2Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (!std::getline(is, line)) throw Error(Errc::ParseError, "missing matrix row");
    if (static_cast<int>(line.size()) < c) throw Error(Errc::ParseError, "matrix row too short");
    for (int j = 0; j < c; ++j) {
      if (line[j] == '1') m.set(i, j, true);
      else if (line[j] != '0') throw Error(Errc::ParseError, "matrix entries must be 0 or 1");
    }
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::vector<std::string> labels;
    std::string tok;
    while (ls >> tok) labels.push_back(tok);
    if (key == "rowlabels:") {
      if (static_cast<int>(labels.size()) != r) throw Error(Errc::ParseError, "rowlabels count mismatch");
      m.row_labels = labels;
    } else if (key == "collabels:" || key == "ground:") {
      if (static_cast<int>(labels.size()) != c) throw Error(Errc::ParseError, "collabels count mismatch");
      m.col_labels = labels;
    } else if (key == "partition:") {
      // consumed by the sheltering-matroid fixture reader
      break;
    } else {
      throw Error(Errc::ParseError, "unknown matrix text line: " + key);
    }
  }
  return m;
}

}  // namespace isomat
