#include "isomat/isotropic.hpp"

#include <algorithm>
#include <sstream>

namespace isomat {

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Phi: return "phi";
    case Kind::Chi: return "chi";
    case Kind::Psi: return "psi";
  }
  return "?";
}

std::string to_string(const GroundElem& e) { return to_string(e.kind) + ":" + std::to_string(e.vertex); }

GroundElem ground_elem_from_string(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw Error(Errc::ParseError, "ground element needs 'kind:vertex'");
  std::string kind = s.substr(0, colon);
  int v = -1;
  try {
    v = std::stoi(s.substr(colon + 1));
  } catch (...) {
    throw Error(Errc::ParseError, "bad ground element vertex: " + s);
  }
  if (kind == "phi") return {v, Kind::Phi};
  if (kind == "chi") return {v, Kind::Chi};
  if (kind == "psi") return {v, Kind::Psi};
  throw Error(Errc::ParseError, "bad ground element kind: " + kind);
}

std::string subtransversal_to_string(Mask s) {
  std::ostringstream os;
  bool first = true;
  for (int i : bits_of(s)) {
    if (!first) os << ' ';
    os << to_string(ground_elem(i));
    first = false;
  }
  return os.str();
}

Mask subtransversal_from_string(const std::string& s, int n) {
  std::istringstream is(s);
  std::string tok;
  Mask out = 0;
  while (is >> tok) {
    GroundElem e = ground_elem_from_string(tok);
    if (e.vertex < 0 || e.vertex >= n) throw Error(Errc::UnknownVertex, "element vertex out of range");
    out |= bit(ground_index(e));
  }
  if (!is_subtransversal(out, n)) throw Error(Errc::NotSubtransversal, "more than one element in a triple");
  return out;
}

IsotropicMatroid IsotropicMatroid::build(const LoopedGraph& g) {
  const int n = g.order();
  if (3 * n > 63) throw Error(Errc::CapExceeded, "isotropic matroid needs 3n <= 63");
  Gf2Matrix rep(n, 3 * n);
  for (int v = 0; v < n; ++v) {
    Mask acol = g.neighbors(v);
    if (g.looped(v)) acol |= bit(v);
    rep.set(v, ground_index(v, Kind::Phi), true);
    for (int r : bits_of(acol)) rep.set(r, ground_index(v, Kind::Chi), true);
    for (int r : bits_of(acol ^ bit(v))) rep.set(r, ground_index(v, Kind::Psi), true);
    for (Kind k : {Kind::Phi, Kind::Chi, Kind::Psi})
      rep.col_labels[ground_index(v, k)] = to_string(GroundElem{v, k});
  }
  IsotropicMatroid im;
  im.graph_ = g;
  im.matroid_ = BinaryMatroid(std::move(rep));
  return im;
}

IaMatroid build_ia(const LoopedGraph& g) {
  const int n = g.order();
  if (2 * n > 64) throw Error(Errc::CapExceeded, "restricted isotropic matroid needs 2n <= 64");
  Gf2Matrix rep(n, 2 * n);
  for (int v = 0; v < n; ++v) {
    Mask acol = g.neighbors(v);
    if (g.looped(v)) acol |= bit(v);
    rep.set(v, 2 * v, true);
    for (int r : bits_of(acol)) rep.set(r, 2 * v + 1, true);
    rep.col_labels[2 * v] = "phi:" + std::to_string(v);
    rep.col_labels[2 * v + 1] = "chi:" + std::to_string(v);
  }
  return IaMatroid{BinaryMatroid(std::move(rep)), n};
}

Mask neighborhood_circuit(const LoopedGraph& g, int v) {
  g.check_vertex(v);
  if (g.degree(v) == 0) throw Error(Errc::IsolatedVertex, "isolated vertices have no neighborhood circuit");
  Mask out = bit(ground_index(v, g.looped(v) ? Kind::Psi : Kind::Chi));
  for (int w : bits_of(g.neighbors(v))) out |= bit(ground_index(w, Kind::Phi));
  return out;
}

Mask stable_set_transversal(const LoopedGraph& g, Mask x) {
  if (!is_stable(g, x)) throw Error(Errc::NotStable, "set is not stable");
  Mask t = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (!has_bit(x, v)) t |= bit(ground_index(v, Kind::Phi));
    else t |= bit(ground_index(v, g.looped(v) ? Kind::Psi : Kind::Chi));
  }
  return t;
}

TransverseMatroid restrict_to_transversal(const IsotropicMatroid& im, Mask t) {
  if (!is_subtransversal(t, im.order()))
    throw Error(Errc::NotSubtransversal, "restriction set is not a subtransversal");
  TransverseMatroid out;
  out.transversal = t;
  out.matroid = im.matroid().restriction(t, &out.old_index);
  return out;
}

TransverseMatroid neighborhood_matroid(const IsotropicMatroid& im, Mask x) {
  return restrict_to_transversal(im, stable_set_transversal(im.graph(), x));
}

long long transversal_count(int n) {
  long long out = 1;
  for (int i = 0; i < n; ++i) out *= 3;
  return out;
}

Mask transversal_from_index(long long idx, int n) {
  Mask out = 0;
  for (int v = n - 1; v >= 0; --v) {
    out |= bit(ground_index(v, static_cast<Kind>(idx % 3)));
    idx /= 3;
  }
  return out;
}

std::vector<Kind> transversal_kinds(Mask t, int n) {
  if (!is_transversal(t, n)) throw Error(Errc::NotATransversal, "mask is not a transversal");
  std::vector<Kind> out(n);
  for (int v = 0; v < n; ++v) out[v] = static_cast<Kind>(lowest_bit(t >> (3 * v) & 7));
  return out;
}

bool is_subtransversal(Mask s, int n) {
  if (s & ~full_mask(3 * n)) return false;
  for (int v = 0; v < n; ++v)
    if (popcount((s >> (3 * v)) & 7) > 1) return false;
  return true;
}

bool is_transversal(Mask t, int n) {
  if (t & ~full_mask(3 * n)) return false;
  for (int v = 0; v < n; ++v)
    if (popcount((t >> (3 * v)) & 7) != 1) return false;
  return true;
}

std::vector<Mask> all_transversals(int n, long long cap) {
  const long long total = transversal_count(n);
  if (total > cap) throw Error(Errc::CapExceeded, "too many transversals");
  std::vector<Mask> out;
  out.reserve(total);
  for (long long i = 0; i < total; ++i) out.push_back(transversal_from_index(i, n));
  return out;
}

std::vector<Mask> transverse_circuits(const IsotropicMatroid& im, std::optional<int> size_cap) {
  std::vector<Mask> out;
  for (Mask c : im.matroid().circuits(size_cap))
    if (is_subtransversal(c, im.order())) out.push_back(c);
  return out;
}

CompatibleIso CompatibleIso::identity(int n) {
  CompatibleIso out;
  out.vertex_map.resize(n);
  out.kind_map.assign(n, {Kind::Phi, Kind::Chi, Kind::Psi});
  for (int v = 0; v < n; ++v) out.vertex_map[v] = v;
  return out;
}

Mask CompatibleIso::apply_mask(Mask m) const {
  Mask out = 0;
  for (int i : bits_of(m)) out |= bit(apply_index(i));
  return out;
}

CompatibleIso CompatibleIso::then(const CompatibleIso& second) const {
  CompatibleIso out;
  const int n = static_cast<int>(vertex_map.size());
  out.vertex_map.resize(n);
  out.kind_map.resize(n);
  for (int v = 0; v < n; ++v) {
    int mid = vertex_map[v];
    out.vertex_map[v] = second.vertex_map[mid];
    for (int k = 0; k < 3; ++k)
      out.kind_map[v][k] = second.kind_map[mid][static_cast<int>(kind_map[v][k])];
  }
  return out;
}

CompatibleIso CompatibleIso::inverse() const {
  CompatibleIso out;
  const int n = static_cast<int>(vertex_map.size());
  out.vertex_map.resize(n);
  out.kind_map.resize(n);
  for (int v = 0; v < n; ++v) {
    int w = vertex_map[v];
    out.vertex_map[w] = v;
    for (int k = 0; k < 3; ++k) out.kind_map[w][static_cast<int>(kind_map[v][k])] = static_cast<Kind>(k);
  }
  return out;
}

namespace {

void swap_kinds(CompatibleIso& iso, int v, Kind a, Kind b) {
  std::swap(iso.kind_map[v][static_cast<int>(a)], iso.kind_map[v][static_cast<int>(b)]);
}

}  // namespace

std::pair<LoopedGraph, CompatibleIso> induced_iso(const LoopedGraph& g, const GraphMove& m) {
  if (m.kind == MoveKind::EdgePivot)
    return compose_induced(g, {{MoveKind::SimpleLocalComplement, m.v},
                               {MoveKind::SimpleLocalComplement, m.w},
                               {MoveKind::SimpleLocalComplement, m.v}});
  g.check_vertex(m.v);
  LoopedGraph h = apply_move(g, m);
  CompatibleIso iso = CompatibleIso::identity(g.order());
  const bool looped = g.looped(m.v);
  switch (m.kind) {
    case MoveKind::LoopComplement:
      swap_kinds(iso, m.v, Kind::Chi, Kind::Psi);
      break;
    case MoveKind::NonSimpleLocalComplement:
      swap_kinds(iso, m.v, Kind::Phi, looped ? Kind::Chi : Kind::Psi);
      break;
    case MoveKind::SimpleLocalComplement:
      swap_kinds(iso, m.v, Kind::Phi, looped ? Kind::Chi : Kind::Psi);
      for (int w : bits_of(g.neighbors(m.v))) swap_kinds(iso, w, Kind::Chi, Kind::Psi);
      break;
    default:
      break;
  }
  return {std::move(h), std::move(iso)};
}

std::pair<LoopedGraph, CompatibleIso> compose_induced(const LoopedGraph& g,
                                                      const std::vector<GraphMove>& moves) {
  LoopedGraph h = g;
  CompatibleIso iso = CompatibleIso::identity(g.order());
  for (const GraphMove& m : moves) {
    auto [next, step] = induced_iso(h, m);
    h = std::move(next);
    iso = iso.then(step);
  }
  return {std::move(h), std::move(iso)};
}

PartitionedMinor isotropic_minor(const IsotropicMatroid& im, Mask s) {
  const int n = im.order();
  if (!is_subtransversal(s, n)) throw Error(Errc::NotSubtransversal, "minor needs a subtransversal");
  Mask siblings = 0;
  std::vector<int> survivors;
  for (int v = 0; v < n; ++v) {
    if (s & triple_mask(v)) siblings |= triple_mask(v) & ~s;
    else survivors.push_back(v);
  }
  std::vector<int> after_contract;
  BinaryMatroid contracted = im.matroid().contraction(s, &after_contract);
  Mask drop = 0;
  for (size_t j = 0; j < after_contract.size(); ++j)
    if (has_bit(siblings, after_contract[j])) drop |= bit(static_cast<int>(j));
  BinaryMatroid minor = contracted.deletion(drop);

  PartitionedMinor out{std::move(minor), survivors};
  Gf2Matrix rep = out.matroid.rep();
  for (size_t v = 0; v < survivors.size(); ++v)
    for (Kind k : {Kind::Phi, Kind::Chi, Kind::Psi})
      rep.col_labels[ground_index(static_cast<int>(v), k)] =
          to_string(GroundElem{static_cast<int>(v), k});
  out.matroid = BinaryMatroid(std::move(rep));
  return out;
}

std::vector<ParallelPair> classify_parallels(const IsotropicMatroid& im) {
  const LoopedGraph& g = im.graph();
  const Gf2Matrix& rep = im.matroid().rep();
  std::vector<ParallelPair> out;
  for (int a = 0; a < 3 * im.order(); ++a) {
    Mask col_a = rep.col(a);
    if (!col_a) continue;
    for (int b = a + 1; b < 3 * im.order(); ++b) {
      if (rep.col(b) != col_a) continue;
      ParallelPair pair{a, b, {}};
      GroundElem ea = ground_elem(a), eb = ground_elem(b);
      int v = ea.vertex, w = eb.vertex;
      if (v == w) {
        pair.categories.push_back(ParallelCategory::IsolatedTriple);
      } else {
        bool a_zero_v = !has_bit(col_a, v), a_zero_w = !has_bit(col_a, w);
        if (g.neighbors(v) == g.neighbors(w) && g.neighbors(v) != 0 && a_zero_v && a_zero_w)
          pair.categories.push_back(ParallelCategory::NonadjacentTwins);
        if ((g.neighbors(v) | bit(v)) == (g.neighbors(w) | bit(w)) && !a_zero_v && !a_zero_w)
          pair.categories.push_back(ParallelCategory::AdjacentTwins);
        bool pendant_vw = g.neighbors(v) == bit(w) && eb.kind == Kind::Phi && ea.kind != Kind::Phi && a_zero_v;
        bool pendant_wv = g.neighbors(w) == bit(v) && ea.kind == Kind::Phi && eb.kind != Kind::Phi && a_zero_w;
        if (pendant_vw || pendant_wv) pair.categories.push_back(ParallelCategory::Pendant);
      }
      out.push_back(std::move(pair));
    }
  }
  return out;
}

ParallelReduction isotropic_parallel_reduction(const IsotropicMatroid& im, int a, int b) {
  const Gf2Matrix& rep = im.matroid().rep();
  if (a == b || rep.col(a) != rep.col(b) || !rep.col(a))
    throw Error(Errc::NotParallel, "elements are not a parallel pair");
  GroundElem ea = ground_elem(a), eb = ground_elem(b);
  if (ea.kind == Kind::Phi && eb.kind == Kind::Phi)
    throw Error(Errc::BothPhi, "two parallel phi elements cannot exist");
  int rho_vertex;
  if (ea.kind == Kind::Phi) rho_vertex = eb.vertex;
  else if (eb.kind == Kind::Phi) rho_vertex = ea.vertex;
  else rho_vertex = std::min(ea.vertex, eb.vertex);  // twin case: lower vertex goes

  ParallelReduction out{rho_vertex, delete_vertex(im.graph(), rho_vertex),
                        isotropic_minor(im, bit(ground_index(rho_vertex, Kind::Phi)))};
  return out;
}

std::string to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::Isolated: return "isolated";
    case ReductionKind::Pendant: return "pendant";
    case ReductionKind::Twin: return "twin";
  }
  return "?";
}

std::vector<std::pair<int, ReductionKind>> pendant_twin_reductions(const LoopedGraph& g) {
  std::vector<std::pair<int, ReductionKind>> out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) out.emplace_back(v, ReductionKind::Isolated);
    if (g.degree(v) == 1) out.emplace_back(v, ReductionKind::Pendant);
    for (int w = 0; w < g.order(); ++w) {
      if (w == v) continue;
      bool open_twin = g.neighbors(v) == g.neighbors(w) && g.neighbors(v) != 0;
      bool closed_twin = (g.neighbors(v) | bit(v)) == (g.neighbors(w) | bit(w));
      if (open_twin || closed_twin) { out.emplace_back(v, ReductionKind::Twin); break; }
    }
  }
  return out;
}

std::optional<std::vector<int>> dh_resolution(const LoopedGraph& g) {
  LoopedGraph cur = g;
  std::vector<int> live(g.order());
  for (int v = 0; v < g.order(); ++v) live[v] = v;
  std::vector<int> removed;
  while (cur.order() > 1) {
    auto options = pendant_twin_reductions(cur);
    if (options.empty()) return std::nullopt;
    auto pick = *std::min_element(options.begin(), options.end(), [](const auto& x, const auto& y) {
      auto key = [](const std::pair<int, ReductionKind>& p) {
        int pref = p.second == ReductionKind::Isolated ? 0 : p.second == ReductionKind::Pendant ? 1 : 2;
        return std::pair<int, int>(pref, p.first);
      };
      return key(x) < key(y);
    });
    removed.push_back(live[pick.first]);
    live.erase(live.begin() + pick.first);
    cur = delete_vertex(cur, pick.first);
  }
  return removed;
}

LoopedGraph bipartite_double(const LoopedGraph& g) {
  const int n = g.order();
  if (3 * n > 63) throw Error(Errc::CapExceeded, "bipartite double needs 3n <= 63");
  LoopedGraph b(3 * n);
  for (int u = 0; u < n; ++u) {
    Mask acol = g.neighbors(u);
    if (g.looped(u)) acol |= bit(u);
    for (int v : bits_of(acol)) b.add_edge(ground_index(u, Kind::Phi), ground_index(v, Kind::Chi));
    for (int v : bits_of(acol ^ bit(u))) b.add_edge(ground_index(u, Kind::Phi), ground_index(v, Kind::Psi));
  }
  return b;
}

LoopedGraph graph_from_transversal_basis(const IsotropicMatroid& im, Mask b) {
  const int n = im.order();
  if (!is_transversal(b, n)) throw Error(Errc::NotATransversal, "basis must be a transversal");
  if (!im.matroid().is_basis(b)) throw Error(Errc::NotABasis, "transversal is not a basis");
  std::vector<int> b_elem(n), c_elem(n);
  for (int v = 0; v < n; ++v) {
    b_elem[v] = lowest_bit(b & triple_mask(v));
    c_elem[v] = lowest_bit(triple_mask(v) & ~b);
  }
  std::vector<Mask> row(n, 0);
  for (int v = 0; v < n; ++v) {
    Mask circ = im.matroid().fundamental_circuit(c_elem[v], b);
    for (int w = 0; w < n; ++w)
      if (w != v && has_bit(circ, b_elem[w])) row[v] |= bit(w);
  }
  LoopedGraph h(n);
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) {
      if (has_bit(row[v], w) != has_bit(row[w], v))
        throw Error(Errc::NotABasis, "fundamental-circuit incidences came out asymmetric");
      if (has_bit(row[v], w)) h.add_edge(v, w);
    }
  return h;
}

}  // namespace isomat
