#include "mbqc/flow.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mbqc {

namespace {

void require_subset(const QubitSet& s, int n, const char* what) {
  for (int q : s)
    if (q < 1 || q > n)
      throw Error(ErrorCode::IndexOutOfRange,
                  std::string(what) + " member " + std::to_string(q) + " outside 1.." + std::to_string(n), q);
}

std::vector<std::size_t> to_cols(const QubitSet& s) {
  std::vector<std::size_t> r;
  r.reserve(s.size());
  for (int q : s) r.push_back(static_cast<std::size_t>(q - 1));
  return r;
}

std::vector<std::size_t> all_rows(std::size_t n) {
  std::vector<std::size_t> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = i;
  return r;
}

// basis of {x : m x == 0}
std::vector<BitVector> kernel_basis(const BitMatrix& m) {
  RowReduction r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector x(m.cols());
    x.set(f, true);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      if (r.rref.get(i, f)) x.set(r.pivots[i], true);
    basis.push_back(x);
  }
  return basis;
}

}  // namespace

BitMatrix ProcessingRelations::compact_T() const {
  QubitSet igc = set_complement(igauge, n());
  QubitSet occ = set_complement(ocomp, n());
  return T.submatrix(to_cols(igc), to_cols(occ));
}

BitMatrix ProcessingRelations::compact_H() const {
  QubitSet igc = set_complement(igauge, n());
  std::vector<std::size_t> cols(igauge.size());
  for (std::size_t j = 0; j < igauge.size(); ++j) cols[j] = j;
  return H.submatrix(to_cols(igc), cols);
}

BitMatrix ProcessingRelations::compact_Z() const {
  QubitSet occ = set_complement(ocomp, n());
  std::vector<std::size_t> rows(ocomp.size());
  for (std::size_t j = 0; j < ocomp.size(); ++j) rows[j] = j;
  return Z.submatrix(rows, to_cols(occ));
}

PauliWord ProcessingRelations::correction_op(int a) const {
  if (set_contains(ocomp, a)) throw std::invalid_argument("no correction operator on ocomp");
  PauliWord p(n());
  p.w = T.col(a - 1);
  p.v.set(a - 1, true);
  for (std::size_t j = 0; j < ocomp.size(); ++j)
    if (Z.get(j, a - 1)) p.v.set(ocomp[j] - 1, true);
  return p;
}

PauliWord ProcessingRelations::gauge_op(int i) const {
  auto it = std::find(igauge.begin(), igauge.end(), i);
  if (it == igauge.end()) throw std::invalid_argument("gauge operator only on igauge");
  std::size_t j = static_cast<std::size_t>(it - igauge.begin());
  PauliWord p(n());
  p.w = H.col(j);
  for (std::size_t j2 = 0; j2 < ocomp.size(); ++j2)
    if (R.get(j2, j)) p.v.set(ocomp[j2] - 1, true);
  return p;
}

ProcessingRelations derive_processing(const GeneratorMatrix& g, const QubitSet& igauge_in,
                                      const QubitSet& ocomp_in) {
  const int n = g.n();
  QubitSet ig = make_set(igauge_in);
  QubitSet oc = make_set(ocomp_in);
  require_subset(ig, n, "igauge");
  require_subset(oc, n, "ocomp");
  QubitSet occ = set_complement(oc, n);
  const std::size_t k = ig.size();
  const std::size_t nc = occ.size();

  if (rank(g.phi.submatrix(all_rows(n), to_cols(ig))) != k)
    throw Error(ErrorCode::InvalidGaugeSet, "phi columns of igauge " + set_to_string(ig) + " are dependent");

  // W = (phi|igauge-cols, s|(ocomp)^c-cols); invertible iff the pair is a
  // basis of the binary matroid on the (phi|s) columns.
  BitMatrix w = g.phi.submatrix(all_rows(n), to_cols(ig))
                    .hstack(g.s.submatrix(all_rows(n), to_cols(occ)));
  std::optional<BitMatrix> winv;
  if (w.rows() == w.cols()) winv = invert(w);
  if (!winv)
    throw Error(ErrorCode::InvalidOutputSet,
                "pair igauge=" + set_to_string(ig) + " ocomp=" + set_to_string(oc) +
                    " admits no normal form (uncorrectable outcome)");

  // Normal-form generator basis: first the corrections K(a), a in (ocomp)^c
  // (sigma_s part e_a there, sigma_phi zero on igauge), then the gauge
  // operators (sigma_phi part e_i on igauge, sigma_s zero on (ocomp)^c).
  BitMatrix nmix(n, n);
  for (std::size_t j = 0; j < nc; ++j) nmix.set_row(j, winv->row(k + j));
  for (std::size_t j = 0; j < k; ++j) nmix.set_row(nc + j, winv->row(j));
  BitMatrix phi_nf = nmix * g.phi;
  BitMatrix s_nf = nmix * g.s;

  ProcessingRelations p;
  p.igauge = ig;
  p.ocomp = oc;
  p.T = BitMatrix(n, n);
  p.H = BitMatrix(n, k);
  p.Z = BitMatrix(oc.size(), n);
  p.R = BitMatrix(oc.size(), k);

  for (std::size_t j = 0; j < nc; ++j) {
    const int a = occ[j];
    for (int b = 1; b <= n; ++b)
      if (phi_nf.get(j, b - 1)) p.T.set(b - 1, a - 1, true);
  }
  for (std::size_t j = 0; j < k; ++j) {
    for (int b = 1; b <= n; ++b)
      if (phi_nf.get(nc + j, b - 1)) p.H.set(b - 1, j, true);
  }
  for (std::size_t j = 0; j < oc.size(); ++j) {
    p.Z.set(j, oc[j] - 1, true);
    for (std::size_t ja = 0; ja < nc; ++ja)
      if (s_nf.get(ja, oc[j] - 1)) p.Z.set(j, occ[ja] - 1, true);
    for (std::size_t jg = 0; jg < k; ++jg)
      if (s_nf.get(nc + jg, oc[j] - 1)) p.R.set(j, jg, true);
  }

  // normal-form sanity: T vanishes on igauge rows, H carries the identity
  for (std::size_t j = 0; j < k; ++j) {
    if (p.T.row(ig[j] - 1).any()) throw std::logic_error("normal form violated: T row on igauge");
    if (!p.H.get(ig[j] - 1, j)) throw std::logic_error("normal form violated: H identity block");
  }
  return p;
}

Cones cones(const BitMatrix& T) {
  const int n = static_cast<int>(T.rows());
  Cones c;
  c.fc.resize(n);
  c.bc.resize(n);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (T.get(b - 1, a - 1)) c.fc[a - 1].push_back(b);  // b in fc(a)
      if (T.get(a - 1, b - 1)) c.bc[a - 1].push_back(b);  // b in bc(a)
    }
    if (c.bc[a - 1].empty()) c.inputs.push_back(a);
  }
  for (int a = 1; a <= n; ++a)
    if (c.fc[a - 1].empty()) c.outputs.push_back(a);
  return c;
}

namespace {

// Tarjan over edges a -> b iff T[b][a] == 1 (0-based here)
struct SccFinder {
  const BitMatrix& adj;  // adj.get(a, b): edge a -> b
  std::vector<int> index, low, stack;
  std::vector<bool> on_stack;
  int counter = 0;
  std::vector<std::vector<int>> components;

  explicit SccFinder(const BitMatrix& a)
      : adj(a), index(a.rows(), -1), low(a.rows(), 0), on_stack(a.rows(), false) {}

  void strongconnect(int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < adj.cols(); ++w) {
      if (!adj.get(v, w)) continue;
      if (index[w] == -1) {
        strongconnect(static_cast<int>(w));
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<int> comp;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      components.push_back(std::move(comp));
    }
  }

  void run() {
    for (std::size_t v = 0; v < adj.rows(); ++v)
      if (index[v] == -1) strongconnect(static_cast<int>(v));
  }
};

}  // namespace

TemporalRelation temporal_relation(const BitMatrix& T) {
  const int n = static_cast<int>(T.rows());
  TemporalRelation r;
  r.closure = T.transposed();  // closure[a][b]: a precedes b
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (r.closure.get(i, k)) r.closure.row(i) |= r.closure.row(k);
  r.is_strict_partial_order = true;
  for (int a = 0; a < n; ++a) {
    if (r.closure.get(a, a)) r.is_strict_partial_order = false;
    if (T.get(a, a)) r.self_loops.push_back(a + 1);
  }
  BitMatrix fwd = T.transposed();  // keep alive: SccFinder holds a reference
  SccFinder f(fwd);
  f.run();
  for (auto& comp : f.components) {
    if (comp.size() < 2 && !T.get(comp[0], comp[0])) continue;
    QubitSet qs;
    for (int v : comp) qs.push_back(v + 1);
    std::sort(qs.begin(), qs.end());
    r.sccs.push_back(qs);
  }
  std::sort(r.sccs.begin(), r.sccs.end());
  return r;
}

bool can_gauge_individually(const GeneratorMatrix& g, int a, const QubitSet& ig,
                            const QubitSet& oc) {
  const int n = g.n();
  require_subset({a}, n, "qubit");
  // linear constraints on coordinates of x * (phi|s)
  std::vector<std::pair<int, bool>> constraints;  // (symplectic column, bit)
  auto phi_col = [&](int q) { return q - 1; };
  auto s_col = [&](int q) { return n + q - 1; };
  constraints.emplace_back(phi_col(a), true);
  constraints.emplace_back(s_col(a), false);
  for (int q = 1; q <= n; ++q) {
    if (q == a) continue;
    bool in_i = set_contains(ig, q), in_o = set_contains(oc, q);
    if (in_i && !in_o) {  // identity required
      constraints.emplace_back(phi_col(q), false);
      constraints.emplace_back(s_col(q), false);
    } else if (!in_i && !in_o) {  // {I, sigma_phi}
      constraints.emplace_back(s_col(q), false);
    } else if (in_i && in_o) {  // {I, sigma_s}
      constraints.emplace_back(phi_col(q), false);
    }  // !in_i && in_o: unconstrained
  }
  BitMatrix sym = g.phi.hstack(g.s);
  BitMatrix m(constraints.size(), n);
  BitVector b(constraints.size());
  for (std::size_t t = 0; t < constraints.size(); ++t) {
    for (int r = 0; r < n; ++r)
      if (sym.get(r, constraints[t].first)) m.set(t, r, true);
    if (constraints[t].second) b.set(t, true);
  }
  return solve(m, b).has_value();
}

ExtremalizeResult extremalize(const GeneratorMatrix& g, const QubitSet& I_in, const QubitSet& O_in) {
  const int n = g.n();
  QubitSet I = make_set(I_in), O = make_set(O_in);
  require_subset(I, n, "I");
  require_subset(O, n, "O");
  QubitSet Ic = set_complement(I, n), Oc = set_complement(O, n);

  // corrections for every a in O^c: sigma_s part e_a on O^c, sigma_phi zero on I
  {
    BitMatrix m(I.size() + Oc.size(), n);
    BitMatrix rhs(I.size() + Oc.size(), Oc.size());
    for (std::size_t t = 0; t < I.size(); ++t)
      for (int r = 0; r < n; ++r)
        if (g.phi.get(r, I[t] - 1)) m.set(t, r, true);
    for (std::size_t t = 0; t < Oc.size(); ++t) {
      for (int r = 0; r < n; ++r)
        if (g.s.get(r, Oc[t] - 1)) m.set(I.size() + t, r, true);
      rhs.set(I.size() + t, t, true);
    }
    if (!solve(m, rhs))
      throw Error(ErrorCode::NoValidSplit,
                  "pair I=" + set_to_string(I) + " O=" + set_to_string(O) +
                      " admits no correction set");
  }

  for (int a : Ic)
    if (can_gauge_individually(g, a, I, O))
      throw Error(ErrorCode::GaugeableOutsideInput,
                  "qubit " + std::to_string(a) + " outside I is individually gaugeable", a);

  // rows with vanishing sigma_s part on O^c, reduced to split off
  // gauge-bearing rows (phi support in I) and pure-output rows (phi == 0)
  BitMatrix s_oc = g.s.submatrix(all_rows(n), to_cols(Oc)).transposed();
  std::vector<BitVector> u = kernel_basis(s_oc);
  if (u.size() != O.size()) throw std::logic_error("unexpected kernel dimension in extremalize");

  struct Row {
    BitVector b, c, d;  // phi|I, phi|I^c, s|O
  };
  std::vector<Row> rows;
  for (const BitVector& x : u) {
    BitVector w(n), v(n);
    for (int r = 0; r < n; ++r)
      if (x.get(r)) {
        w ^= g.phi.row(r);
        v ^= g.s.row(r);
      }
    Row row{BitVector(I.size()), BitVector(Ic.size()), BitVector(O.size())};
    for (std::size_t t = 0; t < I.size(); ++t) row.b.set(t, w.get(I[t] - 1));
    for (std::size_t t = 0; t < Ic.size(); ++t) row.c.set(t, w.get(Ic[t] - 1));
    for (std::size_t t = 0; t < O.size(); ++t) row.d.set(t, v.get(O[t] - 1));
    rows.push_back(std::move(row));
  }

  std::vector<Row> b3;
  for (std::size_t col = 0; col < I.size(); ++col) {
    std::size_t sel = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].b.get(col)) {
        sel = i;
        break;
      }
    if (sel == rows.size()) continue;
    Row piv = rows[sel];
    rows.erase(rows.begin() + sel);
    for (Row& r : rows)
      if (r.b.get(col)) {
        r.b ^= piv.b;
        r.c ^= piv.c;
        r.d ^= piv.d;
      }
    b3.push_back(std::move(piv));
  }
  BitMatrix dprime(0, O.size());
  for (const Row& r : rows) {
    if (r.c.any())
      throw Error(ErrorCode::NoValidSplit,
                  "row space contains an element outside the normal-form split");
    BitMatrix one(1, O.size());
    one.set_row(0, r.d);
    dprime = dprime.rows() ? dprime.vstack(one) : one;
  }

  QubitSet delta_o, igauge;
  for (std::size_t p : rref(dprime).pivots) delta_o.push_back(O[p]);
  if (delta_o.size() != rows.size()) throw std::logic_error("dependent pure-output rows in extremalize");
  BitMatrix b3m(b3.size(), I.size());
  for (std::size_t i = 0; i < b3.size(); ++i) b3m.set_row(i, b3[i].b);
  for (std::size_t p : rref(b3m).pivots) igauge.push_back(I[p]);

  QubitSet ocomp;
  for (int q : O)
    if (!set_contains(delta_o, q)) ocomp.push_back(q);

  ExtremalizeResult res;
  res.igauge = igauge;
  res.ocomp = ocomp;
  res.relations = derive_processing(g, igauge, ocomp);
  return res;
}

std::vector<std::pair<QubitSet, QubitSet>> enumerate_extremal_pairs(const GeneratorMatrix& g,
                                                                    EnumerationStrategy strategy) {
  const int n = g.n();
  BitMatrix sym = g.phi.hstack(g.s);
  if (strategy == EnumerationStrategy::Auto)
    strategy = n <= 8 ? EnumerationStrategy::Exhaustive : EnumerationStrategy::PivotExchange;

  std::set<std::vector<int>> bases;
  if (strategy == EnumerationStrategy::Exhaustive) {
    std::vector<int> pick(n);
    for (int i = 0; i < n; ++i) pick[i] = i;
    while (true) {
      std::vector<std::size_t> cols(pick.begin(), pick.end());
      if (rank(sym.submatrix(all_rows(n), cols)) == static_cast<std::size_t>(n))
        bases.insert(pick);
      // next combination of n out of 2n
      int i = n - 1;
      while (i >= 0 && pick[i] == 2 * n - (n - i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
  } else {
    // pivot-exchange walk over the basis-exchange graph
    RowReduction r = rref(sym);
    if (r.pivots.size() != static_cast<std::size_t>(n))
      throw Error(ErrorCode::NotFullRank, "generator rows are dependent");
    std::vector<int> start(r.pivots.begin(), r.pivots.end());
    std::vector<std::vector<int>> queue{start};
    bases.insert(start);
    while (!queue.empty()) {
      std::vector<int> b = queue.back();
      queue.pop_back();
      std::vector<std::size_t> cols(b.begin(), b.end());
      BitMatrix minv = *invert(sym.submatrix(all_rows(n), cols));
      for (int f = 0; f < 2 * n; ++f) {
        if (std::binary_search(b.begin(), b.end(), f)) continue;
        BitVector rep = minv * sym.col(f);
        for (int e = 0; e < n; ++e) {
          if (!rep.get(e)) continue;
          std::vector<int> nb = b;
          nb[e] = f;
          std::sort(nb.begin(), nb.end());
          if (bases.insert(nb).second) queue.push_back(nb);
        }
      }
    }
  }

  std::vector<std::pair<QubitSet, QubitSet>> pairs;
  for (const auto& b : bases) {
    QubitSet ig, oc;
    std::vector<bool> s_in(n, false);
    for (int c : b) {
      if (c < n)
        ig.push_back(c + 1);
      else
        s_in[c - n] = true;
    }
    for (int a = 1; a <= n; ++a)
      if (!s_in[a - 1]) oc.push_back(a);
    pairs.emplace_back(std::move(ig), std::move(oc));
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<ProcessingRelations> enumerate_relations(const GeneratorMatrix& g) {
  std::vector<ProcessingRelations> out;
  for (const auto& [ig, oc] : enumerate_extremal_pairs(g)) out.push_back(derive_processing(g, ig, oc));
  return out;
}

GeneratorMatrix reconstruct(const BitMatrix& T, const BitMatrix& H, const BitMatrix& Z,
                            const BitMatrix& R) {
  const int n = static_cast<int>(T.rows());
  const std::size_t k = H.cols();
  const std::size_t m = Z.rows();
  if (T.cols() != static_cast<std::size_t>(n) || H.rows() != static_cast<std::size_t>(n) ||
      Z.cols() != static_cast<std::size_t>(n) || R.rows() != m || R.cols() != k)
    throw std::invalid_argument("relation shape mismatch");
  if (rank(H) != rank(Z)) throw Error(ErrorCode::RankMismatch, "rank H != rank Z");

  QubitSet I, O;
  for (int q = 1; q <= n; ++q) {
    if (!T.row(q - 1).any()) I.push_back(q);
    if (!T.col(q - 1).any()) O.push_back(q);
  }

  // normalize H by an invertible column mix so the igauge rows carry the
  // identity; greedy leftmost independent H-rows inside I
  QubitSet igauge;
  {
    BitMatrix picked(0, k);
    for (int q : I) {
      if (igauge.size() == k) break;
      BitMatrix one(1, k);
      one.set_row(0, H.row(q - 1));
      BitMatrix trial = picked.rows() ? picked.vstack(one) : one;
      if (rank(trial) > picked.rows()) {
        picked = trial;
        igauge.push_back(q);
      }
    }
    if (igauge.size() != k)
      throw Error(ErrorCode::NotCommutingReconstruction,
                  "H has no invertible block on input-candidate rows");
  }
  std::vector<std::size_t> ig_rows = to_cols(igauge);
  std::vector<std::size_t> hcols(k);
  for (std::size_t j = 0; j < k; ++j) hcols[j] = j;
  BitMatrix lambda = *invert(H.submatrix(ig_rows, hcols));
  BitMatrix h_nf = H * lambda;

  // normalize Z by an invertible row mix to identity on the ocomp columns;
  // greedy leftmost independent Z-columns inside O
  QubitSet ocomp;
  {
    BitMatrix picked(0, m);
    for (int q : O) {
      if (ocomp.size() == m) break;
      BitMatrix one(1, m);
      one.set_row(0, Z.col(q - 1));
      BitMatrix trial = picked.rows() ? picked.vstack(one) : one;
      if (rank(trial) > picked.rows()) {
        picked = trial;
        ocomp.push_back(q);
      }
    }
    if (ocomp.size() != m)
      throw Error(ErrorCode::NotOptimalOutput, "Z has no invertible block on output-candidate columns");
  }
  std::vector<std::size_t> zrows(m);
  for (std::size_t j = 0; j < m; ++j) zrows[j] = j;
  BitMatrix v = *invert(Z.submatrix(zrows, to_cols(ocomp)));
  BitMatrix z_nf = v * Z;
  BitMatrix r_nf = v * R * lambda;

  QubitSet occ = set_complement(ocomp, n);
  GeneratorMatrix g{BitMatrix(n, n), BitMatrix(n, n),
                    std::vector<MeasurementPlane>(n, MeasurementPlane{})};
  for (std::size_t j = 0; j < occ.size(); ++j) {
    const int a = occ[j];
    PauliWord p(n);
    p.w = T.col(a - 1);
    p.v.set(a - 1, true);
    for (std::size_t j2 = 0; j2 < ocomp.size(); ++j2)
      if (z_nf.get(j2, a - 1)) p.v.set(ocomp[j2] - 1, true);
    g.set_row_word(static_cast<int>(j), p);
  }
  for (std::size_t j = 0; j < k; ++j) {
    PauliWord p(n);
    p.w = h_nf.col(j);
    for (std::size_t j2 = 0; j2 < ocomp.size(); ++j2)
      if (r_nf.get(j2, j)) p.v.set(ocomp[j2] - 1, true);
    g.set_row_word(static_cast<int>(occ.size() + j), p);
  }

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g.row_word(a).symplectic(g.row_word(b)))
        throw Error(ErrorCode::NotCommutingReconstruction,
                    "reconstructed generators " + std::to_string(a + 1) + " and " +
                        std::to_string(b + 1) + " anticommute");
  if (rank(g.phi.hstack(g.s)) != static_cast<std::size_t>(n))
    throw std::logic_error("reconstructed generators dependent despite identity blocks");
  return g;
}

BitMatrix extended_influence(const ProcessingRelations& p) {
  const int n = p.n();
  const std::size_t k = p.igauge.size();
  BitMatrix t(n + 2 * k, n + 2 * k);
  for (int q = 1; q <= n; ++q) {
    for (std::size_t j = 0; j < k; ++j)
      if (p.H.get(q - 1, j)) t.set(k + q - 1, j, true);
    for (int b = 1; b <= n; ++b)
      if (p.T.get(q - 1, b - 1)) t.set(k + q - 1, k + b - 1, true);
  }
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t j2 = 0; j2 < k; ++j2)
      if (p.R.get(j, j2)) t.set(k + n + j, j2, true);
    for (int b = 1; b <= n; ++b)
      if (p.Z.get(j, b - 1)) t.set(k + n + j, k + b - 1, true);
  }
  return t;
}

bool check_optimal_output(const BitMatrix& Z, const BitMatrix& R, const ProcessingRelations& p,
                          const GeneratorMatrix& g) {
  (void)R;  // the output normal form constrains Z only
  const int n = p.n();
  const std::size_t m = p.ocomp.size();
  if (Z.rows() != m || Z.cols() != static_cast<std::size_t>(n)) return false;
  std::vector<std::size_t> zrows(m);
  for (std::size_t j = 0; j < m; ++j) zrows[j] = j;
  auto v = invert(Z.submatrix(zrows, to_cols(p.ocomp)));
  if (!v) return false;
  ProcessingRelations fresh = derive_processing(g, p.igauge, p.ocomp);
  return (*v) * Z == fresh.Z;
}

}  // namespace mbqc
