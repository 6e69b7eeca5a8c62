#include "mbqc/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace mbqc {

GaugeAction gauge_action(const PauliWord& k, const QubitSet& igauge) {
  GaugeAction a;
  a.delta_s = k.v;
  a.delta_q = k.w;
  a.delta_g = BitVector(igauge.size());
  for (std::size_t j = 0; j < igauge.size(); ++j)
    if (k.w.get(igauge[j] - 1)) a.delta_g.set(j, true);
  return a;
}

GaugeAction gauge_action(const GeneratorMatrix& g, const PauliWord& k, const QubitSet& igauge) {
  if (!stabilizer_coords(g, k))
    throw Error(ErrorCode::NotInStabilizer, "operator is outside the stabilizer group");
  return gauge_action(k, igauge);
}

namespace {

// adaptation identity w == T v + H (w|igauge), output identity Z v + R (w|igauge) == 0
bool adaptation_invariant(const ProcessingRelations& p, const GaugeAction& a) {
  return a.delta_q == (p.T * a.delta_s ^ p.H * a.delta_g);
}

BitVector output_shift(const ProcessingRelations& p, const GaugeAction& a) {
  return p.Z * a.delta_s ^ p.R * a.delta_g;
}

}  // namespace

bool InvarianceReport::all_ok() const {
  for (const auto& g : generators) {
    if (!g.basis_ok) return false;
    for (bool ok : g.output_ok)
      if (!ok) return false;
  }
  return true;
}

InvarianceReport check_invariance(const ProcessingRelations& p, const GeneratorMatrix& g) {
  InvarianceReport rep;
  for (int a = 0; a < g.n(); ++a) {
    GaugeAction act = gauge_action(g.row_word(a), p.igauge);
    InvarianceReport::PerGenerator per;
    per.basis_ok = adaptation_invariant(p, act);
    BitVector shift = output_shift(p, act);
    for (std::size_t j = 0; j < p.ocomp.size(); ++j) per.output_ok.push_back(!shift.get(j));
    rep.generators.push_back(std::move(per));
  }
  return rep;
}

const char* output_bit_class_name(OutputBitClass c) {
  return c == OutputBitClass::DeterministicCapable ? "deterministic-capable" : "guaranteed-random";
}

OutputBitClass classify_output_bit(const BitVector& z, const BitVector& r,
                                   const ProcessingRelations& p, const GeneratorMatrix& g) {
  if (z.size() != static_cast<std::size_t>(p.n()) || r.size() != p.igauge.size())
    throw std::invalid_argument("output bit shape mismatch");
  for (int a = 0; a < g.n(); ++a) {
    GaugeAction act = gauge_action(g.row_word(a), p.igauge);
    if (z.dot(act.delta_s) ^ r.dot(act.delta_g)) return OutputBitClass::GuaranteedRandom;
  }
  return OutputBitClass::DeterministicCapable;
}

ProcessingRelations flip_plane(const ProcessingRelations& p, int a) {
  const int n = p.n();
  if (a < 1 || a > n)
    throw Error(ErrorCode::IndexOutOfRange, "qubit " + std::to_string(a) + " outside 1.." + std::to_string(n), a);
  if (p.T.get(a - 1, a - 1))
    throw Error(ErrorCode::SelfLoopAtQubit, "influence matrix has a self-loop at qubit " + std::to_string(a), a);
  // s_a = s'_a + q_a resubstituted into q = Ts + Hg, o = Zs + Rg
  BitVector t_col = p.T.col(a - 1);   // T e_a
  BitVector t_row = p.T.row(a - 1);   // e_a^T T
  BitVector h_row = p.H.row(a - 1);   // e_a^T H
  BitVector z_col = p.Z.col(a - 1);   // Z e_a
  ProcessingRelations r = p;
  for (int b = 0; b < n; ++b) {
    if (t_col.get(b)) {
      r.T.row(b) ^= t_row;
      r.H.row(b) ^= h_row;
    }
  }
  for (std::size_t j = 0; j < p.ocomp.size(); ++j) {
    if (z_col.get(j)) {
      r.Z.row(j) ^= t_row;
      r.R.row(j) ^= h_row;
    }
  }
  return r;
}

AngleUpdate flip_angle_update() { return {std::acos(-1.0) / 2.0, -1}; }

BitMatrix flip_ext(const BitMatrix& t_ext, int a) {
  if (t_ext.rows() != t_ext.cols()) throw std::invalid_argument("extended influence matrix not square");
  if (a < 1 || a > static_cast<int>(t_ext.rows()))
    throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(a) + " outside matrix", a);
  if (t_ext.get(a - 1, a - 1))
    throw Error(ErrorCode::SelfLoopAtQubit, "self-loop at index " + std::to_string(a), a);
  BitMatrix r = t_ext;
  BitVector col = t_ext.col(a - 1);
  BitVector row = t_ext.row(a - 1);
  for (std::size_t b = 0; b < t_ext.rows(); ++b)
    if (col.get(b)) r.row(b) ^= row;
  return r;
}

LocalCompResult local_comp(const BitMatrix& T, int i) {
  const int n = static_cast<int>(T.rows());
  if (i < 1 || i > n)
    throw Error(ErrorCode::IndexOutOfRange, "qubit " + std::to_string(i) + " outside 1.." + std::to_string(n), i);
  for (int q = 0; q < n; ++q)
    if (T.get(q, q))
      throw Error(ErrorCode::SelfLoopAtQubit, "influence matrix has a self-loop at qubit " + std::to_string(q + 1),
                  q + 1);
  LocalCompResult res{T, {}};
  BitVector col = T.col(i - 1);
  BitVector row = T.row(i - 1);
  for (int b = 0; b < n; ++b) {
    if (!col.get(b)) continue;
    res.T.row(b) ^= row;
    if (row.get(b)) {
      res.T.flip(b, b);  // cancel the diagonal part of the update
      res.replanted.push_back(b + 1);
    }
  }
  return res;
}

Orbit orbit(const BitMatrix& T) {
  const int n = static_cast<int>(T.rows());
  std::map<BitMatrix, std::size_t> seen;
  std::vector<BitMatrix> queue{T};
  seen.emplace(T, 0);
  while (!queue.empty()) {
    BitMatrix cur = queue.back();
    queue.pop_back();
    for (int i = 1; i <= n; ++i) {
      BitMatrix next = local_comp(cur, i).T;
      if (seen.emplace(next, 0).second) queue.push_back(next);
    }
  }
  Orbit o;
  for (auto& [m, idx] : seen) {
    idx = o.elements.size();
    o.elements.push_back(m);
  }
  o.perms.assign(n, std::vector<std::size_t>(o.elements.size()));
  for (int i = 1; i <= n; ++i)
    for (std::size_t e = 0; e < o.elements.size(); ++e)
      o.perms[i - 1][e] = seen.at(local_comp(o.elements[e], i).T);
  return o;
}

}  // namespace mbqc
