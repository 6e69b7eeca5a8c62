#include "mbqc/sim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace mbqc {

namespace {

using mat2 = std::array<std::array<cplx, 2>, 2>;

mat2 axis_matrix(Axis a) {
  const cplx i{0.0, 1.0};
  switch (a) {
    case Axis::X: return {{{0, 1}, {1, 0}}};
    case Axis::Y: return {{{0, -i}, {i, 0}}};
    case Axis::Z: return {{{1, 0}, {0, -1}}};
  }
  return {};
}

double vec_norm2(const std::vector<cplx>& v) {
  double t = 0;
  for (const cplx& a : v) t += std::norm(a);
  return t;
}

// 2x2 operator on one qubit; qubit 1 owns the most significant bit
void apply_one_qubit(const mat2& m, int n, int qubit, std::vector<cplx>& v) {
  const std::size_t bit = std::size_t{1} << (n - qubit);
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (x & bit) continue;
    cplx a0 = v[x], a1 = v[x | bit];
    v[x] = m[0][0] * a0 + m[0][1] * a1;
    v[x | bit] = m[1][0] * a0 + m[1][1] * a1;
  }
}

std::vector<int> auto_order(const TemporalRelation& tr) {
  const int n = static_cast<int>(tr.closure.rows());
  std::vector<int> order;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    for (int a = 0; a < n; ++a) {
      if (done[a]) continue;
      bool ready = true;
      for (int b = 0; b < n && ready; ++b)
        if (!done[b] && tr.closure.get(b, a)) ready = false;
      if (ready) {
        done[a] = true;
        order.push_back(a + 1);
        break;
      }
    }
  }
  return order;
}

std::vector<int> resolve_order(const ProcessingRelations& p, const RunConfig& cfg) {
  TemporalRelation tr = temporal_relation(p.T);
  if (!tr.is_strict_partial_order)
    throw Error(ErrorCode::NotRunnable, "temporal relation contains closed time-like curves");
  if (cfg.order.empty()) return auto_order(tr);

  const int n = p.n();
  if (static_cast<int>(cfg.order.size()) != n)
    throw Error(ErrorCode::OrderInconsistent, "order must list every qubit exactly once");
  std::vector<int> pos(n + 1, -1);
  for (int i = 0; i < n; ++i) {
    int q = cfg.order[i];
    if (q < 1 || q > n || pos[q] != -1)
      throw Error(ErrorCode::OrderInconsistent, "order must list every qubit exactly once", q);
    pos[q] = i;
  }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (tr.closure.get(a - 1, b - 1) && pos[a] > pos[b])
        throw Error(ErrorCode::OrderInconsistent,
                    "order measures qubit " + std::to_string(b) + " before qubit " + std::to_string(a), b);
  return cfg.order;
}

struct Runner {
  const ProcessingRelations& p;
  const std::vector<MeasurementPlane>& planes;
  const std::vector<double>& angles;
  const BitVector& gauge;
  const std::vector<int>& order;
  int n;
  ExactDistribution dist;
  BitVector s;

  void branch(std::size_t depth, std::vector<cplx> v) {
    if (depth == order.size()) {
      BitVector o(p.k());
      for (int j = 0; j < p.k(); ++j)
        o.set(j, p.Z.row(j).dot(s) ^ p.R.row(j).dot(gauge));
      dist.support[o.to_string()] += vec_norm2(v);
      return;
    }
    const int a = order[depth];
    const bool q = p.T.row(a - 1).dot(s) ^ p.H.row(a - 1).dot(gauge);
    const double phi = angles[a - 1];
    const mat2 mp = axis_matrix(planes[a - 1].phi);
    const mat2 ms = axis_matrix(planes[a - 1].sphi);
    const double c = std::cos(phi);
    const double d = (q ? -1.0 : 1.0) * std::sin(phi);
    for (int outcome = 0; outcome < 2; ++outcome) {
      const double sign = outcome ? -1.0 : 1.0;
      mat2 proj;
      for (int r = 0; r < 2; ++r)
        for (int cidx = 0; cidx < 2; ++cidx)
          proj[r][cidx] = (r == cidx ? 0.5 : 0.0) + 0.5 * sign * (c * mp[r][cidx] + d * ms[r][cidx]);
      std::vector<cplx> w = v;
      apply_one_qubit(proj, n, a, w);
      if (vec_norm2(w) <= 1e-14) continue;
      s.set(a - 1, outcome);
      branch(depth + 1, std::move(w));
      s.set(a - 1, false);
    }
  }
};

}  // namespace

double StateVector::norm2() const { return vec_norm2(amp); }

void apply_generator(const GeneratorMatrix& g, int row0, const std::vector<cplx>& in,
                     std::vector<cplx>& out) {
  const int n = g.n();
  const cplx imag{0.0, 1.0};
  std::size_t xmask = 0;
  std::vector<std::pair<std::size_t, Axis>> letters;  // (bit, axis) per non-identity site
  for (int site = 0; site < n; ++site) {
    bool w = g.phi.get(row0, site), v = g.s.get(row0, site);
    if (!w && !v) continue;
    Axis ax = w ? (v ? g.planes[site].sphi : g.planes[site].phi) : g.planes[site].s();
    std::size_t bit = std::size_t{1} << (n - 1 - site);
    letters.emplace_back(bit, ax);
    if (ax != Axis::Z) xmask |= bit;
  }
  std::fill(out.begin(), out.end(), cplx{0, 0});
  for (std::size_t x = 0; x < in.size(); ++x) {
    if (in[x] == cplx{0, 0}) continue;
    cplx phase{1, 0};
    for (auto& [bit, ax] : letters) {
      bool b = x & bit;
      if (ax == Axis::Z)
        phase *= b ? -1.0 : 1.0;
      else if (ax == Axis::Y)
        phase *= b ? -imag : imag;
    }
    out[x ^ xmask] += phase * in[x];
  }
}

StateVector resource_state(const GeneratorMatrix& g) {
  const int n = g.n();
  if (n > kMaxSimQubits)
    throw Error(ErrorCode::SizeGuard,
                std::to_string(n) + " qubits exceeds the dense-simulator cap of " +
                    std::to_string(kMaxSimQubits));
  check_valid(g);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<cplx> v(dim), tmp(dim);
  for (std::size_t ref = 0; ref < dim; ++ref) {
    std::fill(v.begin(), v.end(), cplx{0, 0});
    v[ref] = 1.0;
    for (int a = 0; a < n; ++a) {
      apply_generator(g, a, v, tmp);
      for (std::size_t x = 0; x < dim; ++x) v[x] = 0.5 * (v[x] + tmp[x]);
    }
    double nrm2 = vec_norm2(v);
    if (nrm2 > 1e-12) {
      double inv = 1.0 / std::sqrt(nrm2);
      for (cplx& a : v) a *= inv;
      return StateVector{n, std::move(v), g.planes};
    }
  }
  throw std::logic_error("projector annihilated every reference state");
}

double ExactDistribution::total() const {
  double t = 0;
  for (auto& [k, pr] : support) t += pr;
  return t;
}

double ExactDistribution::prob(const std::string& key) const {
  auto it = support.find(key);
  return it == support.end() ? 0.0 : it->second;
}

bool ExactDistribution::agrees(const ExactDistribution& other, double tol) const {
  for (auto& [k, pr] : support)
    if (std::abs(pr - other.prob(k)) > tol) return false;
  for (auto& [k, pr] : other.support)
    if (std::abs(pr - prob(k)) > tol) return false;
  return true;
}

ExactDistribution run_exact(const StateVector& state, const ProcessingRelations& p,
                            const RunConfig& cfg) {
  const int n = p.n();
  if (state.n != n || static_cast<int>(state.planes.size()) != n)
    throw std::invalid_argument("state/relations size mismatch");
  if (static_cast<int>(cfg.angles.size()) != n)
    throw std::invalid_argument("need one angle per qubit");
  BitVector gauge = cfg.gauge;
  if (gauge.size() == 0) gauge = BitVector(p.k());
  if (static_cast<int>(gauge.size()) != p.k())
    throw std::invalid_argument("gauge vector must have one bit per igauge qubit");

  std::vector<int> order = resolve_order(p, cfg);
  Runner runner{p, state.planes, cfg.angles, gauge, order, n, {}, BitVector(n)};
  runner.branch(0, state.amp);
  return std::move(runner.dist);
}

PostselectedRun run_postselected(const StateVector& state, const ProcessingRelations& p,
                                 const RunConfig& cfg) {
  for (auto& [idx, val] : cfg.postselect) {
    if (idx < 1 || idx > p.k())
      throw std::invalid_argument("postselect index outside the output bits");
    if (val != 0 && val != 1) throw std::invalid_argument("postselect value must be 0 or 1");
  }
  ExactDistribution full = run_exact(state, p, cfg);
  PostselectedRun out;
  for (auto& [key, pr] : full.support) {
    bool keep = true;
    for (auto& [idx, val] : cfg.postselect)
      if (key[idx - 1] != char('0' + val)) keep = false;
    if (!keep) continue;
    out.dist.support[key] = pr;
    out.success_probability += pr;
  }
  if (out.success_probability <= 1e-14)
    throw Error(ErrorCode::ZeroSuccessProbability, "conditioning event has probability zero");
  for (auto& [key, pr] : out.dist.support) pr /= out.success_probability;
  return out;
}

bool verify_gauge_independence(const StateVector& state, const ProcessingRelations& p,
                               const std::vector<double>& angles) {
  const int k = p.k();
  RunConfig cfg;
  cfg.angles = angles;
  cfg.gauge = BitVector(k);
  ExactDistribution base = run_exact(state, p, cfg);
  for (std::size_t gval = 1; gval < (std::size_t{1} << k); ++gval) {
    for (int j = 0; j < k; ++j) cfg.gauge.set(j, (gval >> j) & 1);
    if (!run_exact(state, p, cfg).agrees(base, 1e-10)) return false;
  }
  return true;
}

}  // namespace mbqc
