#include "mbqc/ctc.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mbqc {

namespace {

// members of fc(c_i) within the cycle must be exactly {c_(i+1)}
bool cycle_is_minimal(const BitMatrix& T, const std::vector<int>& cycle) {
  const std::size_t l = cycle.size();
  for (std::size_t i = 0; i < l; ++i) {
    const int ci = cycle[i], next = cycle[(i + 1) % l];
    for (int x : cycle)
      if (T.get(x - 1, ci - 1) != (x == next)) return false;
  }
  return true;
}

std::vector<int> rotate_to_smallest(std::vector<int> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

}  // namespace

CtcReport find_ctcs(const BitMatrix& T) {
  const int n = static_cast<int>(T.rows());
  CtcReport rep;
  std::vector<bool> looped(n, false);
  for (int a = 0; a < n; ++a)
    if (T.get(a, a)) {
      looped[a] = true;
      rep.self_loops.push_back(a + 1);
    }

  // minimal cycles of length >= 2 never pass through a self-looped qubit
  // (the loop alone would be a smaller CTC), so those nodes drop out
  BitMatrix adj(n, n);  // adj[a][b]: a -> b
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && !looped[a] && !looped[b] && T.get(b, a)) adj.set(a, b, true);

  // SCCs via iterative Tarjan
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::vector<int>> comps;
  int counter = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<std::pair<int, int>> work{{root, 0}};
    while (!work.empty()) {
      auto& [v, ei] = work.back();
      if (ei == 0) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      for (int w = ei; w < n; ++w) {
        if (!adj.get(v, w)) continue;
        if (index[w] == -1) {
          work.back().second = w + 1;
          work.emplace_back(w, 0);
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        comps.push_back(std::move(comp));
      }
      int finished = v;
      work.pop_back();
      if (!work.empty()) low[work.back().first] = std::min(low[work.back().first], low[finished]);
    }
  }

  for (auto& comp : comps) {
    if (comp.size() < 2) continue;
    std::sort(comp.begin(), comp.end());
    std::vector<bool> in_comp(n, false);
    for (int v : comp) in_comp[v] = true;

    // shortest directed cycle inside the component
    std::vector<int> best;
    for (int v : comp) {
      std::vector<int> dist(n, -1), parent(n, -1);
      std::deque<int> bfs{v};
      dist[v] = 0;
      while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop_front();
        for (int y = 0; y < n; ++y) {
          if (!adj.get(x, y) || !in_comp[y] || dist[y] != -1) continue;
          dist[y] = dist[x] + 1;
          parent[y] = x;
          bfs.push_back(y);
        }
      }
      for (int u : comp) {
        if (dist[u] == -1 || !adj.get(u, v)) continue;  // closing edge u -> v
        if (!best.empty() && dist[u] + 1 >= static_cast<int>(best.size())) continue;
        std::vector<int> cyc;
        for (int x = u; x != -1; x = parent[x]) cyc.push_back(x + 1);
        std::reverse(cyc.begin(), cyc.end());  // v .. u along edges
        best = cyc;
      }
    }
    if (best.empty()) continue;  // component's cycles all went through removed nodes
    best = rotate_to_smallest(best);
    if (!cycle_is_minimal(T, best)) throw std::logic_error("shortest cycle failed minimality");
    rep.cycles.push_back(std::move(best));
  }
  std::sort(rep.cycles.begin(), rep.cycles.end());
  return rep;
}

BreakResult break_self_loop(const GeneratorMatrix& g, const ProcessingRelations& p, int i) {
  const int n = p.n();
  if (i < 1 || i > n)
    throw Error(ErrorCode::IndexOutOfRange, "qubit " + std::to_string(i) + " outside 1.." + std::to_string(n), i);
  if (!p.T.get(i - 1, i - 1))
    throw Error(ErrorCode::NoSelfLoop, "no self-loop at qubit " + std::to_string(i), i);
  if (set_contains(p.igauge, i) || set_contains(p.ocomp, i))
    throw Error(ErrorCode::BoundaryQubit, "qubit " + std::to_string(i) + " already in igauge/ocomp", i);

  BreakResult r;
  r.flag_row = p.T.row(i - 1);
  r.flag_qubit = i;
  r.g = flip_plane_at(g, i);
  r.p = derive_processing(r.g, set_union(p.igauge, {i}), set_union(p.ocomp, {i}));

  // the broken adaptation rule must reappear as the new output row
  auto pos = std::find(r.p.ocomp.begin(), r.p.ocomp.end(), i) - r.p.ocomp.begin();
  if (!(r.p.Z.row(pos) == r.flag_row)) throw std::logic_error("flag row mismatch after self-loop break");
  return r;
}

BreakResult break_cycle(const GeneratorMatrix& g, const ProcessingRelations& p,
                        const std::vector<int>& cycle_in) {
  const int n = p.n();
  if (cycle_in.size() < 2) throw Error(ErrorCode::NotMinimal, "cycle must have length >= 2");
  for (int q : cycle_in)
    if (q < 1 || q > n)
      throw Error(ErrorCode::IndexOutOfRange, "qubit " + std::to_string(q) + " outside 1.." + std::to_string(n), q);
  {
    auto dedup = cycle_in;
    std::sort(dedup.begin(), dedup.end());
    if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end())
      throw Error(ErrorCode::NotMinimal, "repeated qubit in cycle");
  }
  for (int q : cycle_in)
    if (set_contains(p.igauge, q) || set_contains(p.ocomp, q))
      throw Error(ErrorCode::BoundaryOverlap, "cycle touches igauge/ocomp at qubit " + std::to_string(q), q);
  if (!cycle_is_minimal(p.T, cycle_in))
    throw Error(ErrorCode::NotMinimal, "cycle is not of the minimal chord-free form");

  std::vector<int> cycle = rotate_to_smallest(cycle_in);
  const int c1 = cycle.front();
  const int cl = cycle.back();

  BreakResult r;
  r.flag_row = p.T.row(c1 - 1);
  r.flag_qubit = cl;
  r.g = g;
  r.p = derive_processing(g, set_union(p.igauge, {c1}), set_union(p.ocomp, {cl}));

  // operator-reshuffle cross-checks: K(l) becomes the new gauge operator,
  // corrections with c1 in their forward cone absorb K(l), and the broken
  // rule becomes the flag output row
  auto pos = std::find(r.p.ocomp.begin(), r.p.ocomp.end(), cl) - r.p.ocomp.begin();
  if (!(r.p.Z.row(pos) == r.flag_row)) throw std::logic_error("flag row mismatch after cycle break");
  auto gpos = std::find(r.p.igauge.begin(), r.p.igauge.end(), c1) - r.p.igauge.begin();
  if (!(r.p.H.col(gpos) == p.T.col(cl - 1))) throw std::logic_error("gauge column mismatch after cycle break");
  for (int a = 1; a <= n; ++a) {
    if (set_contains(r.p.ocomp, a)) continue;
    BitVector expect = p.T.col(a - 1);
    if (p.T.get(c1 - 1, a - 1)) expect ^= p.T.col(cl - 1);
    if (!(r.p.T.col(a - 1) == expect)) throw std::logic_error("correction column mismatch after cycle break");
  }
  return r;
}

std::vector<int> RemovalTrace::flag_bits() const {
  std::vector<int> bits;
  for (std::size_t j = 0; j < p.ocomp.size(); ++j)
    if (set_contains(flag_qubits, p.ocomp[j])) bits.push_back(static_cast<int>(j) + 1);
  return bits;
}

RemovalTrace remove_all(const GeneratorMatrix& g, const ProcessingRelations& p) {
  RemovalTrace trace;
  trace.g = g;
  trace.p = p;
  const int limit = 2 * p.n() + 1;
  for (int iter = 0; iter < limit; ++iter) {
    CtcReport rep = find_ctcs(trace.p.T);
    if (rep.empty()) return trace;
    BreakResult br;
    RemovalStep step;
    if (!rep.self_loops.empty()) {
      step.kind = RemovalStep::Kind::SelfLoop;
      step.qubits = {rep.self_loops.front()};
      br = break_self_loop(trace.g, trace.p, rep.self_loops.front());
    } else {
      step.kind = RemovalStep::Kind::Cycle;
      step.qubits = rep.cycles.front();
      br = break_cycle(trace.g, trace.p, rep.cycles.front());
    }
    step.flag_row = br.flag_row;
    step.flag_qubit = br.flag_qubit;
    trace.steps.push_back(std::move(step));
    trace.g = std::move(br.g);
    trace.p = std::move(br.p);
    trace.flag_qubits = set_union(trace.flag_qubits, {br.flag_qubit});
  }
  throw std::logic_error("CTC removal failed to terminate");
}

}  // namespace mbqc
