#pragma once

#include <random>
#include <string>
#include <vector>

#include "mbqc/stabilizer.hpp"

// Shared fixtures and independent oracles for the test suite.

namespace mbqc::testing {

inline BitVector bv(const std::string& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] == '1');
  return v;
}

inline BitMatrix bm(const std::vector<std::string>& rows) {
  if (rows.empty()) return BitMatrix(0, 0);
  BitMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, bv(rows[r]));
  return m;
}

inline std::vector<MeasurementPlane> xy_planes(int n) {
  return std::vector<MeasurementPlane>(n);
}

/// 3-qubit path cluster: K1 = XZI, K2 = ZXZ, K3 = IZX.
inline GeneratorMatrix cluster3() { return graph_state({{1, 2}, {2, 3}}, 3, xy_planes(3)); }

/// GHZ state: K1 = XXX, K2 = ZZI, K3 = IZZ.
inline GeneratorMatrix ghz3() { return from_letters({"XXX", "ZZI", "IZZ"}, xy_planes(3)); }

/// Single edge: K1 = XZ, K2 = ZX; the empty pair has the 2-cycle CTC.
inline GeneratorMatrix edge2() { return graph_state({{1, 2}}, 2, xy_planes(2)); }

/// Single qubit stabilized by Y: the empty pair has the self-loop CTC.
inline GeneratorMatrix yloop1() { return from_letters({"Y"}, xy_planes(1)); }

/// Disjoint union of yloop1 (qubit 1) and edge2 (qubits 2, 3).
inline GeneratorMatrix union3() { return from_letters({"YII", "IXZ", "IZX"}, xy_planes(3)); }

inline MeasurementPlane random_plane(std::mt19937& rng) {
  static const Axis axes[3] = {Axis::X, Axis::Y, Axis::Z};
  int a = static_cast<int>(rng() % 3);
  int b = static_cast<int>(rng() % 2);
  return {axes[a], axes[(a + 1 + b) % 3]};
}

/// Random valid generator matrix: a random graph state through random
/// planes, with the rows scrambled by a random invertible mix.
inline GeneratorMatrix random_generator(std::mt19937& rng, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (rng() & 1) edges.emplace_back(a, b);
  std::vector<MeasurementPlane> planes;
  for (int a = 0; a < n; ++a) planes.push_back(random_plane(rng));
  GeneratorMatrix g = graph_state(edges, n, std::move(planes));
  for (int step = 0; step < 4 * n; ++step) {
    int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    if (a == b) continue;
    g.phi.xor_row_into(a, b);
    g.s.xor_row_into(a, b);
  }
  return g;
}

/// Independent oracle: number of invertible n-column subsets of (phi|s),
/// counted by walking every subset. Fine up to n ~ 8.
inline std::size_t brute_force_basis_count(const GeneratorMatrix& g) {
  const int n = g.n();
  BitMatrix full = g.phi.hstack(g.s);
  std::size_t count = 0;
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    std::vector<std::size_t> cols(pick.begin(), pick.end());
    std::vector<std::size_t> all_rows(n);
    for (int r = 0; r < n; ++r) all_rows[r] = r;
    if (rank(full.submatrix(all_rows, cols)) == static_cast<std::size_t>(n)) ++count;
    int i = n - 1;
    while (i >= 0 && pick[i] == 2 * n - (n - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

/// Independent oracle for GF(2) rank: log2 of the row-span size, found by
/// enumerating every row combination. Usable for <= ~16 rows.
inline std::size_t span_rank(const BitMatrix& m) {
  std::vector<BitVector> seen;
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m.rows()); ++mask) {
    BitVector acc(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      if ((mask >> r) & 1) acc ^= m.row(r);
    bool fresh = true;
    for (auto& s : seen)
      if (s == acc) {
        fresh = false;
        break;
      }
    if (fresh) {
      seen.push_back(acc);
      ++count;
    }
  }
  std::size_t rank = 0;
  while ((std::size_t{1} << rank) < count) ++rank;
  return rank;
}

}  // namespace mbqc::testing
