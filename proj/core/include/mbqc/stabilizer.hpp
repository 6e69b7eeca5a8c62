#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbqc/error.hpp"
#include "mbqc/gf2.hpp"

// Stabilizer generator matrices in the symplectic (phi|s) representation.
// Qubit labels are 1-based throughout the public surface; BitMatrix
// rows/columns are 0-based, and the conversion happens here.

namespace mbqc {

/// Sorted, duplicate-free list of 1-based qubit labels.
using QubitSet = std::vector<int>;

QubitSet make_set(std::vector<int> labels);
bool set_contains(const QubitSet& s, int q);
QubitSet set_union(const QubitSet& a, const QubitSet& b);
QubitSet set_complement(const QubitSet& s, int n);  // within 1..n
std::string set_to_string(const QubitSet& s);       // "{1,3}"

enum class Axis { X, Y, Z };

char axis_letter(Axis a);
std::optional<Axis> axis_from_letter(char c);

/// Ordered measurement-plane pair [sigma_phi, sigma_sphi]; the remaining
/// axis is sigma_s = i * sigma_sphi * sigma_phi up to the absorbed phase.
struct MeasurementPlane {
  Axis phi = Axis::X;
  Axis sphi = Axis::Y;

  Axis s() const;
  MeasurementPlane flipped() const { return {sphi, phi}; }
  /// sigma_s <-> sigma_sphi exchange (used on replanted qubits).
  MeasurementPlane replanted() const { return {phi, s()}; }
  std::string to_string() const;  // "[X,Y]"
  bool operator==(const MeasurementPlane&) const = default;
};

/// A Pauli word in plane-relative coordinates: site letter at qubit a is
/// (w_a, v_a) with (0,0)=I, (1,0)=sigma_phi, (0,1)=sigma_s, (1,1)=sigma_sphi.
/// `sign_log_i` is log_i of the phase (0..3) when tracked; bit algebra in the
/// analysis layers never needs it, the simulator works with concrete matrices.
struct PauliWord {
  BitVector w, v;
  std::optional<int> sign_log_i;

  explicit PauliWord(std::size_t n = 0) : w(n), v(n) {}
  std::size_t size() const { return w.size(); }
  bool is_identity() const { return !w.any() && !v.any(); }
  /// Symplectic product: 0 iff the two words commute.
  bool symplectic(const PauliWord& o) const { return w.dot(o.v) ^ v.dot(o.w); }
  bool operator==(const PauliWord& o) const { return w == o.w && v == o.v; }
};

PauliWord multiply(const PauliWord& a, const PauliWord& b);

/// n independent commuting generators: row a of (phi|s) is generator K_a.
struct GeneratorMatrix {
  BitMatrix phi, s;
  std::vector<MeasurementPlane> planes;

  int n() const { return static_cast<int>(phi.rows()); }
  PauliWord row_word(int row0) const;
  void set_row_word(int row0, const PauliWord& p);
  bool operator==(const GeneratorMatrix&) const = default;
};

/// Commutation (Phi S^T + S Phi^T == 0) and full row rank of (Phi|S);
/// throws NotCommuting / NotFullRank.
void check_valid(const GeneratorMatrix& g);

/// K_a = X_a (x) Z_neighbours re-encoded through each site's plane.
GeneratorMatrix graph_state(const std::vector<std::pair<int, int>>& edges, int n,
                            std::vector<MeasurementPlane> planes);

/// Words of concrete letters I/X/Y/Z, one per generator, each of length n.
GeneratorMatrix from_letters(const std::vector<std::string>& words,
                             std::vector<MeasurementPlane> planes);
std::vector<std::string> to_letters(const GeneratorMatrix& g);

/// Coordinates of `p` over the generator rows, or nullopt if outside the group.
std::optional<BitVector> stabilizer_coords(const GeneratorMatrix& g, const PauliWord& p);

/// Plane flip at `qubit`: swaps [phi,sphi] and re-encodes the columns
/// (s column ^= phi column); the physical operators are unchanged.
GeneratorMatrix flip_plane_at(const GeneratorMatrix& g, int qubit);

/// Replant at `qubit` (sigma_s <-> sigma_sphi): phi column ^= s column.
GeneratorMatrix replant_at(const GeneratorMatrix& g, int qubit);

/// Parsed measurement pattern: resource state source, planes, angles and
/// optional declared gauge/output sets. Angles live in [-pi/2, pi/2).
struct Pattern {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // graph source
  std::vector<std::string> words;          // stab source (exclusive with edges)
  bool has_stabs = false;
  std::vector<MeasurementPlane> planes;
  std::vector<double> angles;
  QubitSet declared_igauge, declared_ocomp;
  bool igauge_declared = false, ocomp_declared = false;

  GeneratorMatrix to_generator() const;
};

}  // namespace mbqc
