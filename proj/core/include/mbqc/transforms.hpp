#pragma once

#include "mbqc/flow.hpp"

// Symmetry transformations of processing relations: gauge actions, plane
// flips, modified local complementation and the orbit they generate.

namespace mbqc {

/// Effect of multiplying the resource state's defining generator set by a
/// stabilizer element K: outcome, adaptation and gauge vectors shift by
/// delta_s = v(K), delta_q = w(K), delta_g = w(K)|igauge.
struct GaugeAction {
  BitVector delta_s, delta_q, delta_g;
};

GaugeAction gauge_action(const PauliWord& k, const QubitSet& igauge);
/// Same, but verifies K lies in g's row space first (NotInStabilizer).
GaugeAction gauge_action(const GeneratorMatrix& g, const PauliWord& k, const QubitSet& igauge);

/// Per-generator invariance of the relations under the induced gauge
/// actions: `basis_ok` checks the adaptation identity, `output_ok` the
/// output identity for each output bit.
struct InvarianceReport {
  struct PerGenerator {
    bool basis_ok = false;
    std::vector<bool> output_ok;
  };
  std::vector<PerGenerator> generators;
  bool all_ok() const;
};

InvarianceReport check_invariance(const ProcessingRelations& p, const GeneratorMatrix& g);

enum class OutputBitClass { DeterministicCapable, GuaranteedRandom };
const char* output_bit_class_name(OutputBitClass c);

/// A candidate output bit o = z.s + r.g is guaranteed uniformly random iff
/// its invariance identity fails for some generator.
OutputBitClass classify_output_bit(const BitVector& z, const BitVector& r,
                                   const ProcessingRelations& p, const GeneratorMatrix& g);

/// Measurement-plane flip at qubit a (requires T_aa == 0): relabels the
/// outcome s_a = s'_a + q_a and re-expresses the relations. igauge/ocomp
/// and the normal form survive unchanged.
ProcessingRelations flip_plane(const ProcessingRelations& p, int a);

/// Angle part of a plane flip: phi' = offset + sign*phi (pi/2 - phi); the
/// adaptation bit is reused as-is.
struct AngleUpdate {
  double offset;
  int sign;
  double apply(double phi) const { return offset + sign * phi; }
};
AngleUpdate flip_angle_update();

/// Same update on an extended influence matrix (1-based index into the
/// I'|qubits|O' ordering).
BitMatrix flip_ext(const BitMatrix& t_ext, int a);

/// Modified local complementation at i (diagonal-cancelling); `replanted`
/// lists the qubits whose sigma_s/sigma_sphi roles swap (fc(i) ^ bc(i)).
struct LocalCompResult {
  BitMatrix T;
  QubitSet replanted;
};

LocalCompResult local_comp(const BitMatrix& T, int i);

/// Closure of {T} under local complementation at every qubit. Elements are
/// sorted lexicographically; perms[i] maps element indices under site i.
struct Orbit {
  std::vector<BitMatrix> elements;
  std::vector<std::vector<std::size_t>> perms;
};

Orbit orbit(const BitMatrix& T);

}  // namespace mbqc
