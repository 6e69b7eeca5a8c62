#pragma once

#include <utility>
#include <vector>

#include "mbqc/stabilizer.hpp"

// Classical processing relations q = T s + H g, o = Z s + R g derived from a
// stabilizer generator matrix and a gauge/output pair, plus the temporal
// order they induce and the enumeration of all compatible pairs.

namespace mbqc {

/// Full-shape matrices: T is n x n, H is n x k with identity on the igauge
/// rows, Z is k x n with identity on the ocomp columns, R is k x k
/// (k = |igauge| = |ocomp|). Correction/gauge operators are recoverable
/// from the rows/columns (they are the normal-form generator rows).
struct ProcessingRelations {
  BitMatrix T, H, Z, R;
  QubitSet igauge, ocomp;

  int n() const { return static_cast<int>(T.rows()); }
  int k() const { return static_cast<int>(igauge.size()); }

  /// Compact blocks: rows/columns restricted to the non-identity parts.
  BitMatrix compact_T() const;  // (igauge)^c x (ocomp)^c
  BitMatrix compact_H() const;  // (igauge)^c x igauge
  BitMatrix compact_Z() const;  // ocomp x (ocomp)^c

  /// Correction operator K(a) for a in (ocomp)^c: sigma_s-type at a,
  /// sigma_phi support = T column a, sigma_s support on ocomp = Z column a.
  PauliWord correction_op(int a) const;
  /// Gauge operator for i in igauge: sigma_phi support = H column,
  /// sigma_s support on ocomp = R column.
  PauliWord gauge_op(int i) const;

  bool operator==(const ProcessingRelations&) const = default;
};

/// Unique normal-form relations for (g, igauge, ocomp); throws
/// InvalidGaugeSet / InvalidOutputSet when the pair is not extremal-valid.
ProcessingRelations derive_processing(const GeneratorMatrix& g, const QubitSet& igauge,
                                      const QubitSet& ocomp);

struct Cones {
  std::vector<QubitSet> fc, bc;  // forward/backward cones, index 0 = qubit 1
  QubitSet inputs, outputs;      // I = empty bc, O = empty fc
};

Cones cones(const BitMatrix& T);

struct TemporalRelation {
  BitMatrix closure;  // closure(a-1, b-1) == 1  iff  a strictly precedes b
  bool is_strict_partial_order = false;
  QubitSet self_loops;
  std::vector<QubitSet> sccs;  // components of size >= 2 or with a self-loop
};

TemporalRelation temporal_relation(const BitMatrix& T);

/// True iff some stabilizer element is sigma_phi at `a`, identity on
/// (ig ^ oc^c)\a, {I,sigma_phi} on (ig^c ^ oc^c)\a and {I,sigma_s} on
/// (ig ^ oc)\a — the individual-gaugeability template relative to (ig, oc).
bool can_gauge_individually(const GeneratorMatrix& g, int a, const QubitSet& ig,
                            const QubitSet& oc);

struct ExtremalizeResult {
  QubitSet igauge, ocomp;
  ProcessingRelations relations;
};

/// Shrinks a consistent (I, O) pair to an extremal (igauge, ocomp) with
/// |igauge| == |ocomp|; deterministic greedy leftmost pivots. Throws
/// GaugeableOutsideInput (hypothesis violated at a reported qubit) or
/// NoValidSplit.
ExtremalizeResult extremalize(const GeneratorMatrix& g, const QubitSet& I, const QubitSet& O);

/// All extremal pairs = bases of the binary matroid on the columns of
/// (phi|s): igauge = {i : phi-col i in basis}, ocomp = {a : s-col a not in
/// basis}. Sorted lexicographically by (igauge, ocomp).
std::vector<ProcessingRelations> enumerate_relations(const GeneratorMatrix& g);

enum class EnumerationStrategy { Auto, Exhaustive, PivotExchange };
std::vector<std::pair<QubitSet, QubitSet>> enumerate_extremal_pairs(
    const GeneratorMatrix& g, EnumerationStrategy strategy = EnumerationStrategy::Auto);

/// Rebuilds a generator matrix (planes default [X,Y]) whose row space
/// realizes the given relations; inverse of derive_processing up to row
/// space. Throws RankMismatch / NotOptimalOutput / NotCommutingReconstruction.
GeneratorMatrix reconstruct(const BitMatrix& T, const BitMatrix& H, const BitMatrix& Z,
                            const BitMatrix& R);

/// (n+2k) x (n+2k) influence matrix over I' | qubits 1..n | O' with the H,
/// T, Z, R blocks and the two identity blocks embedded; primed blocks first
/// and last, qubit block in ascending label order on both axes.
BitMatrix extended_influence(const ProcessingRelations& p);

/// True iff Z row-reduces to identity on the ocomp columns and the reduced
/// off-ocomp block matches the sigma_s supports of g's correction operators.
bool check_optimal_output(const BitMatrix& Z, const BitMatrix& R, const ProcessingRelations& p,
                          const GeneratorMatrix& g);

}  // namespace mbqc
