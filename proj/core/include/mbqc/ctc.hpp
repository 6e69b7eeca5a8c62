#pragma once

#include "mbqc/flow.hpp"

// Detection and removal of closed time-like curves in the influence matrix:
// self-loops are absorbed by a plane flip, longer minimal cycles by moving
// one endpoint into igauge and the other into ocomp. Every removal turns
// the broken adaptation rule into a correctness-flag output bit.

namespace mbqc {

struct CtcReport {
  QubitSet self_loops;
  /// One shortest directed cycle per strongly connected component of the
  /// self-loop-free graph, each rotated so its smallest member leads; every
  /// cycle satisfies fc(c_i) ^ cycle == {c_(i+1)} cyclically.
  std::vector<std::vector<int>> cycles;
  bool empty() const { return self_loops.empty() && cycles.empty(); }
};

CtcReport find_ctcs(const BitMatrix& T);

/// One removal: the transformed generator set, re-derived relations with
/// the enlarged igauge/ocomp, and the new flag bit as a row over outcomes
/// (valid under the zero-gauge convention).
struct BreakResult {
  GeneratorMatrix g;
  ProcessingRelations p;
  BitVector flag_row;
  int flag_qubit = 0;  // the output qubit whose bit is the flag
};

/// Requires T_ii == 1 and i outside igauge/ocomp; flips the plane at i.
BreakResult break_self_loop(const GeneratorMatrix& g, const ProcessingRelations& p, int i);

/// Requires a minimal cycle (length >= 2) disjoint from igauge/ocomp; the
/// generator set is unchanged, only the pair grows.
BreakResult break_cycle(const GeneratorMatrix& g, const ProcessingRelations& p,
                        const std::vector<int>& cycle);

struct RemovalStep {
  enum class Kind { SelfLoop, Cycle };
  Kind kind;
  std::vector<int> qubits;
  BitVector flag_row;
  int flag_qubit = 0;
};

struct RemovalTrace {
  std::vector<RemovalStep> steps;
  GeneratorMatrix g;
  ProcessingRelations p;
  QubitSet flag_qubits;
  /// 1-based positions of the flag bits in the final output vector.
  std::vector<int> flag_bits() const;
};

/// Breaks self-loops first (smallest qubit), then minimal cycles (smallest
/// member least), re-deriving after each step until the temporal relation
/// is a strict partial order.
RemovalTrace remove_all(const GeneratorMatrix& g, const ProcessingRelations& p);

}  // namespace mbqc
