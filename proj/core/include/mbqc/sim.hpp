#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "mbqc/flow.hpp"
#include "mbqc/stabilizer.hpp"

// Exact brute-force oracle: dense 2^n amplitude vectors, adaptive projective
// measurements driven by the processing relations, output distributions from
// full branch enumeration. Everything here is exact up to double rounding.

namespace mbqc {

using cplx = std::complex<double>;

/// Hard cap for the dense simulator (2^14 amplitudes).
constexpr int kMaxSimQubits = 14;

struct StateVector {
  int n = 0;
  std::vector<cplx> amp;  // 2^n entries; qubit 1 is the most significant bit
  // carried along so a run knows which concrete letters each site measures;
  // plane re-encodings leave `amp` untouched and only change this labelling
  std::vector<MeasurementPlane> planes;

  double norm2() const;
};

/// Applies generator row `row0` of g as a concrete signed Pauli word.
void apply_generator(const GeneratorMatrix& g, int row0, const std::vector<cplx>& in,
                     std::vector<cplx>& out);

/// Unique joint +1 eigenstate of the generators (site letters resolved
/// through the planes, every generator signed +1). Throws SizeGuard.
StateVector resource_state(const GeneratorMatrix& g);

/// Exact probabilities over output bit strings (|ocomp| characters, in
/// ascending ocomp order).
struct ExactDistribution {
  std::map<std::string, double> support;

  double total() const;
  double prob(const std::string& key) const;
  bool agrees(const ExactDistribution& other, double tol = 1e-10) const;
};

struct RunConfig {
  std::vector<double> angles;     // one per qubit; the sim accepts any value
  BitVector gauge;                // |igauge| bits; empty means all-zero
  std::vector<int> order;         // optional explicit measurement order
  std::map<int, int> postselect;  // 1-based output-bit position -> required value
};

/// Depth-first enumeration of every outcome branch: adaptation bit
/// q_a = (T s)_a + (H g)_a, observable cos(phi) sigma_phi +
/// (-1)^q sin(phi) sigma_sphi, branch pruned when its probability falls to
/// zero (1e-14). Throws NotRunnable (no temporal order) / OrderInconsistent.
ExactDistribution run_exact(const StateVector& state, const ProcessingRelations& p,
                            const RunConfig& cfg);

struct PostselectedRun {
  ExactDistribution dist;  // conditioned and renormalized
  double success_probability = 0.0;
};

/// Conditions on cfg.postselect; throws ZeroSuccessProbability.
PostselectedRun run_postselected(const StateVector& state, const ProcessingRelations& p,
                                 const RunConfig& cfg);

/// Runs all 2^|igauge| gauge choices; true iff every distribution agrees
/// with the first within 1e-10.
bool verify_gauge_independence(const StateVector& state, const ProcessingRelations& p,
                               const std::vector<double>& angles);

}  // namespace mbqc
