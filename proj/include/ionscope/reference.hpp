#pragma once

#include "ionscope/chain.hpp"

// Independent reference evaluations used by the self-check battery and the
// test suites. These follow the defining expressions directly over complex
// exponentials, with no trigonometric reduction, and must stay decoupled
// from the production evaluators in correlations.cpp.

namespace ionscope::reference {

/// Coincidence sum enumerated directly:
///   sum over radiating pairs i<j of |a_i b_j + a_j b_i|^2
/// with a_l = exp(i 2 pi R_l sin phi1), b_m = exp(i 2 pi R_m sin phi2).
double g2_enumerated(const IonChain& chain, double phi1, double phi2);

/// Intensity via the full complex coherence sum. Every ion carries the same
/// coherence (sin(theta)/2) e^{i psi}; the common phase psi must drop out of
/// the result.
double g1_enumerated(const IonChain& chain, const ExcitationPulse& pulse,
                     double phi1, double psi = 0.0);

}  // namespace ionscope::reference
