#pragma once

#include "ionscope/chain.hpp"
#include "ionscope/pattern.hpp"
#include "ionscope/slice.hpp"

namespace ionscope {

/// Relative two-detector phase k(n1 - n2).(R_i - R_j) of a radiating ion
/// pair: 2*pi*(R_i - R_j)*(sin phi1 - sin phi2). Indices are 1-based chain
/// indices; neither may be the isotope. Antisymmetric under i <-> j.
struct PairPhase {
  int i;
  int j;
  double value;
};

PairPhase pair_phase(const IonChain& chain, int i, int j, double phi1,
                     double phi2);

/// Mean far-field intensity at one detector after a pulse of area theta,
/// for uncorrelated ions:
///
///   G1(phi1) = N_r * pop_e + coh_sq * sum_{i != j} cos(2 pi (R_i - R_j) sin phi1)
///
/// summed over radiating ions. A pi pulse zeroes coh_sq, flattening the
/// pattern to the constant N_r.
double g1_value(const IonChain& chain, const ExcitationPulse& pulse,
                double phi1);

/// Two-detector coincidence rate after a pi pulse. Depends on the angles
/// only through delta = sin(phi1) - sin(phi2):
///
///   G2 = sum over radiating pairs i<j of  2 + 2 cos(2 pi (R_i - R_j) delta)
///
/// Fewer than two radiating ions give the all-zero pattern (it cannot be
/// normalized for sampling).
double g2_value(const IonChain& chain, double phi1, double phi2);
double g2_value_at_delta(const IonChain& chain, double delta);

Pattern g1_pattern(const IonChain& chain, const ExcitationPulse& pulse,
                   const SliceSpec& slice);
Pattern g2_pattern(const IonChain& chain, const SliceSpec& slice);

/// Dispatches to g1_pattern / g2_pattern. order 2 requires a pi pulse; the
/// coincidence sum above is not valid for other pulse areas.
Pattern pattern_over_slice(int order, const IonChain& chain,
                           const ExcitationPulse& pulse,
                           const SliceSpec& slice);

/// Closed form for two radiating ions separated by `separation`:
/// 2 (1 + cos(2 pi separation (sin phi1 - sin phi2))).
double g2_two_ion_closed(double separation, double phi1, double phi2);

/// Closed form for four equally spaced ions with the isotope at p, pi pulse:
///   2 (d_{p,1} + d_{p,4}) (3 + 2 c1 + c2) + 2 (d_{p,2} + d_{p,3}) (3 + c1 + c2 + c3)
/// with c_m = cos(2 pi m spacing (sin phi1 - sin phi2)).
double g2_four_closed(double spacing, int p, double phi1, double phi2);

/// Closed form for the four-ion intensity pattern under pi/2 excitation:
///   1/2 (d_{p,1} + d_{p,4}) (3 + 2 c1 + c2) + 1/2 (d_{p,2} + d_{p,3}) (3 + c1 + c2 + c3)
/// with c_m = cos(2 pi m spacing sin phi1).
double g1_four_closed(double spacing, int p, double phi1);

}  // namespace ionscope
