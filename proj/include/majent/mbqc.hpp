#pragma once

namespace majent {

struct MbqcReport {
  int k = 0;
  double eg_linear_asymptotic = 0.0;
  double eta_threshold = 0.0;    ///< smallest eta at which the necessary condition can hold
  double paper_threshold = 0.0;  ///< 0.001 k^{-3/2}
  bool ruled_out = false;        ///< condition fails at eta = paper_threshold
};

/// Linear entanglement of |S_{n,k}> in the limit n -> infinity: 1 - k^k / (e^k k!).
double dicke_family_asymptotic(int k);

/// Necessary condition for an approximate universal resource:
/// eg_linear > 1 - 4 eta^{1/3} + 3.4 eta^{2/3}.
bool universality_condition(double eg_linear, double eta);

MbqcReport eta_threshold(int k);

}  // namespace majent
