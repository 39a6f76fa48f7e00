#include "majent/mbqc.hpp"

#include <cmath>
#include <stdexcept>

namespace majent {

namespace {

double condition_rhs_x(double x) { return 1.0 - 4.0 * x + 3.4 * x * x; }

}  // namespace

double dicke_family_asymptotic(int k) {
  if (k < 1) throw std::domain_error("dicke_family_asymptotic: k must be >= 1");
  if (k <= 20) {
    double ratio = 1.0;  // k^k / (e^k k!) as a running product of k / (e j)
    for (int j = 1; j <= k; ++j) ratio *= k / (std::exp(1.0) * j);
    return 1.0 - ratio;
  }
  return 1.0 - std::exp(k * std::log(static_cast<double>(k)) - k - std::lgamma(k + 1.0));
}

bool universality_condition(double eg_linear, double eta) {
  if (!(eg_linear >= 0.0 && eg_linear <= 1.0)) throw std::domain_error("universality_condition: eg_linear outside [0, 1]");
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::domain_error("universality_condition: eta outside [0, 1]");
  return eg_linear > condition_rhs_x(std::cbrt(eta));
}

MbqcReport eta_threshold(int k) {
  MbqcReport r;
  r.k = k;
  r.eg_linear_asymptotic = dicke_family_asymptotic(k);
  r.paper_threshold = 0.001 * std::pow(k, -1.5);
  // 1 - 4x + 3.4x^2 falls monotonically from 1 on [0, 4/6.8]; its first
  // crossing of E is the threshold in x = eta^{1/3}.
  const double e = r.eg_linear_asymptotic;
  double lo = 0.0, hi = 4.0 / 6.8;
  if (condition_rhs_x(hi) >= e) {
    r.eta_threshold = 1.0;
  } else {
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      (condition_rhs_x(mid) > e ? lo : hi) = mid;
    }
    const double x = 0.5 * (lo + hi);
    r.eta_threshold = x * x * x;
  }
  r.ruled_out = !universality_condition(e, r.paper_threshold);
  return r;
}

}  // namespace majent
