#include "jcm/prob_dist.hpp"

#include <cmath>
#include <string>

namespace jcm {

namespace {

// Kahan-compensated accumulation; long photon tails would otherwise lose
// digits that downstream tolerances (1e-13 on the mean) still resolve.
struct Accumulator {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

} // namespace

double ProbDist::sum() const {
  Accumulator acc;
  for (double w : weights) acc.add(w);
  return acc.sum;
}

double ProbDist::mean() const {
  Accumulator acc;
  for (std::size_t n = 0; n < weights.size(); ++n) acc.add(static_cast<double>(n) * weights[n]);
  return acc.sum;
}

void ProbDist::validate(double tol) const {
  for (std::size_t n = 0; n < weights.size(); ++n) {
    if (weights[n] < -tol) {
      throw InvalidDistribution("ProbDist: weight[" + std::to_string(n) +
                                "] = " + std::to_string(weights[n]) + " is negative");
    }
  }
  const double s = sum();
  if (s < 1.0 - tail_bound - 1e-9 || s > 1.0 + 1e-9) {
    throw InvalidDistribution("ProbDist: total mass " + std::to_string(s) +
                              " outside [1 - tail_bound, 1]");
  }
}

double entropy_term(double w) {
  if (w < -kPsdTol) {
    throw InvalidDistribution("entropy_term: negative weight " + std::to_string(w));
  }
  if (w <= 0.0) return 0.0;
  return -w * std::log(w);
}

double shannon_entropy(const ProbDist& dist) {
  double s = 0.0;
  for (double w : dist.weights) s += entropy_term(w);
  return s;
}

double binary_entropy(const QubitMarginal& marginal) {
  return entropy_term(marginal.p_g) + entropy_term(marginal.p_e);
}

} // namespace jcm
