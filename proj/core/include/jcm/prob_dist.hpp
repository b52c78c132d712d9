#ifndef JCM_PROB_DIST_HPP
#define JCM_PROB_DIST_HPP

#include <vector>

#include "jcm/errors.hpp"

namespace jcm {

/// Positivity slack for probability vectors and density blocks.
inline constexpr double kPsdTol = 1e-12;

/// Finite truncation of a probability distribution over photon number.
/// tail_bound is an upper bound on the probability mass dropped by the
/// truncation (0 for exact finite distributions).
struct ProbDist {
  std::vector<double> weights;
  double tail_bound = 0.0;

  double sum() const;
  double mean() const;
  void validate(double tol = kPsdTol) const;
};

/// Two-level occupation (ground, excited); p_g + p_e = 1 within tolerance.
struct QubitMarginal {
  double p_g = 1.0;
  double p_e = 0.0;
};

/// -sum w ln w in nats with the 0 ln 0 = 0 convention.  Weights below
/// -kPsdTol raise InvalidDistribution; values in [-kPsdTol, 0] count as 0.
double shannon_entropy(const ProbDist& dist);

/// Entropy of a two-outcome distribution, same conventions as above.
double binary_entropy(const QubitMarginal& marginal);

/// Single -w ln w term with clamping; building block for the entropies.
double entropy_term(double w);

} // namespace jcm

#endif
