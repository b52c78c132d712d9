#ifndef JCM_BLOCK_DENSITY_HPP
#define JCM_BLOCK_DENSITY_HPP

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "jcm/model_params.hpp"
#include "jcm/prob_dist.hpp"

namespace jcm {

/// One 2x2 Hermitian block in the dressed basis {|phi(n,1)>, |phi(n,2)>}:
///
///     [ a   c  ]
///     [ c*  b  ]
///
/// a, b are the branch populations and c the inter-branch coherence.
struct HermBlock2 {
  double a = 0.0;
  double b = 0.0;
  std::complex<double> c{0.0, 0.0};

  double trace() const { return a + b; }
};

/// Eigenvalues (lambda_plus, lambda_minus) of a PSD 2x2 Hermitian block,
/// clamped into [0, a+b]; the pair sums to exactly a + b after clamping.
std::pair<double, double> block_eigvals(const HermBlock2& block);

/// Block-diagonal density operator of the coupled system: an optional
/// weight on the uncoupled |0,g> singlet plus one HermBlock2 per photon
/// index n, block n acting on span{|n+1,g>, |n,e>}.
struct BlockDensity {
  std::optional<double> singlet_weight;
  std::vector<HermBlock2> blocks;
  ModelParams params;

  double trace() const;
  /// Checks nonnegative weights, per-block PSD within tolerance and total
  /// trace in [1 - tol_trace, 1 + tol_trace].
  void validate(double tol_psd = kPsdTol, double tol_trace = 1e-9) const;
};

/// -Tr(rho ln rho) over the singlet weight and all block eigenvalues.
double von_neumann_entropy(const BlockDensity& rho);

} // namespace jcm

#endif
