#ifndef JCM_DENSE_ORACLE_HPP
#define JCM_DENSE_ORACLE_HPP

#include <complex>
#include <vector>

#include "jcm/block_density.hpp"
#include "jcm/prob_dist.hpp"

namespace jcm {

/// Dense Hermitian matrix in the product basis {|n>|g>, |n>|e>},
/// n = 0..n_photon_max, row-major.  Index of |n>|g> is 2n, of |n>|e> is
/// 2n + 1.  Brute-force validation path; not meant to be fast.
struct DenseMatrix {
  int n_photon_max = 0;
  std::vector<std::complex<double>> data;

  int dim() const { return 2 * (n_photon_max + 1); }
  std::complex<double>& at(int i, int j) { return data[static_cast<std::size_t>(i) * dim() + j]; }
  const std::complex<double>& at(int i, int j) const {
    return data[static_cast<std::size_t>(i) * dim() + j];
  }
  double trace_real() const;
};

inline int product_index(int n, bool excited) { return 2 * n + (excited ? 1 : 0); }

/// Expands a block density operator into the product basis.  Requires
/// n_photon_max >= highest block index + 1 (block n reaches photon n+1).
DenseMatrix dense_embed(const BlockDensity& rho, int n_photon_max);

/// Entropy via full Hermitian eigendecomposition, tiny negative eigenvalues
/// clamped to zero before the log.
double dense_entropy(const DenseMatrix& rho);

/// Eigenvalues of the dense matrix, ascending.
std::vector<double> dense_eigenvalues(const DenseMatrix& rho);

/// Traces out the radiation field, leaving the two-level marginal.  Raises
/// NumericError if the traced matrix has a g-e coherence above 1e-12 instead
/// of silently dropping it.
QubitMarginal partial_trace_radiation(const DenseMatrix& rho);

/// Traces out the atom, leaving the photon-number marginal.  Raises
/// NumericError if any photon off-diagonal survives above 1e-12.
ProbDist partial_trace_atom(const DenseMatrix& rho);

} // namespace jcm

#endif
