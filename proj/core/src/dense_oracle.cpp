#include "jcm/dense_oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "jcm/spectrum.hpp"

namespace jcm {

double DenseMatrix::trace_real() const {
  double t = 0.0;
  for (int i = 0; i < dim(); ++i) t += at(i, i).real();
  return t;
}

DenseMatrix dense_embed(const BlockDensity& rho, int n_photon_max) {
  const int highest_block = static_cast<int>(rho.blocks.size()) - 1;
  if (n_photon_max < highest_block + 1) {
    throw TruncationError("dense_embed: n_photon_max=" + std::to_string(n_photon_max) +
                          " cannot hold block n=" + std::to_string(highest_block));
  }

  DenseMatrix out;
  out.n_photon_max = n_photon_max;
  out.data.assign(static_cast<std::size_t>(out.dim()) * out.dim(), {0.0, 0.0});

  if (rho.singlet_weight) {
    out.at(product_index(0, false), product_index(0, false)) += *rho.singlet_weight;
  }

  for (std::size_t n = 0; n < rho.blocks.size(); ++n) {
    const auto& blk = rho.blocks[n];
    const double th = theta_n(rho.params, static_cast<int>(n));
    const double co = std::cos(th);
    const double si = std::sin(th);
    const int ig = product_index(static_cast<int>(n) + 1, false); // |n+1,g>
    const int ie = product_index(static_cast<int>(n), true);      // |n,e>

    // [v1 v2] [[a, c], [c*, b]] [v1 v2]^dagger with
    // v1 = (co, si), v2 = (-si, co) on the (|n+1,g>, |n,e>) pair.
    const double re_c = blk.c.real();
    out.at(ig, ig) += blk.a * co * co + blk.b * si * si - 2.0 * re_c * si * co;
    out.at(ie, ie) += blk.a * si * si + blk.b * co * co + 2.0 * re_c * si * co;
    const std::complex<double> off =
        (blk.a - blk.b) * si * co + blk.c * (co * co) - std::conj(blk.c) * (si * si);
    out.at(ig, ie) += off;
    out.at(ie, ig) += std::conj(off);
  }
  return out;
}

namespace {

Eigen::Map<const Eigen::MatrixXcd> as_eigen(const DenseMatrix& rho) {
  // Row-major storage of a Hermitian matrix maps to its own transpose;
  // the spectrum is unaffected.
  return Eigen::Map<const Eigen::MatrixXcd>(rho.data.data(), rho.dim(), rho.dim());
}

} // namespace

std::vector<double> dense_eigenvalues(const DenseMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(as_eigen(rho),
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("dense_eigenvalues: eigendecomposition failed");
  }
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double dense_entropy(const DenseMatrix& rho) {
  double s = 0.0;
  for (double ev : dense_eigenvalues(rho)) s += entropy_term(ev);
  return s;
}

QubitMarginal partial_trace_radiation(const DenseMatrix& rho) {
  double p_g = 0.0;
  double p_e = 0.0;
  std::complex<double> coherence{0.0, 0.0};
  for (int n = 0; n <= rho.n_photon_max; ++n) {
    p_g += rho.at(product_index(n, false), product_index(n, false)).real();
    p_e += rho.at(product_index(n, true), product_index(n, true)).real();
    coherence += rho.at(product_index(n, false), product_index(n, true));
  }
  if (std::abs(coherence) > 1e-12) {
    throw NumericError("partial_trace_radiation: unexpected g-e coherence " +
                       std::to_string(std::abs(coherence)));
  }
  return QubitMarginal{p_g, p_e};
}

ProbDist partial_trace_atom(const DenseMatrix& rho) {
  ProbDist out;
  out.weights.resize(rho.n_photon_max + 1);
  for (int n = 0; n <= rho.n_photon_max; ++n) {
    out.weights[n] = rho.at(product_index(n, false), product_index(n, false)).real() +
                     rho.at(product_index(n, true), product_index(n, true)).real();
  }
  for (int n = 0; n <= rho.n_photon_max; ++n) {
    for (int m = n + 1; m <= rho.n_photon_max; ++m) {
      const std::complex<double> off =
          rho.at(product_index(n, false), product_index(m, false)) +
          rho.at(product_index(n, true), product_index(m, true));
      if (std::abs(off) > 1e-12) {
        throw NumericError("partial_trace_atom: photon coherence <" + std::to_string(n) +
                           "|rho_R|" + std::to_string(m) + "> = " + std::to_string(std::abs(off)));
      }
    }
  }
  return out;
}

} // namespace jcm
