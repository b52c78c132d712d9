#include <doctest.h>

#include <cmath>
#include <random>

#include "jcm/dense_oracle.hpp"
#include "jcm/thermal.hpp"

using namespace jcm;

namespace {

ThermalConfig make_cfg(double kappa_ratio, double inv_beta, double tol = 1e-12) {
  return ThermalConfig{ModelParams::resonant(kappa_ratio), inv_beta, tol, 100000};
}

// Oracle route: entropy of the dense product-basis matrix.
double oracle_joint_entropy(const ThermalConfig& cfg) {
  const BlockDensity rho = joint_density(cfg);
  return dense_entropy(dense_embed(rho, static_cast<int>(rho.blocks.size())));
}

} // namespace

TEST_CASE("truncation resolution") {
  SUBCASE("cold weak coupling stays small") {
    CHECK(resolve_truncation(make_cfg(0.1, 0.001)) <= 10);
  }
  SUBCASE("strong coupling always covers the negative branch") {
    for (double inv_beta : {0.05, 0.5, 1.0, 4.0}) {
      CHECK(resolve_truncation(make_cfg(5.0, inv_beta)) >= 29);
    }
  }
  SUBCASE("tail below tolerance: appending 1000 more levels is invisible") {
    const ThermalConfig cfg = make_cfg(0.5, 4.0);
    const int n_max = resolve_truncation(cfg);
    const double z = std::exp(boltzmann_weights_at(cfg, n_max).log_z);
    const double z_more = std::exp(boltzmann_weights_at(cfg, n_max + 1000).log_z);
    CHECK(std::abs(z_more - z) < 1e-12 * z_more * 1.001);
  }
  SUBCASE("cap exceeded reports a diagnostic") {
    ThermalConfig cfg = make_cfg(5.0, 4.0);
    cfg.n_cap = 10;
    CHECK_THROWS_AS(resolve_truncation(cfg), TruncationError);
  }
  SUBCASE("config validation") {
    CHECK_THROWS_AS(resolve_truncation(ThermalConfig{ModelParams::resonant(1.0), -1.0}),
                    SpecError);
    CHECK_THROWS_AS(resolve_truncation(ThermalConfig{ModelParams::resonant(1.0), 1.0, 1e-3}),
                    SpecError);
  }
}

TEST_CASE("Boltzmann weights") {
  SUBCASE("cold weak coupling concentrates on |0,g>") {
    const auto weights = boltzmann_weights(make_cfg(0.1, 0.01));
    CHECK(weights.w_singlet > 1.0 - 1e-12);
  }
  SUBCASE("uncoupled resonant partition function at beta omega = 1") {
    // closed form: Z = e^{1/2} + 2 e^{-1/2} / (1 - e^{-1})
    const double z_closed = std::exp(0.5) + 2.0 * std::exp(-0.5) / (1.0 - std::exp(-1.0));
    const auto weights = boltzmann_weights(make_cfg(0.0, 1.0));
    CHECK(std::exp(weights.log_z) == doctest::Approx(z_closed).epsilon(1e-12));
  }
  SUBCASE("cold strong coupling concentrates on the true ground level") {
    // level spacing near the bottom is ~0.02 omega, so go very cold
    const auto ground = ground_level(ModelParams::resonant(5.0), 60);
    REQUIRE(ground.levels.size() == 1);
    const auto weights = boltzmann_weights(make_cfg(5.0, 1e-4));
    CHECK(ground.levels[0].n == 5);
    CHECK(weights.w2[ground.levels[0].n] > 1.0 - 1e-10);
  }
  SUBCASE("lower branch always outweighs upper branch") {
    const auto weights = boltzmann_weights(make_cfg(2.5, 0.7));
    for (int n = 0; n <= weights.n_max; ++n) CHECK(weights.w2[n] >= weights.w1[n]);
  }
  SUBCASE("normalization") {
    for (double kappa : {0.0, 0.5, 2.5, 5.0}) {
      for (double inv_beta : {0.05, 1.0, 4.0}) {
        const auto weights = boltzmann_weights(make_cfg(kappa, inv_beta));
        CHECK(weights.flatten().sum() == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("joint entropy") {
  SUBCASE("pure ground limit vanishes") {
    CHECK(joint_entropy(make_cfg(0.1, 0.005)) < 1e-9);
  }
  SUBCASE("uncoupled state is additive") {
    const ThermalConfig cfg = make_cfg(0.0, 1.0);
    const double s_joint = joint_entropy(cfg);
    const double s_atom = binary_entropy(atom_marginal(cfg));
    const double s_rad = shannon_entropy(radiation_marginal(cfg));
    CHECK(std::abs(s_joint - s_atom - s_rad) < 1e-12);
  }
  SUBCASE("matches the dense oracle at kappa/omega = 2.5, inv_beta = 1") {
    const ThermalConfig cfg = make_cfg(2.5, 1.0);
    CHECK(std::abs(joint_entropy(cfg) - oracle_joint_entropy(cfg)) < 1e-10);
  }
}

TEST_CASE("closed-form marginals against the dense oracle") {
  std::mt19937 rng(5150);
  std::uniform_real_distribution<double> inv_beta_dist(0.05, 4.0);
  std::uniform_real_distribution<double> kappa_dist(0.0, 5.0);
  for (int trial = 0; trial < 12; ++trial) {
    const ThermalConfig cfg = make_cfg(kappa_dist(rng), inv_beta_dist(rng));
    const BlockDensity rho = joint_density(cfg);
    const DenseMatrix dense = dense_embed(rho, static_cast<int>(rho.blocks.size()));

    const QubitMarginal atom = atom_marginal(cfg);
    const QubitMarginal atom_oracle = partial_trace_radiation(dense);
    CHECK(atom.p_g == doctest::Approx(atom_oracle.p_g).epsilon(1e-12));
    CHECK(atom.p_g + atom.p_e == doctest::Approx(1.0).epsilon(1e-14));

    const ProbDist rad = radiation_marginal(cfg);
    const ProbDist rad_oracle = partial_trace_atom(dense);
    REQUIRE(rad.weights.size() == rad_oracle.weights.size());
    for (std::size_t n = 0; n < rad.weights.size(); ++n) {
      CHECK(std::abs(rad.weights[n] - rad_oracle.weights[n]) < 1e-12);
    }
  }
}

TEST_CASE("thermal marginals in closed-form limits") {
  SUBCASE("cold weak coupling: atom in ground state") {
    const QubitMarginal atom = atom_marginal(make_cfg(0.1, 0.01));
    CHECK(atom.p_g > 1.0 - 1e-10);
  }
  SUBCASE("uncoupled two-level occupation at beta omega = 1") {
    const QubitMarginal atom = atom_marginal(make_cfg(0.0, 1.0));
    const double f_minus = std::exp(0.5) / (std::exp(0.5) + std::exp(-0.5));
    CHECK(atom.p_g == doctest::Approx(f_minus).epsilon(1e-12));
  }
  SUBCASE("uncoupled photons are geometric") {
    const ProbDist rad = radiation_marginal(make_cfg(0.0, 1.0));
    for (int n = 0; n < 10; ++n) {
      const double expected = (1.0 - std::exp(-1.0)) * std::exp(-n);
      CHECK(rad.weights[n] == doctest::Approx(expected).epsilon(1e-12));
    }
  }
  SUBCASE("cold limit: vacuum") {
    const ProbDist rad = radiation_marginal(make_cfg(0.1, 0.01));
    CHECK(rad.weights[0] > 1.0 - 1e-10);
  }
}

TEST_CASE("joint density feeds the oracle") {
  SUBCASE("trace is one") {
    for (double kappa : {0.0, 0.5, 2.5, 5.0}) {
      const BlockDensity rho = joint_density(make_cfg(kappa, 0.8));
      CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("resonant product-basis coherence is (w1 - w2)/2") {
    const ThermalConfig cfg = make_cfg(2.5, 1.0);
    const auto weights = boltzmann_weights(cfg);
    const BlockDensity rho = joint_density(cfg);
    const DenseMatrix dense = dense_embed(rho, static_cast<int>(rho.blocks.size()));
    for (int n = 0; n < 5; ++n) {
      const double coherence =
          dense.at(product_index(n + 1, false), product_index(n, true)).real();
      CHECK(coherence ==
            doctest::Approx((weights.w1[n] - weights.w2[n]) / 2.0).epsilon(1e-13));
    }
  }
  SUBCASE("uncoupled state has no product-basis coherences") {
    const BlockDensity rho = joint_density(make_cfg(0.0, 1.0));
    const DenseMatrix dense = dense_embed(rho, static_cast<int>(rho.blocks.size()));
    for (int i = 0; i < dense.dim(); ++i) {
      for (int j = i + 1; j < dense.dim(); ++j) {
        CHECK(std::abs(dense.at(i, j)) == 0.0);
      }
    }
  }
}

TEST_CASE("thermal report and regimes") {
  SUBCASE("cold limit is degenerate") {
    const EntropyReport rep = thermal_report(make_cfg(0.5, 0.002));
    CHECK(rep.regime == Regime::Degenerate);
    CHECK(!rep.ratio.has_value());
  }
  SUBCASE("kappa/omega = 0.5 stays nonnegative") {
    for (int i = 1; i <= 40; ++i) {
      const EntropyReport rep = thermal_report(make_cfg(0.5, 0.1 * i));
      if (rep.ratio) CHECK(*rep.ratio >= -1e-9);
    }
  }
  SUBCASE("strong coupling shows negative conditional entropy") {
    bool found_25 = false;
    bool found_5 = false;
    for (int i = 1; i <= 60; ++i) {
      if (thermal_report(make_cfg(2.5, 0.05 * i)).ratio.value_or(0.0) < 0.0) found_25 = true;
      if (thermal_report(make_cfg(5.0, 0.05 * i)).ratio.value_or(0.0) < 0.0) found_5 = true;
    }
    CHECK(found_25);
    CHECK(found_5);
  }
}

TEST_CASE("thermal properties on a random grid") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> inv_beta_dist(0.05, 4.0);
  std::uniform_real_distribution<double> kappa_dist(0.0, 5.0);
  for (int trial = 0; trial < 30; ++trial) {
    const ThermalConfig cfg = make_cfg(kappa_dist(rng), inv_beta_dist(rng));
    const EntropyReport rep = thermal_report(cfg);
    // Araki-Lieb and subadditivity
    CHECK(rep.s_joint >= std::abs(rep.s_atom - rep.s_rad) - 1e-9);
    CHECK(rep.s_joint <= rep.s_atom + rep.s_rad + 1e-9);
    CHECK(rep.mutual >= -1e-9);
    CHECK(rep.mutual <= 2.0 * std::min(rep.s_atom, rep.s_rad) + 1e-9);
  }
}

TEST_CASE("truncation stability: doubling n_max moves entropies < 10 tol") {
  for (double kappa : {0.5, 2.5, 5.0}) {
    const ThermalConfig cfg = make_cfg(kappa, 2.0);
    const int n_max = resolve_truncation(cfg);
    const auto base = boltzmann_weights_at(cfg, n_max);
    const auto doubled = boltzmann_weights_at(cfg, 2 * n_max);
    const double s_base = shannon_entropy(base.flatten());
    const double s_doubled = shannon_entropy(doubled.flatten());
    CHECK(std::abs(s_base - s_doubled) < 10.0 * cfg.trunc_tol);
    const double sr_base = shannon_entropy(radiation_marginal_from(base, cfg.params));
    const double sr_doubled = shannon_entropy(radiation_marginal_from(doubled, cfg.params));
    CHECK(std::abs(sr_base - sr_doubled) < 10.0 * cfg.trunc_tol);
  }
}

TEST_CASE("low-temperature limit of the ratio follows the ground state") {
  // With the singlet |0,g> as ground state the ratio approaches +1 from
  // below; when an entangled dressed level is lowest it approaches -1
  // (marginals stay at ln 2 while the joint entropy vanishes).
  SUBCASE("kappa/omega = 0.5: singlet ground, ratio -> +1") {
    const double near = thermal_report(make_cfg(0.5, 0.05)).ratio.value();
    const double nearer = thermal_report(make_cfg(0.5, 0.04)).ratio.value();
    CHECK(near > 0.85);
    CHECK(nearer > near);
    CHECK(nearer < 1.0 + 1e-9);
  }
  SUBCASE("kappa/omega = 2.5 and 5: dressed ground, ratio -> -1") {
    for (double kappa : {2.5, 5.0}) {
      const double near = thermal_report(make_cfg(kappa, 0.004)).ratio.value();
      const double nearer = thermal_report(make_cfg(kappa, 0.002)).ratio.value();
      CHECK(near < -0.9);
      CHECK(nearer < near);
      CHECK(nearer >= -1.0 - 1e-9);
    }
  }
}

TEST_CASE("independence at kappa = 0 across temperatures") {
  for (double inv_beta : {0.1, 0.5, 1.0, 2.0, 4.0}) {
    const EntropyReport rep = thermal_report(make_cfg(0.0, inv_beta));
    CHECK(std::abs(rep.s_joint - rep.s_atom - rep.s_rad) < 1e-10);
    CHECK(std::abs(rep.mutual) < 1e-10);
  }
}
