#include <doctest.h>

#include <cmath>
#include <random>

#include "jcm/info_measures.hpp"

using namespace jcm;

namespace {
const double kLn2 = std::log(2.0);
}

TEST_CASE("conditional entropies are plain differences") {
  SUBCASE("product state") {
    const auto [cond_r, cond_a] = conditional_entropies(0.9, 0.4, 0.5);
    CHECK(cond_r == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(cond_a == doctest::Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("pure maximally entangled pair goes negative") {
    const auto [cond_r, cond_a] = conditional_entropies(0.0, kLn2, kLn2);
    CHECK(cond_r == doctest::Approx(-kLn2).epsilon(1e-15));
    CHECK(cond_a == doctest::Approx(-kLn2).epsilon(1e-15));
  }
}

TEST_CASE("mutual entropy and its bounds") {
  CHECK(mutual_entropy(0.9, 0.4, 0.5) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(mutual_entropy(0.0, kLn2, kLn2) == doctest::Approx(2.0 * kLn2).epsilon(1e-15));
  // classical maximal correlation saturates min(S_A, S_R)
  CHECK(mutual_entropy(0.7, 0.7, 0.7) == doctest::Approx(0.7).epsilon(1e-15));
  // violations beyond 1e-6 raise instead of clamping
  CHECK_THROWS_AS(mutual_entropy(2.0, 0.5, 0.5), BoundViolation);
  CHECK_THROWS_AS(mutual_entropy(0.0, 1.0, 0.1), BoundViolation);
}

TEST_CASE("classification") {
  const double tol = 1e-6;
  SUBCASE("zero mutual entropy is independent") {
    const EntropyReport rep = make_report(0.9, 0.4, 0.5);
    CHECK(rep.regime == Regime::Independent);
    CHECK(rep.mutual == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("negative conditional entropy is supercorrelated") {
    // cond_given_rad = -0.3 with S_A = 0.5
    const EntropyReport rep = make_report(0.4, 0.5, 0.7);
    CHECK(rep.cond_given_rad == doctest::Approx(-0.3).epsilon(1e-12));
    CHECK(rep.regime == Regime::Supercorrelated);
  }
  SUBCASE("ratio strictly between 0 and 1 is classically correlated") {
    const EntropyReport rep = make_report(0.8, 0.5, 0.6);
    REQUIRE(rep.ratio.has_value());
    CHECK(*rep.ratio > 0.0);
    CHECK(*rep.ratio < 1.0);
    CHECK(rep.regime == Regime::ClassicallyCorrelated);
  }
  SUBCASE("tiny marginals are degenerate") {
    const EntropyReport rep = make_report(1e-9, 1e-9, 1e-9);
    CHECK(rep.regime == Regime::Degenerate);
  }
  SUBCASE("maximal classical correlation is flagged, not a regime") {
    const EntropyReport rep = make_report(0.7, 0.7, 0.7);
    CHECK(rep.maximally_classical);
    CHECK(rep.regime == Regime::ClassicallyCorrelated);
  }
  SUBCASE("swapping the marginals preserves the label when they are equal") {
    const EntropyReport fwd = make_report(0.5, 0.45, 0.45);
    EntropyReport swapped = fwd;
    std::swap(swapped.s_atom, swapped.s_rad);
    CHECK(classify(swapped, tol) == classify(fwd, tol));
  }
}

TEST_CASE("report identities on random admissible triples") {
  std::mt19937 rng(2718);
  std::uniform_real_distribution<double> unit(0.0, 2.0);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const double s_atom = unit(rng);
    const double s_rad = unit(rng);
    // admissible joint entropies live in [|S_A - S_R|, S_A + S_R]
    std::uniform_real_distribution<double> joint_dist(std::abs(s_atom - s_rad),
                                                      s_atom + s_rad);
    const double s_joint = joint_dist(rng);
    if (s_atom + s_rad - s_joint > 2.0 * std::min(s_atom, s_rad)) continue;
    const EntropyReport rep = make_report(s_joint, s_atom, s_rad);
    ++checked;
    CHECK(rep.mutual >= -1e-9);
    CHECK(rep.mutual <= 2.0 * std::min(s_atom, s_rad) + 1e-9);
    if (rep.ratio) {
      CHECK(std::abs(*rep.ratio - (1.0 - rep.mutual / s_atom)) <= 1e-10);
    }
  }
  CHECK(checked > 500);
}
