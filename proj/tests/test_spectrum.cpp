#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "cmcgap/rng.hpp"
#include "cmcgap/spectrum.hpp"

using namespace cmcgap;

namespace {

TraceFreeSpectrum random_spectrum(int n, std::uint64_t seed, std::uint64_t i) {
  SplitMix64 rng = SplitMix64::stream(seed, i);
  std::vector<double> v(static_cast<size_t>(n));
  for (double& x : v) x = rng.normal();
  return TraceFreeSpectrum::from_raw(std::move(v));
}

}  // namespace

TEST_CASE("canonicalization") {
  const TraceFreeSpectrum s = TraceFreeSpectrum::from_raw({-3, 1, 1, 1});
  CHECK(s[0] == doctest::Approx(-0.866025403784).epsilon(1e-11));
  CHECK(s[1] == doctest::Approx(0.288675134595).epsilon(1e-11));
  CHECK(s[3] == doctest::Approx(0.288675134595).epsilon(1e-11));

  const TraceFreeSpectrum t = TraceFreeSpectrum::from_raw({1, 2, 3, 4});
  CHECK(t[0] == doctest::Approx(-0.670820393250).epsilon(1e-11));
  CHECK(t[1] == doctest::Approx(-0.223606797750).epsilon(1e-11));
  CHECK(t[2] == doctest::Approx(0.223606797750).epsilon(1e-11));
  CHECK(t[3] == doctest::Approx(0.670820393250).epsilon(1e-11));

  CHECK_THROWS_AS(TraceFreeSpectrum::from_raw({5, 5, 5, 5}),
                  std::domain_error);
  CHECK_THROWS_AS(TraceFreeSpectrum::from_raw({1, 2}), std::invalid_argument);

  // Sorting is part of the canonical form.
  const TraceFreeSpectrum u = TraceFreeSpectrum::from_raw({4, 1, 3, 2});
  for (int i = 0; i + 1 < u.size(); ++i) CHECK(u[i] <= u[i + 1]);
}

TEST_CASE("constraints hold for random inputs") {
  for (int n : {3, 4, 5, 10, 20, 50}) {
    for (std::uint64_t i = 0; i < 200; ++i) {
      const TraceFreeSpectrum s = random_spectrum(n, 7, i + 1000 * n);
      double sum = 0.0, sum_sq = 0.0;
      for (double x : s.values()) {
        sum += x;
        sum_sq += x * x;
      }
      REQUIRE(std::fabs(sum) < 1e-12);
      REQUIRE(std::fabs(sum_sq - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("functionals at the two-valued spectra") {
  // Bottom eigenvalue of multiplicity one: all three functionals vanish.
  const TraceFreeSpectrum ext = TraceFreeSpectrum::two_valued(4, 1);
  const SpectrumFunctionals fe = functionals(ext);
  CHECK(std::fabs(fe.phi) < 1e-14);
  CHECK(std::fabs(fe.eta) < 1e-14);
  CHECK(std::fabs(fe.sigma) < 1e-14);
  CHECK(ext[0] == doctest::Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-14));

  // The reversed spectrum (three low entries).
  const TraceFreeSpectrum rev = TraceFreeSpectrum::two_valued(4, 3);
  const SpectrumFunctionals fr = functionals(rev);
  CHECK(fr.phi == doctest::Approx(1.15470053838).epsilon(1e-11));
  CHECK(fr.eta == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  CHECK(fr.sigma == doctest::Approx(0.942809041582).epsilon(1e-11));
}

TEST_CASE("sigma squared equals eta(2 - eta)") {
  for (int n : {3, 4, 5, 10, 21, 50}) {
    for (std::uint64_t i = 0; i < 500; ++i) {
      const SpectrumFunctionals f =
          functionals(random_spectrum(n, 11, i + 977 * n));
      REQUIRE(std::fabs(f.sigma * f.sigma - f.eta * (2.0 - f.eta)) < 1e-10);
      REQUIRE(f.sigma >= 0.0);
      REQUIRE(f.eta < 1.0);
      REQUIRE(f.eta >= 0.0);
    }
  }
}

TEST_CASE("moment inequality margins") {
  const TraceFreeSpectrum ext = TraceFreeSpectrum::two_valued(4, 1);
  const MomentInequalityMargins me = moment_inequality_margins(ext);
  CHECK(std::fabs(me.phi_vs_eta) < 1e-13);
  CHECK(std::fabs(me.eta_vs_sigma) < 1e-13);
  CHECK(std::fabs(me.phi_vs_eta_sigma) < 1e-13);

  const TraceFreeSpectrum rev = TraceFreeSpectrum::two_valued(4, 3);
  const MomentInequalityMargins mr = moment_inequality_margins(rev);
  CHECK(mr.phi_vs_eta == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(mr.eta_vs_sigma == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
  CHECK(mr.phi_vs_eta_sigma >= 0.0);
  CHECK(mr.phi_vs_eta_sigma == doctest::Approx(7.02131509828).epsilon(1e-10));

  for (int n : {3, 4, 5, 10, 20, 50}) {
    for (std::uint64_t i = 0; i < 500; ++i) {
      const MomentInequalityMargins m =
          moment_inequality_margins(random_spectrum(n, 13, i + 31 * n));
      REQUIRE(m.phi_vs_eta >= -1e-9);
      REQUIRE(m.eta_vs_sigma >= -1e-9);
      REQUIRE(m.phi_vs_eta_sigma >= -1e-9);
    }
  }
}

TEST_CASE("cubic decomposition is exact") {
  CHECK(std::fabs(phi_decomposition_residual(
            TraceFreeSpectrum::two_valued(4, 1))) < 1e-14);
  CHECK(std::fabs(phi_decomposition_residual(
            TraceFreeSpectrum::from_raw({1, 2, 3, 4}))) < 1e-10);
  for (int n : {3, 4, 7, 15, 30}) {
    for (std::uint64_t i = 0; i < 300; ++i) {
      REQUIRE(std::fabs(phi_decomposition_residual(
                  random_spectrum(n, 17, i + 53 * n))) < 1e-10);
    }
  }
}

TEST_CASE("phi threshold") {
  CHECK(phi_threshold(4) == doctest::Approx(0.115470053838).epsilon(1e-11));
  CHECK(phi_below_threshold(TraceFreeSpectrum::two_valued(4, 1)));
  CHECK_FALSE(phi_below_threshold(TraceFreeSpectrum::two_valued(4, 3)));
}

TEST_CASE("eigen-gap threshold constant") {
  // 2 / (3 - 3^-9) = 0.666677956916...
  CHECK(eigen_gap_threshold(4) / std::sqrt(4.0 / 3.0) ==
        doctest::Approx(0.666677956916).epsilon(1e-11));
  CHECK(eigen_gap_threshold(4) ==
        doctest::Approx(0.769813395777).epsilon(1e-11));
}

TEST_CASE("small-phi conclusions") {
  const TraceFreeSpectrum ext = TraceFreeSpectrum::two_valued(4, 1);
  const SmallPhiConclusions c = small_phi_conclusions(ext);
  CHECK(c.eta_ok);
  CHECK(c.sigma_ok);
  CHECK(c.gap_ok);
  // mu_2 - mu_1 = sqrt(3)/2 + sqrt(3)/6 = 1.15470053838 clears the
  // threshold 0.769813395777.
  CHECK(c.gap_margin ==
        doctest::Approx(1.15470053838 - 0.769813395777).epsilon(1e-9));

  CHECK_THROWS_AS(small_phi_conclusions(TraceFreeSpectrum::two_valued(4, 3)),
                  std::invalid_argument);
}
