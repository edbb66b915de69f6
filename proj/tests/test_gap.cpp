#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "cmcgap/gap.hpp"
#include "cmcgap/pinching.hpp"

using namespace cmcgap;

TEST_CASE("simons balance right side") {
  // Vanishes at ring_alpha (the bracket is the identity residual).
  for (int n : {4, 10, 30}) {
    for (double H : {0.1, 1.0, 2.0}) {
      for (double c : {-0.5, 0.0, 1.0}) {
        if (H * H + c <= 0.0) continue;
        const double ra = ring_alpha(n, H, c);
        const double scale = std::max(1.0, ra * n * (H * H + c));
        REQUIRE(std::fabs(simons_rhs(n, H, c, ra)) / scale < 1e-9);
      }
    }
  }
  CHECK(simons_rhs(4, 1.0, 1.0, 0.0) == 0.0);
  // At the top of the band for (4, 1, 1): bracket 0.425814444381.
  const double top = ring_alpha(4, 1.0, 1.0) + delta_band(4, 1.0, 1.0);
  CHECK(simons_rhs(4, 1.0, 1.0, top) ==
        doctest::Approx(1.65130692659).epsilon(1e-10));
  CHECK_THROWS_AS(simons_rhs(4, -1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(simons_rhs(4, 1.0, 1.0, -0.1), std::invalid_argument);

  SimonsBalance bal;
  bal.n = 4;
  bal.H = 1.0;
  bal.c = 1.0;
  bal.ring_s = top;
  bal.phi = 0.0;
  bal.grad_norm_sq = simons_rhs(4, 1.0, 1.0, top);
  CHECK(std::fabs(bal.residual()) < 1e-12);
}

TEST_CASE("band phi bound") {
  const double ra = ring_alpha(4, 1.0, 1.0);
  const BandPhiBound at_bottom = band_phi_bound(4, 1.0, 1.0, ra);
  CHECK(std::fabs(at_bottom.lhs) < 1e-5);
  CHECK(at_bottom.rhs == doctest::Approx(0.877734032568).epsilon(1e-10));

  const double top = ra + delta_band(4, 1.0, 1.0);
  const BandPhiBound at_top = band_phi_bound(4, 1.0, 1.0, top);
  CHECK(at_top.lhs == doctest::Approx(0.425814444381).epsilon(1e-10));
  CHECK(at_top.rhs == doctest::Approx(0.909563588111).epsilon(1e-10));
  CHECK(at_top.lhs <= at_top.rhs);

  CHECK_THROWS_AS(band_phi_bound(4, 1.0, 1.0, ra - 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(band_phi_bound(4, 1.0, 1.0, top + 0.5),
                  std::invalid_argument);
}

TEST_CASE("band eta coefficient") {
  const double ra = ring_alpha(4, 1.0, 1.0);
  const BandEtaCoefficient b = band_eta_coefficient(4, 1.0, 1.0, ra);
  CHECK(b.value == doctest::Approx(-7.60139969970).epsilon(1e-10));
  CHECK(b.floor == doctest::Approx(-9.12167963964).epsilon(1e-10));
  CHECK(b.value >= b.floor);

  // Tiny H: the band collapses to a single point and the check degenerates
  // gracefully.
  const double h = 1e-8;
  const double ra_h = ring_alpha(4, h, 1.0);
  const BandEtaCoefficient tiny = band_eta_coefficient(4, h, 1.0, ra_h);
  CHECK(tiny.value >= tiny.floor);
  CHECK(delta_band(4, h, 1.0) < 1e-14);
}

TEST_CASE("band sweep around the full grid") {
  for (int n : {4, 11, 21, 30}) {
    for (double H : {0.1, 1.0, 2.0}) {
      for (double c : {-0.5, 0.0, 1.0}) {
        if (H * H + c <= 0.0) continue;
        const double ra = ring_alpha(n, H, c);
        const double d = delta_band(n, H, c);
        for (int i = 0; i <= 100; ++i) {
          const double ring_s = ra + d * i / 100.0;
          const BandPhiBound b = band_phi_bound(n, H, c, ring_s);
          REQUIRE(b.lhs <= b.rhs + 1e-9);
          const BandEtaCoefficient e = band_eta_coefficient(n, H, c, ring_s);
          REQUIRE(e.value >= e.floor - 1e-9);
        }
      }
    }
  }
}

TEST_CASE("curvature invariants") {
  const CmcInvariants inv = CmcInvariants::from_s(4, 1.0, 7.61133);
  CHECK(inv.ring_s == doctest::Approx(3.61133).epsilon(1e-12));
  CHECK(CmcInvariants::from_s(4, 1.0, 4.0).ring_s == 0.0);  // umbilical
  CHECK_THROWS_AS(CmcInvariants::from_s(4, 1.0, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(CmcInvariants::from_s(2, 1.0, 10.0), std::invalid_argument);
}

TEST_CASE("classification contract") {
  CHECK(classify(4, 1.0, 1.0, 7.0).tag == GapTag::subcritical);
  CHECK(classify(4, 1.0, 1.0, 7.61133).tag == GapTag::rigid_boundary);
  CHECK(classify(4, 1.0, 1.0, 7.7).tag == GapTag::forbidden_band);
  CHECK(classify(4, 1.0, 1.0, 12.0).tag == GapTag::above);

  const GapRegion g = classify(4, 1.0, 1.0, 7.7);
  CHECK(g.alpha == doctest::Approx(7.61132983716).epsilon(1e-11));
  CHECK(g.alpha + g.delta == doctest::Approx(7.87799650383).epsilon(1e-11));
  CHECK(g.dist_alpha == doctest::Approx(7.7 - g.alpha));

  // The band is half-open: its top belongs to it, a hair above does not.
  const double top = g.alpha + g.delta;
  CHECK(classify(4, 1.0, 1.0, top).tag == GapTag::forbidden_band);
  CHECK(classify(4, 1.0, 1.0, top + 1e-3).tag == GapTag::above);

  CHECK_THROWS_AS(classify(4, 1.0, 1.0, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(classify(3, 1.0, 1.0, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(classify(4, 0.1, -0.5, 10.0), std::invalid_argument);
}

TEST_CASE("product models in the sphere") {
  // Literal lambda from a 6-digit table entry.
  const ModelHypersurface m1 = clifford_model(4, 1, 1.54859);
  CHECK(m1.H == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(m1.S == doctest::Approx(7.61138436509).epsilon(1e-10));
  CHECK(std::fabs(m1.S - alpha_k(4, 1.0, 1)) < 1e-4);

  // Minimal product model: H = 0, S = n, matching the g = 2 value.
  const ModelHypersurface m2 = clifford_model(4, 2, 1.0);
  CHECK(m2.H == 0.0);
  CHECK(m2.S == 4.0);
  CHECK(m2.S == muenzner_s(4, 2));

  // Round trip through lambda_k at exact parameters.
  const ModelHypersurface m3 = clifford_model(10, 3, lambda_k(10, 0.5, 3));
  CHECK(std::fabs(m3.H - 0.5) < 1e-9);
  CHECK(std::fabs(m3.S - alpha_k(10, 0.5, 3)) < 1e-8 * m3.S);

  CHECK_THROWS_AS(clifford_model(4, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(clifford_model(4, 0, 1.0), std::invalid_argument);
}

TEST_CASE("boundary realization sweep") {
  for (int n = 4; n <= 30; ++n) {
    for (double H0 : {0.1, 0.5, 1.0, 2.0}) {
      for (int k = 1; k <= n - 1; ++k) {
        const ModelHypersurface m = clifford_model(n, k, lambda_k(n, H0, k));
        REQUIRE(std::fabs(m.H - H0) < 1e-9);
        REQUIRE(std::fabs(m.S - alpha_k(n, H0, k)) < 1e-8 * m.S);
      }
      const ModelHypersurface b = clifford_model(n, 1, lambda_k(n, H0, 1));
      REQUIRE(classify(n, H0, 1.0, b.S).tag == GapTag::rigid_boundary);
    }
  }
}

TEST_CASE("rigid model in a general space form") {
  for (int n : {4, 7, 15}) {
    for (double c : {-0.5, 0.0, 0.25, 1.0}) {
      for (double H : {0.5, 1.0, 2.0}) {
        if (H * H + c <= 0.0) continue;
        const ModelHypersurface m = rigid_model(n, H, c);
        REQUIRE(std::fabs(m.H - H) < 1e-12 * std::max(1.0, H));
        REQUIRE(std::fabs(m.S - alpha_general(n, H, c)) <
                1e-10 * std::max(1.0, m.S));
      }
    }
  }
  const ModelHypersurface m = rigid_model(4, 1.0, -0.5);
  CHECK(m.lambda == doctest::Approx(1.19371294336).epsilon(1e-11));
}

TEST_CASE("muenzner values") {
  CHECK(muenzner_s(4, 1) == 0.0);
  CHECK(muenzner_s(4, 2) == 4.0);
  CHECK(muenzner_s(6, 3) == 12.0);
  CHECK(muenzner_s(6, 3) == doctest::Approx(2.0 * 6.0 + 3.0 * 6.0 * 0.0));
  CHECK(muenzner_s(12, 6) == 60.0);
  CHECK_THROWS_AS(muenzner_s(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(muenzner_s(4, 0), std::invalid_argument);
}

TEST_CASE("model spectra link to the functional picture") {
  // k = 1 boundary model: the vanishing spectrum.
  const TraceFreeSpectrum s1 =
      spectrum_of_model(clifford_model(4, 1, lambda_k(4, 1.0, 1)));
  CHECK(s1[0] == doctest::Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-9));
  const SpectrumFunctionals f1 = functionals(s1);
  CHECK(std::fabs(f1.phi) < 1e-9);
  CHECK(std::fabs(f1.eta) < 1e-9);
  CHECK(std::fabs(f1.sigma) < 1e-9);
  CHECK(phi_below_threshold(s1));
  const SmallPhiConclusions c1 = small_phi_conclusions(s1);
  CHECK(c1.eta_ok);
  CHECK(c1.sigma_ok);
  CHECK(c1.gap_ok);

  // k = n-1: the reversed two-valued spectrum.
  const SpectrumFunctionals f3 =
      functionals(spectrum_of_model(clifford_model(4, 3, lambda_k(4, 1.0, 3))));
  CHECK(f3.phi == doctest::Approx(1.15470053838).epsilon(1e-4));

  // Minimal model: cubic sum vanishes, phi = (n-2)/sqrt(n(n-1)).
  const SpectrumFunctionals f2 =
      functionals(spectrum_of_model(clifford_model(4, 2, 1.0)));
  CHECK(f2.phi == doctest::Approx(0.577350269190).epsilon(1e-11));

  // Umbilical models have no trace-free spectrum.
  ModelHypersurface umb;
  umb.n = 4;
  umb.k = 1;
  umb.lambda = 1.0;
  umb.H = 1.0;
  umb.S = 4.0;
  umb.principal_curvatures = {1.0, 1.0, 1.0, 1.0};
  CHECK_THROWS_AS(spectrum_of_model(umb), std::domain_error);
}
