#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "cmcgap/pinching.hpp"

using namespace cmcgap;

TEST_CASE("alpha closed form") {
  CHECK(alpha_general(4, 0.0, 1.0) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(alpha_general(4, 1.0, 1.0) ==
        doctest::Approx(7.61132983716).epsilon(1e-11));
  // c = 0 collapses the radicand to n^2 H^4.
  CHECK(alpha_general(4, 1.0, 0.0) ==
        doctest::Approx(16.0 / 3.0).epsilon(1e-14));
  // Sign of H never matters.
  CHECK(alpha_general(7, -1.3, 0.5) == alpha_general(7, 1.3, 0.5));
  CHECK_THROWS_AS(alpha_general(4, 0.5, -1.0), std::domain_error);
  CHECK_THROWS_AS(alpha_general(2, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("ring alpha") {
  CHECK(ring_alpha(4, 1.0, 1.0) ==
        doctest::Approx(3.61132983716).epsilon(1e-11));
  CHECK(ring_alpha(4, 0.0, 1.0) == doctest::Approx(4.0));
  CHECK(ring_alpha(10, 0.0, 1.0) == doctest::Approx(10.0));
  CHECK(ring_alpha(4, 1.0, -0.5) ==
        doctest::Approx(0.450296453109).epsilon(1e-11));
  // Zero exactly on the boundary H^2 + c = 0.
  CHECK(std::fabs(ring_alpha(6, 0.7, -0.49)) < 1e-12);
}

TEST_CASE("alpha_k family") {
  // n - 2k = 0 kills the radical term: alpha_{n/2} = n + 2nH^2.
  CHECK(alpha_k(4, 1.0, 2) == doctest::Approx(12.0).epsilon(1e-14));
  CHECK(alpha_k(6, 1.0, 3) == doctest::Approx(18.0).epsilon(1e-14));
  CHECK(alpha_k(4, 1.0, 1) ==
        doctest::Approx(7.61132983716).epsilon(1e-11));
  CHECK(alpha_k(4, 1.0, 3) ==
        doctest::Approx(21.7220034962).epsilon(1e-11));
  CHECK(alpha_k(4, 1.0, 3) == doctest::Approx(beta(4, 1.0)).epsilon(1e-14));
  CHECK(alpha_k(5, 0.5, 2) ==
        doctest::Approx(6.45833333333).epsilon(1e-12));
  CHECK_THROWS_AS(alpha_k(4, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(alpha_k(4, 1.0, 4), std::invalid_argument);
}

TEST_CASE("beta") {
  CHECK(beta(4, 0.0) == doctest::Approx(4.0));
  CHECK(beta(4, 1.0) == doctest::Approx(21.7220034962).epsilon(1e-11));
  for (int n : {3, 4, 7, 12}) {
    for (double H : {0.1, 1.0, 2.5}) {
      CHECK(beta(n, H) ==
            doctest::Approx(alpha_k(n, H, n - 1)).epsilon(1e-13));
    }
  }
}

TEST_CASE("band-width coefficient") {
  CHECK(b_n(4) == 0.2);
  CHECK(b_n(20) == 0.2);
  CHECK(b_n(21) == 49.0 / 250.0);
  CHECK(b_n(21) == doctest::Approx(0.196));
  CHECK(b_n(100) == 49.0 / 250.0);
  CHECK_THROWS_AS(b_n(3), std::invalid_argument);
}

TEST_CASE("delta band") {
  CHECK(delta_band(4, 1.0, 1.0) ==
        doctest::Approx(4.0 / 15.0).epsilon(1e-14));
  CHECK(delta_band(4, 0.0, 1.0) == 0.0);
  // c < 0 picks the ring-alpha branch of the min.
  CHECK(delta_band(4, 1.0, -0.5) ==
        doctest::Approx(0.2 * ring_alpha(4, 1.0, -0.5)).epsilon(1e-14));
  CHECK(delta_band(4, 1.0, -0.5) ==
        doctest::Approx(0.0900592906218).epsilon(1e-11));
  CHECK_THROWS_AS(delta_band(4, 0.1, -0.5), std::invalid_argument);
}

TEST_CASE("lambda_k") {
  CHECK(lambda_k(4, 1.0, 1) ==
        doctest::Approx(1.54858377035).epsilon(1e-11));
  CHECK(lambda_k(4, 0.0, 2) == doctest::Approx(1.0));
  CHECK(lambda_k(10, 0.0, 5) == doctest::Approx(1.0));
  CHECK(lambda_k(4, -1.0, 1) == lambda_k(4, 1.0, 1));  // |H|
  CHECK_THROWS_AS(lambda_k(4, 1.0, 0), std::invalid_argument);
}

TEST_CASE("ring-alpha identity") {
  // Both sides at (4, 1, 1) evaluate to 4.38867016284.
  const double ra = ring_alpha(4, 1.0, 1.0);
  const double lhs = 2.0 * std::sqrt(4.0 / 3.0 * ra);
  const double rhs = 8.0 - ra;
  CHECK(lhs == doctest::Approx(4.38867016284).epsilon(1e-11));
  CHECK(rhs == doctest::Approx(4.38867016284).epsilon(1e-11));
  CHECK(std::fabs(ring_alpha_identity_residual(4, 1.0, 1.0)) < 1e-10);
  CHECK(std::fabs(ring_alpha_identity_residual(4, 0.0, 1.0)) < 1e-12);

  // Grid sweep with the relative residual bound.
  for (int n = 4; n <= 50; ++n) {
    for (int i = 1; i <= 100; ++i) {
      const double H = i / 10.0;
      for (double c : {-0.5, 0.0, 1.0}) {
        if (H * H + c <= 0.0) continue;
        const double r = ring_alpha_identity_residual(n, H, c);
        const double scale =
            std::max(1.0, n * (H * H + c) - ring_alpha(n, H, c));
        REQUIRE(std::fabs(r) / scale < 1e-10);
      }
    }
  }
}

TEST_CASE("bisection root oracle agrees with the closed form") {
  for (int n = 4; n <= 50; n += 2) {
    for (double H : {0.1, 0.5, 1.0, 3.0, 10.0}) {
      for (double c : {-0.5, 0.0, 1.0}) {
        if (H * H + c <= 0.0) continue;
        const double closed = ring_alpha(n, H, c);
        const double oracle = ring_alpha_root_oracle(n, H, c);
        REQUIRE(std::fabs(closed - oracle) <=
                1e-12 * std::max(1.0, std::fabs(closed)));
      }
    }
  }
  // H = 0 degenerates to the double root n(H^2+c).
  CHECK(ring_alpha_root_oracle(6, 0.0, 1.0) == doctest::Approx(6.0));
}

TEST_CASE("alpha_k ordering is strict for H != 0") {
  for (int n = 4; n <= 30; ++n) {
    for (double H : {0.01, 0.1, 1.0, 10.0}) {
      for (int k = 1; k <= n - 2; ++k) {
        REQUIRE(alpha_k(n, H, k + 1) - alpha_k(n, H, k) > 1e-9);
      }
    }
  }
}

TEST_CASE("band-width min branch follows the sign of c") {
  for (int n : {4, 7, 12, 30}) {
    for (double H : {0.1, 0.5, 1.0, 5.0, 10.0}) {
      const double umb = n * H * H / (n - 1.0);
      CHECK(umb < ring_alpha(n, H, 1.0));
      CHECK(umb >= ring_alpha(n, H, 0.0) - 1e-10);
      if (H * H > 0.25) CHECK(umb > ring_alpha(n, H, -0.25));
    }
  }
}

TEST_CASE("midrange alpha gap") {
  CHECK(alpha_mid_gap(4, 1.0) == doctest::Approx(8.0).epsilon(1e-13));
  CHECK(alpha_mid_gap(6, 1.0) == doctest::Approx(12.0).epsilon(1e-13));
  CHECK(alpha_mid_gap(5, 0.5) ==
        doctest::Approx(7.29166666667).epsilon(1e-12));
  CHECK(alpha_mid_gap(5, 0.5) > 0.0);
  CHECK_THROWS_AS(alpha_mid_gap(4, 0.0), std::invalid_argument);
}

TEST_CASE("profile bundles the family consistently") {
  const PinchingProfile p = pinching_profile(6, 0.8, 1.0);
  REQUIRE(p.alpha_k.size() == 5);
  CHECK(p.alpha_k.front() == doctest::Approx(p.alpha).epsilon(1e-13));
  CHECK(p.alpha_k.back() == doctest::Approx(p.beta).epsilon(1e-13));
  CHECK(p.delta > 0.0);
  for (size_t i = 0; i < p.lambda_k.size(); ++i) CHECK(p.lambda_k[i] > 0.0);

  const PinchingProfile q = pinching_profile(3, 1.0, 1.0);  // no b_n below 4
  CHECK(q.b_n == 0.0);
  CHECK(q.alpha_k.size() == 2);
}
