#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "wedge/embedding.hpp"
#include "wedge/gtd.hpp"
#include "wedge/specfun.hpp"

using namespace wedge;
using C = complex;

TEST_SUITE("embedding") {

TEST_CASE("rational openings are recognized with the smallest denominator") {
  const auto a = embedding::rational_of(7 * pi / 8);
  CHECK(a.p == 4);
  CHECK(a.q == 7);
  const auto b = embedding::rational_of(pi);
  CHECK(b.p == 1);
  CHECK(b.q == 2);
  CHECK_THROWS_AS(embedding::rational_of(pi / std::sqrt(2.0)), NotRational);
}

TEST_CASE("directivity vanishes on the lower face for the Dirichlet problem") {
  WedgeProblem p(7 * pi / 8, 0.0, 2.0, Bc::Dirichlet);
  CHECK(std::abs(embedding::directivity_hat(1, -p.theta_w, p)) < 1e-14);
  CHECK(std::abs(embedding::directivity_hat(3, -p.theta_w, p)) < 1e-14);
}

TEST_CASE("directivity matches the cylindrical far field of the edge mode") {
  // The m-th edge mode (pi i / Gamma(nu)) (k/2)^nu H^(1)_nu(kr)
  // sin(nu (theta + theta_w)) behaves like D_m e^{ikr} / sqrt(kr).
  WedgeProblem p(7 * pi / 8, 0.0, 2.0, Bc::Dirichlet);
  const int m = 1;
  const double nu = m * p.delta();
  const double th = 0.3, kr = 200.0;
  const C mode = C(0, pi) / specfun::gamma_fn(nu) *
                 std::pow(p.k / 2.0, nu) * specfun::hankel1(nu, kr) *
                 std::sin(nu * (th + p.theta_w));
  const C far = embedding::directivity_hat(m, th, p) *
                std::exp(C(0, kr)) / std::sqrt(kr);
  CHECK(std::abs(mode - far) < 0.01 * std::abs(far));
}

TEST_CASE("highest-order directivity stays finite") {
  WedgeProblem p(7 * pi / 8, 0.0, 2.0, Bc::Dirichlet);
  const auto ra = embedding::rational_of(p.theta_w);
  const C v = embedding::directivity_hat(ra.q - 1, 0.3, p);
  CHECK(std::isfinite(v.real()));
  CHECK(std::isfinite(v.imag()));
  CHECK(std::abs(v) > 0.0);
}

TEST_CASE("assembled coefficient equals the spectral diffraction coefficient") {
  WedgeProblem p(7 * pi / 8, 0.5, 1.0, Bc::Dirichlet);
  const auto ra = embedding::rational_of(p.theta_w);
  const C emb = embedding::embed_diffraction_coefficient(0.2, 0.5, p, ra);
  const C ref = gtd::diffraction_coefficient(0.2, 0.5, p);
  CHECK(std::abs(emb - ref) < 1e-10);
}

TEST_CASE("assembled coefficient is reciprocal at random regular pairs") {
  WedgeProblem p(7 * pi / 8, 0.1, 1.0, Bc::Dirichlet);
  const auto ra = embedding::rational_of(p.theta_w);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.05, 0.8);
  int checked = 0;
  for (int i = 0; i < 40 && checked < 20; ++i) {
    const double a = u(rng), b = u(rng);
    bool fa = false, fb = false;
    const C lhs = embedding::embed_diffraction_coefficient(a, b, p, ra, &fa);
    const C rhs = embedding::embed_diffraction_coefficient(b, a, p, ra, &fb);
    if (fa || fb) continue;  // skip removable directions
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(lhs)));
    ++checked;
  }
  CHECK(checked == 20);
}

TEST_CASE("half-plane reduction gives the single-mode coefficient") {
  WedgeProblem p(pi, 0.4, 1.0, Bc::Dirichlet);
  const auto ra = embedding::rational_of(pi);
  CHECK(ra.q - 1 == 1);
  const C emb = embedding::embed_diffraction_coefficient(0.7, 0.4, p, ra);
  const C ref = gtd::diffraction_coefficient(0.7, 0.4, p);
  CHECK(std::abs(emb - ref) < 1e-10);
}

TEST_CASE("assembled coefficient is independent of the wavenumber") {
  const auto ra = embedding::rational_of(7 * pi / 8);
  C prev{0.0, 0.0};
  bool first = true;
  for (double k : {0.5, 1.0, 2.0, 7.0}) {
    WedgeProblem p(7 * pi / 8, 0.5, k, Bc::Dirichlet);
    const C v = embedding::embed_diffraction_coefficient(0.2, 0.5, p, ra);
    if (!first) CHECK(std::abs(v - prev) < 1e-10);
    prev = v;
    first = false;
  }
}

TEST_CASE("removable directions are extrapolated and flagged") {
  WedgeProblem p(7 * pi / 8, 0.5, 1.0, Bc::Dirichlet);
  const auto ra = embedding::rational_of(p.theta_w);
  // Solve cos(p (theta + theta_w)) = (-1)^p cos(p (theta_i + theta_w)) for a
  // direction inside the wedge: theta = theta_i works for even p.
  const double singular_theta = p.theta_i;
  bool flagged = false;
  const C v = embedding::embed_diffraction_coefficient(singular_theta, 0.5, p,
                                                       ra, &flagged);
  CHECK(flagged);
  const C ref = gtd::diffraction_coefficient(singular_theta, 0.5, p);
  CHECK(std::abs(v - ref) < 1e-6);
}

TEST_CASE("Neumann assembly is explicitly unsupported") {
  WedgeProblem p(7 * pi / 8, 0.5, 1.0, Bc::Neumann);
  const auto ra = embedding::rational_of(p.theta_w);
  CHECK_THROWS_AS(embedding::embed_diffraction_coefficient(0.2, 0.5, p, ra),
                  NotImplemented);
}

}  // TEST_SUITE
