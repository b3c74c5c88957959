#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "wedge/core.hpp"
#include "wedge/gtd.hpp"
#include "wedge/series.hpp"
#include "wedge/sommerfeld.hpp"

using namespace wedge;
using C = complex;

namespace {

double max_err_on_sweep(const WedgeProblem& prob, double kr,
                        C (*approx)(const PolarPoint&, const WedgeProblem&),
                        double margin) {
  WedgeProblem p(prob.theta_w, prob.theta_i, kr, prob.bc);
  const auto disc = core::go_discontinuities(p);
  double worst = 0.0;
  for (int j = 0; j < 121; ++j) {
    const double th = -p.theta_w + (j + 0.5) * (2.0 * p.theta_w / 121);
    bool near = false;
    for (double d : disc)
      if (std::abs(th - d) < margin) near = true;
    if (near) continue;
    const double e =
        std::abs(approx({1.0, th}, p) - series::phi_series({1.0, th}, p));
    worst = std::max(worst, e);
  }
  return worst;
}

}  // namespace

TEST_SUITE("gtd") {

TEST_CASE("uniform-approximation regime selection and boundary rejection") {
  CHECK(gtd::utd_regime(WedgeProblem(7 * pi / 8, 0.0, 1.0, Bc::Dirichlet)) ==
        gtd::UtdRegime::TwoReflections);
  CHECK(gtd::utd_regime(WedgeProblem(7 * pi / 8, 0.5, 1.0, Bc::Dirichlet)) ==
        gtd::UtdRegime::OneReflection);
  CHECK_THROWS_AS(
      gtd::utd_regime(WedgeProblem(7 * pi / 8, pi - 7 * pi / 8, 1.0,
                                   Bc::Dirichlet)),
      RegimeBoundary);
}

TEST_CASE("diffraction coefficient is reciprocal in the two angles") {
  WedgeProblem p(7 * pi / 8, 0.1, 1.0, Bc::Dirichlet);
  const C a = gtd::diffraction_coefficient(0.3, 0.1, p);
  const C b = gtd::diffraction_coefficient(0.1, 0.3, p);
  CHECK(std::abs(a - b) < 1e-12);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 0.7);
  for (int i = 0; i < 50; ++i) {
    const double x = u(rng), y = u(rng);
    const C f = gtd::diffraction_coefficient(x, y, p);
    const C g = gtd::diffraction_coefficient(y, x, p);
    CHECK(std::abs(f - g) < 1e-12 * std::max(1.0, std::abs(f)));
  }
}

TEST_CASE("flat boundary has a vanishing diffraction coefficient") {
  WedgeProblem p(pi / 2, 0.2, 1.0, Bc::Dirichlet);
  for (double th : {-0.8, 0.0, 0.9})
    CHECK(std::abs(gtd::diffraction_coefficient(th, 0.2, p)) < 1e-13);
}

TEST_CASE("ray approximation error decreases with distance") {
  const double th = 0.0;
  WedgeProblem p5(7 * pi / 8, 0.0, 5.0, Bc::Dirichlet);
  WedgeProblem p25(7 * pi / 8, 0.0, 25.0, Bc::Dirichlet);
  const double e5 =
      std::abs(gtd::phi_gtd({1.0, th}, p5) - series::phi_series({1.0, th}, p5));
  const double e25 = std::abs(gtd::phi_gtd({1.0, th}, p25) -
                              series::phi_series({1.0, th}, p25));
  CHECK(e25 < e5);
}

TEST_CASE("ray approximation satisfies the Dirichlet face condition") {
  WedgeProblem p(7 * pi / 8, 0.3, 5.0, Bc::Dirichlet);
  CHECK(std::abs(gtd::phi_gtd({1.0, p.theta_w}, p)) < 1e-12);
  CHECK(std::abs(gtd::phi_gtd({1.0, -p.theta_w}, p)) < 1e-12);
}

TEST_CASE("ray approximation is pure geometrical optics on the flat boundary") {
  WedgeProblem p(pi / 2, 0.2, 3.0, Bc::Dirichlet);
  CHECK(std::abs(gtd::phi_gtd({1.0, 0.4}, p) - core::go_field({1.0, 0.4}, p)) <
        1e-13);
}

TEST_CASE("ray approximation refuses singular directions") {
  WedgeProblem p(7 * pi / 8, 0.0, 5.0, Bc::Dirichlet);
  CHECK_THROWS_AS(gtd::phi_gtd({1.0, 3 * pi / 4}, p), SingularDirection);
}

TEST_CASE("uniform approximation is continuous across a shadow boundary") {
  // Two-sided slopes are genuine; the Richardson-extrapolated jump across the
  // reflection boundary theta = 2 theta_w - theta_i - pi must vanish.
  WedgeProblem p(7 * pi / 8, 0.0, 5.0, Bc::Dirichlet);
  const double b = 2.0 * p.theta_w - p.theta_i - pi;
  auto two_sided = [&](double h) {
    return gtd::phi_utd({1.0, b + h}, p) - gtd::phi_utd({1.0, b - h}, p);
  };
  const C jump = (10.0 * two_sided(1e-6) - two_sided(1e-5)) / 9.0;
  CHECK(std::abs(jump) < 1e-6);
}

TEST_CASE("uniform approximation is finite at the shadow boundaries themselves") {
  WedgeProblem p(7 * pi / 8, 0.0, 5.0, Bc::Dirichlet);
  for (double d : core::go_discontinuities(p)) {
    const C v = gtd::phi_utd({1.0, d}, p);
    CHECK(std::isfinite(v.real()));
    CHECK(std::isfinite(v.imag()));
    CHECK(std::abs(v) < 10.0);
  }
}

TEST_CASE("uniform approximation tracks the series for a near-flat wedge") {
  // Nearly-flat wedge with grazing geometry: theta_w = 35 pi/36, kr = 10 pi,
  // incidence theta_w - pi/2.
  const double tw = 35.0 * pi / 36.0;
  WedgeProblem p(tw, tw - pi / 2, 10.0 * pi, Bc::Dirichlet);
  series::SeriesSpec spec;
  spec.n_terms = 100;
  double worst = 0.0;
  for (int j = 0; j < 181; ++j) {
    const double th = -tw + (j + 0.5) * (2.0 * tw / 181);
    worst = std::max(worst, std::abs(gtd::phi_utd({1.0, th}, p) -
                                     series::phi_series({1.0, th}, p, spec)));
  }
  CHECK(worst < 2e-2);
}

TEST_CASE("uniform approximation boundary error decreases with distance") {
  double prev = 1e300;
  for (double kr : {1.0, 5.0, 10.0, 25.0}) {
    WedgeProblem p(7 * pi / 8, 0.0, kr, Bc::Dirichlet);
    const double err = std::abs(gtd::phi_utd({1.0, p.theta_w}, p) -
                                series::phi_series({1.0, p.theta_w}, p));
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("uniform approximation beats the plain ray ansatz at moderate range") {
  WedgeProblem base(7 * pi / 8, 0.0, 10.0, Bc::Dirichlet);
  const double gtd_err = max_err_on_sweep(base, 10.0, &gtd::phi_gtd, 0.35);
  const double utd_err = max_err_on_sweep(base, 10.0, &gtd::phi_utd, 0.35);
  CHECK(gtd_err > utd_err);
}

TEST_CASE("uniform approximation collapses to the ray ansatz far away") {
  WedgeProblem p(7 * pi / 8, 0.0, 1.0, Bc::Dirichlet);
  const double th = 0.3;
  double worst = 0.0;
  for (double kr : {50.0, 100.0, 200.0, 400.0}) {
    WedgeProblem pk(p.theta_w, p.theta_i, kr, p.bc);
    const double gap =
        std::abs(gtd::phi_utd({1.0, th}, pk) - gtd::phi_gtd({1.0, th}, pk));
    worst = std::max(worst, gap * std::pow(kr, 1.5));
  }
  CHECK(worst < 10.0);
}

TEST_CASE("diffraction coefficients agree between spectral and exact methods") {
  // Reciprocity through the spectral function: D(a, b) = D(b, a) where both
  // sides rebuild the problem at the swapped incidence.
  WedgeProblem p(7 * pi / 8, 0.0, 1.0, Bc::Dirichlet);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.05, 0.7);
  for (int i = 0; i < 50; ++i) {
    const double a = u(rng), b = u(rng);
    const C lhs = gtd::diffraction_coefficient(a, b, p);
    const C rhs = gtd::diffraction_coefficient(b, a, p);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

}  // TEST_SUITE
