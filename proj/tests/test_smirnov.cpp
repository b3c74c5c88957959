#include <cmath>
#include <complex>

#include "doctest.h"
#include "wedge/smirnov.hpp"
#include "wedge/sommerfeld.hpp"

using namespace wedge;
using C = complex;

namespace {

const WedgeProblem& prob_d() {
  static WedgeProblem p(7 * pi / 8, 0.3 * pi, 2.0, Bc::Dirichlet);
  return p;
}

const WedgeProblem& prob_n() {
  static WedgeProblem p(7 * pi / 8, 0.3 * pi, 2.0, Bc::Neumann);
  return p;
}

}  // namespace

TEST_SUITE("smirnov") {

TEST_CASE("incidence angle outside the admissible band is rejected") {
  WedgeProblem p(7 * pi / 8, 0.0, 1.0, Bc::Dirichlet);
  CHECK_THROWS_AS(smirnov::make_rh_data(p), DomainError);
  CHECK_THROWS_AS(smirnov::u_time({1.0, 0.0, 2.0, 1.0}, p), DomainError);
}

TEST_CASE("boundary-arc endpoints lie on the unit circle") {
  const auto rh = smirnov::make_rh_data(prob_d());
  CHECK(std::abs(rh.a) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(rh.b) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("self-similar map: domain checks and a hand value") {
  CHECK_THROWS_AS(smirnov::z_map({2.0, 0.0, 1.0, 1.0}), OutsideDisc);
  CHECK_THROWS_AS(smirnov::z_map({1.0, 0.0, 1.0, -1.0}), DomainError);
  CHECK(smirnov::z_map({0.0, 0.3, 1.0, 1.0}) == C(0.0, 0.0));
  // r/(ct) = 1/sqrt(2) maps to tan(pi/8) = sqrt(2) - 1 on the real axis.
  const C z = smirnov::z_map({1.0, 0.0, std::sqrt(2.0), 1.0});
  CHECK(z.real() == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));
  CHECK(z.imag() == 0.0);
}

TEST_CASE("disc solution attains its prescribed boundary values") {
  const auto rh = smirnov::make_rh_data(prob_d());
  double aa = std::arg(rh.a), ab = std::arg(rh.b);
  if (ab < aa) ab += 2.0 * pi;
  const C mid = std::exp(C(0, 1) * (0.5 * (aa + ab)));
  CHECK(smirnov::v_tilde(mid, prob_d()).real() ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(smirnov::v_tilde(C(0.37, 0.0), prob_d()).real()) < 1e-12);
  CHECK(smirnov::v_tilde(C(-1.0, 1e-12), prob_n()).real() ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("step-wave solution: causality, lit value, face condition") {
  // Nothing has arrived yet at a far point and early time.
  CHECK(smirnov::u_time({5.0, -0.86 * pi, 1.0, 1.0}, prob_d()) == 0.0);
  // Only the incident step has arrived.
  CHECK(smirnov::u_time({1.0, 0.0, 0.5, 1.0}, prob_d()) == 1.0);
  // Dirichlet face value vanishes inside the diffraction disc.
  CHECK(std::abs(smirnov::u_time({0.5, 7 * pi / 8, 3.0, 1.0}, prob_d())) <
        1e-13);
}

TEST_CASE("step-wave solution is self-similar in r/(ct)") {
  const double u1 = smirnov::u_time({0.5, 0.3, 2.0, 1.0}, prob_d());
  const double u2 = smirnov::u_time({1.5, 0.3, 6.0, 1.0}, prob_d());
  const double u3 = smirnov::u_time({0.5, 0.3, 1.0, 2.0}, prob_d());
  CHECK(u1 == u2);
  CHECK(u1 == u3);
}

TEST_CASE("long-time limit approaches the disc-center value") {
  const double u_inf = smirnov::v_tilde(C(0.0, 0.0), prob_d()).real();
  const double u = smirnov::u_time({1.0, 0.3, 1e6, 1.0}, prob_d());
  CHECK(std::abs(u - u_inf) < 1e-3);
}

TEST_CASE("disc rim joins the exterior step field continuously") {
  // The self-similar map has a square-root degeneracy at the rim, so the
  // interior limit is read off by extrapolation in sqrt(1 - r/(ct)).
  const double ct = 3.0;
  for (double th : {0.0, 0.7, -0.7, 2.0, -2.0}) {
    auto inner = [&](double e) {
      return smirnov::u_time({ct * (1.0 - e), th, ct, 1.0}, prob_d());
    };
    const double limit = 2.0 * inner(1e-6) - inner(4e-6);
    const double outer = smirnov::u_time({ct * (1.0 + 1e-12), th, ct, 1.0},
                                         prob_d());
    CHECK(std::abs(limit - outer) < 5e-3);
  }
}

TEST_CASE("step-wave solution satisfies the wave equation inside the disc") {
  const double r = 1.0, th = 0.25, t = 2.5, c = 1.0, h = 1e-3;
  auto u = [&](double rr, double tt, double tm) {
    return smirnov::u_time({rr, tt, tm, c}, prob_d());
  };
  const double u0 = u(r, th, t);
  const double utt = (u(r, th, t + h) - 2 * u0 + u(r, th, t - h)) / (h * h);
  const double urr = (u(r + h, th, t) - 2 * u0 + u(r - h, th, t)) / (h * h);
  const double ur = (u(r + h, th, t) - u(r - h, th, t)) / (2 * h);
  const double uqq = (u(r, th + h, t) - 2 * u0 + u(r, th - h, t)) / (h * h);
  const double resid = utt - c * c * (urr + ur / r + uqq / (r * r));
  const double scale =
      std::abs(utt) + std::abs(urr) + std::abs(uqq / (r * r)) + 1.0;
  CHECK(std::abs(resid) / scale < 1e-2);
}

TEST_CASE("frequency synthesis of the step solution matches the exact field") {
  for (const WedgeProblem* p : {&prob_d(), &prob_n()})
    for (double th : {0.0, 0.8, -1.0}) {
      const C from_time = smirnov::phi_from_time({1.0, th}, *p);
      const C exact = sommerfeld::phi_total({1.0, th}, *p).total;
      CHECK(std::abs(from_time - exact) < 5e-3);
    }
}

TEST_CASE("frequency synthesis rejects r = 0") {
  CHECK_THROWS_AS(smirnov::phi_from_time({0.0, 0.0}, prob_d()), DomainError);
}

}  // TEST_SUITE
