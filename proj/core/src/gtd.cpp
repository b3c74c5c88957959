#include "wedge/gtd.hpp"

#include <cmath>

#include "wedge/core.hpp"
#include "wedge/specfun.hpp"

namespace wedge::gtd {

namespace {

const complex I{0.0, 1.0};

// Fresnel transition factor Q(x) = 1/2 + pi^{-1/2} e^{-i pi/4} F(x);
// Q(+inf) = 1, Q(-inf) = 0.
complex q_factor(double x) {
  return 0.5 + std::exp(-I * pi / 4.0) / std::sqrt(pi) * specfun::fresnel_f(x);
}

complex s_bracket(double theta, const WedgeProblem& prob) {
  return core::spectral_s(complex(theta - pi), prob) -
         core::spectral_s(complex(theta + pi), prob);
}

}  // namespace

UtdRegime utd_regime(const WedgeProblem& prob) {
  const double gap = prob.theta_i - (pi - prob.theta_w);
  if (std::abs(gap) < 1e-9)
    throw RegimeBoundary("utd_regime: theta_i at pi - theta_w");
  return gap < 0.0 ? UtdRegime::TwoReflections : UtdRegime::OneReflection;
}

complex diffraction_coefficient(double theta, double theta_i,
                                const WedgeProblem& prob) {
  WedgeProblem p(prob.theta_w, theta_i, prob.k, prob.bc);
  try {
    return std::exp(I * pi / 4.0) / std::sqrt(2.0 * pi) * s_bracket(theta, p);
  } catch (const PoleProximity&) {
    throw SingularDirection("diffraction_coefficient: shadow boundary");
  }
}

complex phi_gtd(const PolarPoint& pt, const WedgeProblem& prob) {
  for (double dth : core::go_discontinuities(prob))
    if (std::abs(pt.theta - dth) < 1e-6)
      throw SingularDirection("phi_gtd: theta on a GO discontinuity");
  const double kr = prob.k * pt.r;
  const complex cyl =
      std::exp(I * (kr + 0.25 * pi)) / std::sqrt(2.0 * pi * kr);
  return core::go_field(pt, prob) + cyl * s_bracket(pt.theta, prob);
}

complex phi_utd(const PolarPoint& pt, const WedgeProblem& prob) {
  if (!(prob.theta_w > 0.5 * pi))
    throw DomainError("phi_utd: requires theta_w > pi/2");
  const UtdRegime regime = utd_regime(prob);

  const double kr = prob.k * pt.r;
  const double th = pt.theta, ti = prob.theta_i, tw = prob.theta_w;
  const double sgn = (prob.bc == Bc::Dirichlet) ? -1.0 : 1.0;
  const double root = std::sqrt(2.0 * kr);
  const complex cyl =
      std::exp(I * (kr + 0.25 * pi)) / std::sqrt(2.0 * pi * kr);

  // Half-angles entering both the Fresnel arguments and the secant
  // corrections that cancel the poles of the spectral bracket.
  const double h0 = 0.5 * (th - ti);
  const double h1 = 0.5 * (th + ti - 2.0 * tw);
  const double h2 = 0.5 * (th + ti + 2.0 * tw);

  auto bracket = [&](double theta) -> complex {
    complex b = s_bracket(theta, prob);
    if (regime == UtdRegime::TwoReflections) {
      b += sgn * 0.5 / std::cos(0.5 * (theta + ti) - tw);
      b += sgn * 0.5 / std::cos(0.5 * (theta + ti) + tw);
    } else {
      b += 0.5 / std::cos(0.5 * (theta - ti));
      b += sgn * 0.5 / std::cos(0.5 * (theta + ti) - tw);
    }
    return b;
  };

  // The bracket is a difference of simple poles with a removable limit, so
  // it is analytic across each singular direction, but evaluating the
  // pole/secant cancellation directly loses ~1e-16/gap^2 of absolute
  // accuracy. Near a singular direction theta*, interpolate linearly from
  // two clean evaluations straddling theta*: rounding noise there is ~1e-8
  // and the O(H^2) curvature bias ~1e-7.
  complex b;
  const double singular_gap =
      std::min({std::abs(std::cos(h0)), std::abs(std::cos(h1)),
                std::abs(std::cos(h2))});
  bool near_singular = singular_gap < 5e-5;
  if (!near_singular) {
    try {
      b = bracket(th);
    } catch (const PoleProximity&) {
      near_singular = true;
    }
  }
  if (near_singular) {
    // Nearest zero of cos(h_j(theta)) over the three half-angles; each is
    // h_j = theta/2 + c_j, so theta* = theta + 2*(nearest zero - h_j).
    double theta_star = th, best = 1e300;
    for (double hj : {h0, h1, h2}) {
      const double zero = std::round((hj - 0.5 * pi) / pi) * pi + 0.5 * pi;
      const double cand = th + 2.0 * (zero - hj);
      if (std::abs(cand - th) < best) {
        best = std::abs(cand - th);
        theta_star = cand;
      }
    }
    const double H = 2e-4;
    const complex bp = bracket(theta_star + H);
    const complex bm = bracket(theta_star - H);
    b = 0.5 * (bp + bm) + (th - theta_star) * (bp - bm) / (2.0 * H);
  }

  const complex phi_i = std::exp(-I * kr * std::cos(th - ti));
  const complex phi_r1 = std::exp(-I * kr * std::cos(th - 2.0 * tw + ti));

  if (regime == UtdRegime::TwoReflections) {
    const complex phi_r2 = std::exp(-I * kr * std::cos(th + 2.0 * tw + ti));
    return phi_i + sgn * phi_r1 * q_factor(root * std::cos(h1)) +
           sgn * phi_r2 * q_factor(root * std::cos(h2)) + cyl * b;
  }
  return phi_i * q_factor(root * std::cos(h0)) +
         sgn * phi_r1 * q_factor(root * std::cos(h1)) + cyl * b;
}

}  // namespace wedge::gtd
