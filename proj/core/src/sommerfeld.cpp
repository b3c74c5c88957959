#include "wedge/sommerfeld.hpp"

#include <algorithm>
#include <cmath>

#include "wedge/core.hpp"
#include "wedge/quad.hpp"
#include "wedge/specfun.hpp"

namespace wedge::sommerfeld {

namespace {

const complex I{0.0, 1.0};

// Truncation point: kr * sin(tau) * tan(tau) = 40 (integrand < 1e-17 beyond).
double truncation_tau(double kr) {
  const double target = 40.0 / kr;
  double lo = 0.0, hi = 0.5 * pi - 1e-9;
  if (std::sin(hi) * std::tan(hi) < target) return hi;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (std::sin(mid) * std::tan(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Minimum distance from the contour anchors theta +- pi to a pole of s.
double pole_contour_distance(double theta, const WedgeProblem& prob) {
  const double period = 4.0 * prob.theta_w;
  const double bases[2] = {prob.theta_i, 2.0 * prob.theta_w - prob.theta_i};
  double d = 1e300;
  for (double anchor : {theta + pi, theta - pi}) {
    for (double base : bases) {
      double off = std::remainder(anchor - base, period);
      off = std::min(std::abs(off), std::abs(period - std::abs(off)));
      d = std::min(d, off);
    }
  }
  return d;
}

complex sdc_integral(const PolarPoint& pt, const WedgeProblem& prob,
                     int nodes_per_panel, bool refine_center) {
  const double kr = prob.k * pt.r;
  const double tau_c = truncation_tau(kr);

  auto integrand = [&](double tau) -> complex {
    const double g = specfun::gudermann_gamma(tau);
    const complex zeta = complex(tau, g);
    const complex bracket =
        core::spectral_s(pt.theta + pi + zeta, prob) -
        core::spectral_s(pt.theta - pi + zeta, prob);
    return std::exp(-kr * std::sin(tau) * std::tan(tau)) * bracket *
           (1.0 - I / std::cos(tau));
  };

  static const double frac[] = {0.12, 0.3, 0.55, 0.8, 1.0};
  std::vector<double> breaks{0.0};
  for (double f : frac) breaks.push_back(f * tau_c);
  if (refine_center) {
    // Subdivide the innermost panel where the contour passes nearest a pole.
    std::vector<double> fine;
    for (int j = 1; j <= 8; ++j) fine.push_back(breaks[1] * j / 8.0);
    breaks.erase(breaks.begin() + 1);
    breaks.insert(breaks.begin() + 1, fine.begin(), fine.end());
  }
  std::vector<double> all;
  for (auto it = breaks.rbegin(); it != breaks.rend(); ++it)
    all.push_back(-*it);
  all.insert(all.end(), breaks.begin() + 1, breaks.end());

  complex integral = quad::gl_panels(integrand, all, nodes_per_panel);
  return std::exp(I * kr) / (2.0 * pi * I) * integral;
}

}  // namespace

complex phi_diff_sdc(const PolarPoint& pt, const WedgeProblem& prob,
                     const QuadratureSpec& q, double* est_error) {
  if (!(pt.r > 0.0)) throw DomainError("phi_diff_sdc: r must be positive");
  const double kr = prob.k * pt.r;

  if (kr < 0.1) {
    // The saddle-path integrand barely decays; use the loop contours.
    complex total = phi_gamma_plus_direct(pt, prob, q);
    complex go = core::go_field(pt, prob);
    if (est_error) *est_error = 1e-6;
    return total - go;
  }

  const bool refine =
      pole_contour_distance(pt.theta, prob) < q.pole_distance_threshold;
  int n = std::max(12, q.base_nodes / 10);
  complex prev = sdc_integral(pt, prob, n, refine);
  for (int attempt = 0; attempt < 3; ++attempt) {
    n *= 2;
    complex cur = sdc_integral(pt, prob, n, refine);
    double est = std::abs(cur - prev);
    if (est < 1e-8 || attempt == 2) {
      if (est >= 1e-8)
        throw QuadratureNotConverged("phi_diff_sdc: node doubling stalled");
      if (est_error) *est_error = est;
      return cur;
    }
    prev = cur;
  }
  return prev;  // unreachable
}

FieldResult phi_total(const PolarPoint& pt, const WedgeProblem& prob,
                      const QuadratureSpec& q) {
  FieldResult out;
  out.method = "sdc";
  out.go = core::go_field(pt, prob);
  out.diffracted = phi_diff_sdc(pt, prob, q, &out.est_error);
  out.total = out.go + out.diffracted;
  return out;
}

complex phi_gamma_plus_direct(const PolarPoint& pt, const WedgeProblem& prob,
                              const QuadratureSpec& q) {
  (void)q;
  if (!(pt.r > 0.0))
    throw DomainError("phi_gamma_plus_direct: r must be positive");
  const double kr = prob.k * pt.r;
  if (kr > 25.0)
    throw DomainError("phi_gamma_plus_direct: diagnostic contour needs kr <= 25");

  const double h = 0.5;
  const double y_max = std::asinh(40.0 / kr);

  auto f = [&](complex z) -> complex {
    return std::exp(-I * kr * std::cos(z)) *
           core::spectral_s(pt.theta + z, prob);
  };

  // Integrate f along the straight segment [za, zb].
  auto leg = [&](complex za, complex zb, int panels, int nodes) -> complex {
    complex dir = zb - za;
    auto g = [&](double t) { return f(za + t * dir) * dir; };
    std::vector<double> breaks;
    for (int i = 0; i <= panels; ++i) breaks.push_back(double(i) / panels);
    return quad::gl_panels(g, breaks, nodes);
  };

  const int hp = 48, hn = 16;  // horizontal: oscillatory
  const int vp = 24, vn = 12;  // vertical: decaying

  // Upper loop, traversed so the horizontal run goes right to left.
  complex upper = leg({0.5 * pi, y_max}, {0.5 * pi, h}, vp, vn) +
                  leg({0.5 * pi, h}, {-1.5 * pi, h}, hp, hn) +
                  leg({-1.5 * pi, h}, {-1.5 * pi, y_max}, vp, vn);
  // Lower loop, point reflection of the upper one.
  complex lower = leg({-0.5 * pi, -y_max}, {-0.5 * pi, -h}, vp, vn) +
                  leg({-0.5 * pi, -h}, {1.5 * pi, -h}, hp, hn) +
                  leg({1.5 * pi, -h}, {1.5 * pi, -y_max}, vp, vn);

  return (upper + lower) / (2.0 * pi * I);
}

complex phi_f(double r, double lambda, double k) {
  if (r < 0.0) throw DomainError("phi_f: r must be non-negative");
  const complex c = std::exp(-I * pi / 4.0) / std::sqrt(pi);
  const double arg = std::sqrt(2.0 * k * r) * std::cos(0.5 * lambda);
  return std::exp(-I * k * r * std::cos(lambda)) *
         (0.5 + c * specfun::fresnel_f(arg));
}

complex phi_halfplane_fresnel(const PolarPoint& pt, const WedgeProblem& prob) {
  if (std::abs(prob.theta_w - pi) > 1e-12)
    throw DomainError("phi_halfplane_fresnel: requires theta_w = pi");
  const double kr = prob.k * pt.r;
  const complex c = std::exp(-I * pi / 4.0) / std::sqrt(pi);
  const double s = std::sqrt(2.0 * kr);
  const complex phi_i = std::exp(-I * kr * std::cos(pt.theta - prob.theta_i));
  const complex phi_r = std::exp(-I * kr * std::cos(pt.theta + prob.theta_i));
  const complex bi =
      0.5 + c * specfun::fresnel_f(s * std::cos(0.5 * (pt.theta - prob.theta_i)));
  const complex br =
      0.5 - c * specfun::fresnel_f(s * std::cos(0.5 * (pt.theta + prob.theta_i)));
  const double sign = (prob.bc == Bc::Dirichlet) ? -1.0 : 1.0;
  return phi_i * bi + sign * phi_r * br;
}

}  // namespace wedge::sommerfeld
