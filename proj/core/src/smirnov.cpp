#include "wedge/smirnov.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "wedge/core.hpp"
#include "wedge/quad.hpp"

namespace wedge::smirnov {

namespace {

const complex I{0.0, 1.0};

void check_restriction(const WedgeProblem& prob) {
  if (!(prob.theta_i > pi - prob.theta_w &&
        prob.theta_i < prob.theta_w - 0.5 * pi))
    throw DomainError(
        "smirnov: requires pi - theta_w < theta_i < theta_w - pi/2");
}

// Logarithm with the branch cut along the positive real axis (arg in [0, 2pi)).
complex log_cut_positive(complex w) {
  double a = std::arg(w);
  if (a < 0.0) a += 2.0 * pi;
  return {std::log(std::abs(w)), a};
}

}  // namespace

RhData make_rh_data(const WedgeProblem& prob) {
  check_restriction(prob);
  const double d = prob.delta();
  return {std::exp(I * (0.5 * pi - d * (pi - prob.theta_i))),
          std::exp(I * (1.5 * pi - d * (pi + prob.theta_i)))};
}

complex z_map(const TimePoint& tp) {
  if (!(tp.c > 0.0)) throw DomainError("z_map: wave speed must be positive");
  if (tp.r < 0.0) throw DomainError("z_map: r must be non-negative");
  const double ct = tp.c * tp.t;
  if (tp.r > ct) throw OutsideDisc("z_map: point outside the diffraction disc");
  if (tp.r == 0.0) return {0.0, 0.0};
  const double s = tp.r / ct;  // in (0, 1]
  const double radial = s / (1.0 + std::sqrt(std::max(0.0, 1.0 - s * s)));
  return radial * std::exp(I * tp.theta);
}

complex v_tilde(complex xi, const WedgeProblem& prob) {
  const RhData rh = make_rh_data(prob);
  const complex la = log_cut_positive((std::conj(rh.b) - xi) / (rh.a - xi));
  const complex lb = log_cut_positive((std::conj(rh.a) - xi) / (rh.b - xi));
  if (prob.bc == Bc::Dirichlet) return (la - lb) / (pi * I);
  return (la + lb) / (pi * I) - 2.0 * prob.delta();
}

double u_time(const TimePoint& tp, const WedgeProblem& prob) {
  check_restriction(prob);
  const double ct = tp.c * tp.t;
  if (tp.r > ct) {
    // Outside the disc: superposition of GO step waves in their windows.
    double u = 0.0;
    for (const GoTerm& term : core::go_poles_in_window(tp.theta, prob)) {
      const double arg =
          tp.t + (tp.r / tp.c) * std::cos(term.pole_angle - tp.theta);
      if (arg > 0.0)
        u += term.residue;
      else if (arg == 0.0)
        u += 0.5 * term.residue;
    }
    return u;
  }
  const complex z = z_map(tp);
  const complex xi =
      (z == complex(0.0, 0.0))
          ? complex(0.0, 0.0)
          : std::exp(I * (0.5 * pi)) * std::exp(prob.delta() * std::log(z));
  return v_tilde(xi, prob).real();
}

namespace {

complex phi_fixed_damping(const PolarPoint& pt, const WedgeProblem& prob,
                          double c, double eps) {
  const double omega0 = c * prob.k;
  const complex omega{omega0, eps};
  const double t_d = pt.r / c;
  const double t_end = 14.0 / eps;

  // Geometrical-optics steps before the disc arrives: piecewise constant,
  // integrated in closed form over each constancy interval.
  std::vector<std::pair<double, int>> jumps;
  for (const GoTerm& term : core::go_poles_in_window(pt.theta, prob))
    jumps.push_back({-(pt.r / c) * std::cos(term.pole_angle - pt.theta),
                     term.residue});
  std::sort(jumps.begin(), jumps.end());

  complex result{0.0, 0.0};
  double level = 0.0;
  for (std::size_t j = 0; j < jumps.size(); ++j) {
    level += jumps[j].second;
    const double lo = jumps[j].first;
    const double hi = (j + 1 < jumps.size()) ? jumps[j + 1].first : t_d;
    result -= level * (std::exp(I * omega * hi) - std::exp(I * omega * lo));
  }

  // Disc interior: -int_{t_d}^{T} u(t) d/dt e^{i omega t} dt. The first
  // stretch uses t = t_d + s^2 to absorb the square-root front behavior.
  auto integrand_t = [&](double t) -> complex {
    const double u = u_time({pt.r, pt.theta, t, c}, prob);
    return -u * I * omega * std::exp(I * omega * t);
  };

  const double front_len = std::min(1.0 / omega0, 0.5 * (t_end - t_d));
  auto integrand_s = [&](double s) -> complex {
    return integrand_t(t_d + s * s) * 2.0 * s;
  };
  result += quad::gl_integrate(integrand_s, 0.0, std::sqrt(front_len), 24);

  const double period = 2.0 * pi / omega0;
  std::vector<double> breaks;
  const double start = t_d + front_len;
  const int n_panels =
      std::max(8, int(std::ceil((t_end - start) / (0.5 * period))));
  for (int i = 0; i <= n_panels; ++i)
    breaks.push_back(start + (t_end - start) * double(i) / n_panels);
  result += quad::gl_panels(integrand_t, breaks, 16);

  // Tail: u -> Re v_tilde(0) as t -> inf.
  const double u_inf = v_tilde({0.0, 0.0}, prob).real();
  result += u_inf * std::exp(I * omega * t_end);
  return result;
}

}  // namespace

complex phi_from_time(const PolarPoint& pt, const WedgeProblem& prob,
                      double c, double eps_damping) {
  check_restriction(prob);
  if (!(pt.r > 0.0)) throw DomainError("phi_from_time: r must be positive");
  const double eps = (eps_damping > 0.0) ? eps_damping : 0.02 * c * prob.k;
  const complex coarse = phi_fixed_damping(pt, prob, c, eps);
  const complex fine = phi_fixed_damping(pt, prob, c, 0.5 * eps);
  return 2.0 * fine - coarse;  // Richardson step in the damping
}

}  // namespace wedge::smirnov
