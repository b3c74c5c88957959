#include "wedge/core.hpp"

#include <algorithm>
#include <cmath>

namespace wedge::core {

namespace {
const complex I{0.0, 1.0};
}

complex spectral_s(complex z, const WedgeProblem& prob, double pole_floor) {
  const double d = prob.delta();
  const complex den = std::sin(d * z) - std::sin(d * prob.theta_i);
  if (std::abs(den) < pole_floor)
    throw PoleProximity("spectral_s: z too close to a pole");
  if (prob.bc == Bc::Dirichlet) return d * std::cos(d * prob.theta_i) / den;
  return d * std::cos(d * z) / den;
}

std::vector<GoTerm> go_poles_in_window(double theta, const WedgeProblem& prob,
                                       double boundary_tol) {
  const double tw = prob.theta_w;
  const double period = 4.0 * tw;
  const double d = prob.delta();

  // Grazing incidence: the incident and reflected pole families coincide.
  // Dirichlet: the (removable) pole cancels and the field vanishes.
  // Neumann: a double pole cannot be represented as simple GO terms.
  if (std::abs(std::cos(d * prob.theta_i)) < 1e-14) {
    if (prob.bc == Bc::Dirichlet) return {};
    throw DomainError("go_poles_in_window: grazing incidence (Neumann)");
  }

  struct Family {
    double base;
    int residue;
  };
  const int refl = (prob.bc == Bc::Dirichlet) ? -1 : +1;
  const Family families[2] = {{prob.theta_i, +1},
                              {2.0 * tw - prob.theta_i, refl}};

  std::vector<GoTerm> terms;
  for (const Family& fam : families) {
    const int n_lo = int(std::ceil((theta - pi - fam.base) / period));
    const int n_hi = int(std::floor((theta + pi - fam.base) / period));
    for (int n = n_lo - 1; n <= n_hi + 1; ++n) {
      const double p = fam.base + period * n;
      const double off = p - theta;
      if (std::abs(off - pi) < boundary_tol || std::abs(off + pi) < boundary_tol)
        throw OnShadowBoundary("go_poles_in_window: pole on window boundary");
      if (off > -pi && off < pi) terms.push_back({fam.residue, p});
    }
  }
  return terms;
}

complex go_field(const PolarPoint& pt, const WedgeProblem& prob) {
  complex sum{0.0, 0.0};
  for (const GoTerm& t : go_poles_in_window(pt.theta, prob))
    sum += double(t.residue) *
           std::exp(-I * prob.k * pt.r * std::cos(t.pole_angle - pt.theta));
  return sum;
}

std::vector<double> go_discontinuities(const WedgeProblem& prob) {
  const double tw = prob.theta_w;
  const double c1 = prob.theta_i - pi;
  const double c2 = 2.0 * tw - prob.theta_i - pi;
  const double c3 = pi - 2.0 * tw - prob.theta_i;

  std::vector<double> out;
  auto keep = [&](double c) {
    if (c > -tw + 1e-12 && c < tw - 1e-12) out.push_back(c);
  };
  keep(c1);
  // When the two reflection boundaries coincide (theta_w = pi/2) the switch-on
  // and switch-off of the reflected pair cancel and GO stays continuous there.
  if (std::abs(c2 - c3) >= 1e-12) {
    keep(c2);
    keep(c3);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wedge::core
