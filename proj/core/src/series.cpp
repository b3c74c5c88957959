#include "wedge/series.hpp"

#include <cmath>

#include "wedge/quad.hpp"
#include "wedge/specfun.hpp"

namespace wedge::series {

namespace {
const complex I{0.0, 1.0};

complex minus_i_pow(double e) { return std::exp(-I * (0.5 * pi) * e); }
}  // namespace

complex phi_series(const PolarPoint& pt, const WedgeProblem& prob,
                   const SeriesSpec& spec) {
  const double d = prob.delta();
  const double kr = prob.k * pt.r;
  const bool neumann = (prob.bc == Bc::Neumann);

  complex sum = neumann ? complex(2.0 * d, 0.0) *
                              (kr > 0.0 ? specfun::bessel_j(0.0, kr) : 1.0)
                        : complex(0.0, 0.0);
  if (kr <= 0.0) return sum;

  int tiny_streak = 0;
  for (int n = 1; n <= spec.n_terms; ++n) {
    const double nd = n * d;
    const double j = specfun::bessel_j(nd, kr);
    if (std::abs(j) < spec.underflow_cutoff) {
      if (++tiny_streak >= 3) break;
      continue;
    }
    tiny_streak = 0;
    const double ca = std::cos((pt.theta - prob.theta_i) * nd);
    const double cb = std::cos((pt.theta - 2.0 * prob.theta_w + prob.theta_i) * nd);
    const double ang = neumann ? (ca + cb) : (ca - cb);
    sum += 2.0 * d * minus_i_pow(nd) * j * ang;
  }
  return sum;
}

complex phi_line_source_series(const PolarPoint& pt, const WedgeProblem& prob,
                               const LineSource& src, const SeriesSpec& spec) {
  const double d = prob.delta();
  const double r_lt = std::min(pt.r, src.r_i);
  const double r_gt = std::max(pt.r, src.r_i);
  const bool neumann = (prob.bc == Bc::Neumann);

  complex sum{0.0, 0.0};
  const int n0 = neumann ? 0 : 1;
  for (int n = n0; n <= spec.n_terms; ++n) {
    const double nd = n * d;
    double j;
    complex h;
    if (n == 0) {
      j = (r_lt > 0.0) ? specfun::bessel_j(0.0, prob.k * r_lt) : 1.0;
      h = specfun::hankel1(0.0, prob.k * r_gt);
    } else {
      j = specfun::bessel_j(nd, prob.k * r_lt);
      // J underflows well before the matching Hankel factor overflows;
      // stop here to keep the product representable.
      if (std::abs(j) < spec.underflow_cutoff) break;
      h = specfun::hankel1(nd, prob.k * r_gt);
    }
    if (neumann) {
      const double eps_n = (n == 0) ? 0.5 : 1.0;
      sum += -I * eps_n * d * src.amplitude *
             std::cos((prob.theta_w - src.theta_i) * nd) *
             std::cos((pt.theta - prob.theta_w) * nd) * j * h;
    } else {
      sum += I * d * src.amplitude *
             std::sin((prob.theta_w - src.theta_i) * nd) *
             std::sin((pt.theta - prob.theta_w) * nd) * j * h;
    }
  }
  return sum;
}

std::vector<complex> plane_wave_limit_check(
    const WedgeProblem& prob, int n, const std::vector<double>& r_i_list) {
  const double d = prob.delta();
  const double nd = n * d;
  std::vector<complex> out;
  out.reserve(r_i_list.size());
  for (double r_i : r_i_list) {
    const complex amp = std::sqrt(8.0 * pi * prob.k * r_i) *
                        std::exp(-I * prob.k * r_i + 0.75 * pi * I);
    complex a_n;
    if (prob.bc == Bc::Dirichlet) {
      a_n = I * d * amp * std::sin((prob.theta_w - prob.theta_i) * nd);
    } else {
      const double eps_n = (n == 0) ? 0.5 : 1.0;
      a_n = -I * eps_n * d * amp *
            std::cos((prob.theta_w - prob.theta_i) * nd);
    }
    out.push_back(a_n * specfun::hankel1(nd, prob.k * r_i));
  }
  return out;
}

complex kl_boundary_data(complex nu, const WedgeProblem& prob, Face face) {
  const complex spn = std::sin(pi * nu);
  if (std::abs(spn) < 1e-12 || std::abs(nu) < 1e-12)
    throw DomainError("kl_boundary_data: nu too close to an integer");
  const double fsign = (face == Face::Top) ? 1.0 : -1.0;
  const double beta = prob.theta_w - fsign * prob.theta_i;  // theta_w -+ theta_i
  const complex phase = std::exp(-I * (0.5 * pi) * (1.0 + nu));  // (-i)^(1+nu)
  if (prob.bc == Bc::Dirichlet)
    return 2.0 * phase * std::cos((beta - pi) * nu) / (nu * spn);
  return -fsign * 2.0 * phase * std::sin((beta - pi) * nu) / spn;
}

complex kl_psi(complex nu, double theta, const WedgeProblem& prob) {
  const complex den = std::sin(2.0 * prob.theta_w * nu);
  if (std::abs(den) < 1e-12)
    throw DomainError("kl_psi: nu too close to an angular eigenvalue");
  const complex top = kl_boundary_data(nu, prob, Face::Top);
  const complex bottom = kl_boundary_data(nu, prob, Face::Bottom);
  if (prob.bc == Bc::Dirichlet)
    return (bottom * std::sin((prob.theta_w - theta) * nu) +
            top * std::sin((prob.theta_w + theta) * nu)) /
           den;
  return (bottom * std::cos((prob.theta_w - theta) * nu) -
          top * std::cos((prob.theta_w + theta) * nu)) /
         (nu * den);
}

complex kl_inverse_numeric(const PolarPoint& pt, const WedgeProblem& prob,
                           double eps, double t_max) {
  if (!(pt.r > 0.0 && eps > 0.0))
    throw DomainError("kl_inverse_numeric: need r > 0 and eps > 0");
  const double kr = prob.k * pt.r;

  // nu = i t; the symmetrized integrand is regular at t = 0 (the simple pole
  // parts of g(nu) and g(-nu) cancel, implementing the principal value).
  auto g = [&](complex nu) -> complex {
    return std::exp(eps * nu * nu) * nu *
           specfun::bessel_j_complex_order(nu, kr) * kl_psi(nu, pt.theta, prob);
  };
  auto integrand = [&](double t) -> complex {
    const complex nu{0.0, t};
    return g(nu) + g(-nu);
  };

  std::vector<double> breaks;
  const int panels = std::max(40, int(t_max * 2));
  for (int i = 0; i <= panels; ++i) {
    double f = double(i) / panels;
    breaks.push_back(1e-6 + (t_max - 1e-6) * f);
  }
  complex integral = quad::gl_panels(integrand, breaks, 12);
  complex scattered = 0.5 * I * integral;

  const complex phi_inc =
      std::exp(-I * kr * std::cos(pt.theta - prob.theta_i));
  return phi_inc + scattered;
}

}  // namespace wedge::series
