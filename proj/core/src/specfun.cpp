#include "wedge/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>

#include "wedge/quad.hpp"

namespace wedge::specfun {

namespace {
const complex I{0.0, 1.0};
constexpr double euler_gamma = 0.57721566490153286060651209008240;
}  // namespace

double bessel_j(double nu, double x) {
  if (nu < 0.0) throw DomainError("bessel_j: order must be non-negative");
  if (!(x > 0.0)) throw DomainError("bessel_j: argument must be positive");
  try {
    return boost::math::cyl_bessel_j(nu, x);
  } catch (const std::exception&) {
    // Severe underflow for nu >> x; the limit value is indistinguishable
    // from zero in double precision.
    return 0.0;
  }
}

complex hankel1(double nu, double x) {
  if (nu < 0.0) throw DomainError("hankel1: order must be non-negative");
  if (!(x > 0.0)) throw DomainError("hankel1: argument must be positive");
  double j = boost::math::cyl_bessel_j(nu, x);
  double y = boost::math::cyl_neumann(nu, x);
  return {j, y};
}

complex hankel1_0_complex(complex z, double k) {
  const complex w = k * z;
  const double aw = std::abs(w);
  if (aw == 0.0) throw DomainError("hankel1_0_complex: kz must be nonzero");
  if (w.real() < 0.0 && std::abs(w.imag()) < 1e-12)
    throw BranchCut("hankel1_0_complex: kz on the negative real axis");

  if (aw < 12.0) {
    // Ascending series: J_0 plus the logarithmic Y_0 companion.
    const complex q = -0.25 * w * w;
    complex j0{1.0, 0.0}, term{1.0, 0.0}, hsum{0.0, 0.0};
    double h = 0.0;
    for (int m = 1; m <= 60; ++m) {
      term *= q / double(m * m);
      j0 += term;
      h += 1.0 / m;
      hsum += -term * h;  // carries (-1)^{m+1} h_m (w^2/4)^m / (m!)^2
      if (std::abs(term) < 1e-18 * (std::abs(j0) + 1.0)) break;
    }
    complex y0 = (2.0 / pi) * ((std::log(0.5 * w) + euler_gamma) * j0 + hsum);
    return j0 + I * y0;
  }

  // Large-argument expansion, truncated at the smallest term.
  complex sum{1.0, 0.0}, term{1.0, 0.0};
  double prev = 1.0;
  for (int m = 1; m <= 40; ++m) {
    term *= -I * double((2 * m - 1) * (2 * m - 1)) / (8.0 * m * w);
    double mag = std::abs(term);
    if (mag > prev) break;  // divergence onset
    sum += term;
    prev = mag;
    if (mag < 1e-17 * std::abs(sum)) break;
  }
  return std::sqrt(2.0 / (pi * w)) * std::exp(I * (w - 0.25 * pi)) * sum;
}

complex fresnel_f(double v) {
  const double av = std::abs(v);
  const double sign = (v < 0.0) ? -1.0 : 1.0;

  if (av <= 1.5) {
    // Maclaurin series of int_0^v exp(i u^2) du.
    complex sum{0.0, 0.0};
    complex c{1.0, 0.0};
    const double v2 = av * av;
    double p = av;
    for (int n = 0; n <= 40; ++n) {
      complex term = c * p / double(2 * n + 1);
      sum += term;
      if (std::abs(term) < 1e-18) break;
      c *= I / double(n + 1);
      p *= v2;
    }
    return sign * sum;
  }

  if (av <= 6.0) {
    // Series head on [0, 1.5] plus short oscillatory panels beyond.
    complex head = fresnel_f(1.5);
    auto f = [](double u) { return std::exp(I * u * u); };
    std::vector<double> breaks;
    for (double x = 1.5; x < av; x += 0.25) breaks.push_back(x);
    breaks.push_back(av);
    return sign * (head + quad::gl_panels(f, breaks, 16));
  }

  // F(inf) minus the asymptotic tail exp(iv^2) * sum a_m v^(-2m-1).
  const complex f_inf = 0.5 * std::sqrt(pi) * std::exp(I * pi / 4.0);
  complex a = 0.5 * I;
  complex tail{0.0, 0.0};
  double p = 1.0 / av;
  for (int m = 0; m <= 12; ++m) {
    complex term = a * p;
    tail += term;
    if (std::abs(term) < 1e-18) break;
    a *= -0.5 * I * double(2 * m + 1);
    p /= av * av;
  }
  return sign * (f_inf - std::exp(I * av * av) * tail);
}

double gudermann_gamma(double tau) {
  if (!(std::abs(tau) < 0.5 * pi))
    throw DomainError("gudermann_gamma: |tau| must be below pi/2");
  // sec tau - tan tau = tan(pi/4 - tau/2)
  return std::log(std::tan(0.25 * pi - 0.5 * tau));
}

double gamma_fn(double x) {
  if (!(x > 0.0 && x <= 170.0))
    throw DomainError("gamma_fn: argument must lie in (0, 170]");
  return std::tgamma(x);
}

complex log_gamma(complex z) {
  // Lanczos approximation (g = 7, 9 coefficients), reflected for Re z < 0.5.
  static const double c[9] = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z.real() < 0.5) {
    // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
    return std::log(pi / std::sin(pi * z)) - log_gamma(1.0 - z);
  }
  z -= 1.0;
  complex x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + double(i));
  complex t = z + 7.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

complex bessel_j_complex_order(complex nu, double x) {
  if (!(x > 0.0))
    throw DomainError("bessel_j_complex_order: argument must be positive");
  const double hx = 0.5 * x;
  complex sum{0.0, 0.0};
  complex lg = log_gamma(nu + 1.0);
  for (int m = 0; m <= 200; ++m) {
    complex term =
        std::exp((nu + 2.0 * double(m)) * std::log(complex(hx)) - lg -
                 std::lgamma(double(m) + 1.0));
    if (m % 2 == 1) term = -term;
    sum += term;
    if (std::abs(term) < 1e-17 * (std::abs(sum) + 1e-300) && m > x) break;
    lg += std::log(nu + double(m) + 1.0);
  }
  return sum;
}

}  // namespace wedge::specfun
