#pragma once

#include "wedge/types.hpp"

namespace wedge::specfun {

struct FresnelValue {
  complex value;
};

// J_nu(x) for real order nu >= 0 and x > 0.
double bessel_j(double nu, double x);

// H^(1)_nu(x) = J_nu(x) + i Y_nu(x) for real order nu >= 0 and x > 0.
complex hankel1(double nu, double x);

// H^(1)_0(k z) for complex z, analytically continued off the positive real
// axis (principal branch; the cut lies along the negative real axis of k z).
complex hankel1_0_complex(complex z, double k);

// F(v) = int_0^v exp(i u^2) du.
complex fresnel_f(double v);

/// Gamma(tau) = ln|sec tau - tan tau|, the inverse Gudermannian up to sign:
// sinh(Gamma(tau)) = -tan(tau).
double gudermann_gamma(double tau);

// Gamma function on (0, 170].
double gamma_fn(double x);

// J_nu(x) for complex order (ascending series with complex log-Gamma).
// Diagnostic-grade; used by the inverse Kontorovich-Lebedev quadrature.
complex bessel_j_complex_order(complex nu, double x);

// Principal-branch log-Gamma for complex argument (Lanczos).
complex log_gamma(complex z);

}  // namespace wedge::specfun
