#include "wedge/embedding.hpp"

#include <cmath>
#include <numeric>

#include "wedge/specfun.hpp"

namespace wedge::embedding {

namespace {
const complex I{0.0, 1.0};
}

RationalAngle rational_of(double theta_w, int max_den, double tol) {
  if (max_den > 64) throw DomainError("rational_of: max_den must be <= 64");
  const double opening = 2.0 * theta_w;
  for (int q = 1; q <= 2 * max_den; ++q) {
    const int p = int(std::lround(q * pi / opening));
    if (p < 1 || p > max_den) continue;
    if (std::gcd(p, q) != 1) continue;
    const double approx = q * pi / p;
    if (std::abs(opening - approx) < tol && approx > pi && approx <= 2.0 * pi + tol)
      return {p, q};
  }
  throw NotRational("rational_of: 2 theta_w is not a small rational of pi");
}

complex directivity_hat(int m, double theta, const WedgeProblem& prob) {
  if (m < 1) throw DomainError("directivity_hat: m must be >= 1");
  const double nu = m * prob.delta();
  const double ang = nu * (theta + prob.theta_w);
  const double trig =
      (prob.bc == Bc::Dirichlet) ? std::sin(ang) : std::cos(ang);
  // sqrt(2 pi) e^{i pi/4}: far-field coefficient of the edge Green's
  // function's Hankel factor, sqrt(2/(pi x)) e^{i(x - nu pi/2 - pi/4)},
  // combined with the pi*i normalization.
  return std::sqrt(2.0 * pi) * std::exp(I * pi / 4.0) *
         std::pow(0.5 * prob.k, nu) * std::exp(-I * (0.5 * pi) * nu) /
         specfun::gamma_fn(nu) * trig;
}

namespace {

complex embed_sum(double theta, double theta_i, const WedgeProblem& prob,
                  const RationalAngle& ra) {
  const int p = ra.p, q = ra.q;
  const double d = prob.delta();
  // Angles measured from the bottom face: the Chebyshev denominator only
  // vanishes on every shadow/reflection boundary (where the diffraction
  // coefficient has its poles) in face coordinates, not bisector ones.
  const double phi = theta + prob.theta_w;
  const double phi_i = theta_i + prob.theta_w;
  const double par = (p % 2 == 0) ? 1.0 : -1.0;  // (-1)^p
  const complex den =
      complex(std::cos(p * phi) - par * std::cos(p * phi_i));
  if (std::abs(den) < 1e-8)
    throw DenominatorSingular(
        "embedding: cos(p(theta+theta_w)) = (-1)^p cos(p(theta_i+theta_w))");

  const double outer_sign = ((q - p + 1) % 2 == 0) ? 1.0 : -1.0;
  const complex ik_half_p = std::pow(0.5 * I * prob.k, p);
  // Overall normalization fixed by matching the exact eigenfunction
  // coefficients K_m = 4 delta e^{-i nu pi/2} (k/2)^{nu} sin(nu phi_i) /
  // Gamma(1+nu) against the directivities: K_m = 4 e^{-i pi/4} D_m /
  // (m sqrt(2 pi)), which replaces the bare 2/(m pi) pairing.
  const complex norm = std::sqrt(2.0 * pi) * std::exp(3.0 * I * pi / 4.0);

  complex sum{0.0, 0.0};
  for (int m = 1; m <= q - 1; ++m) {
    const double nu = m * d;
    double poch = 1.0;  // nu (nu-1) ... (nu-p+1)
    for (int j = 0; j < p; ++j) poch *= nu - j;
    sum += outer_sign * poch / (m * pi * ik_half_p * den) *
           directivity_hat(m, theta_i, prob) *
           directivity_hat(q - m, theta, prob);
  }
  return norm * sum;
}

}  // namespace

complex embed_diffraction_coefficient(double theta, double theta_i,
                                      const WedgeProblem& prob,
                                      const RationalAngle& ra, bool* flagged) {
  if (prob.bc != Bc::Dirichlet)
    throw NotImplemented("embedding: Neumann directivities are not available");
  if (flagged) *flagged = false;
  try {
    return embed_sum(theta, theta_i, prob, ra);
  } catch (const DenominatorSingular&) {
    // Removable direction: symmetric offsets about theta cancel the O(h)
    // error of each one-sided evaluation.
    const double h = 1e-5;
    complex lo = embed_sum(theta - h, theta_i, prob, ra);
    complex hi = embed_sum(theta + h, theta_i, prob, ra);
    if (flagged) *flagged = true;
    return 0.5 * (lo + hi);
  }
}

}  // namespace wedge::embedding
