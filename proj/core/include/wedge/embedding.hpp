#pragma once

#include "wedge/types.hpp"

namespace wedge::embedding {

// Rational wedge opening 2 theta_w = q pi / p with gcd(p, q) = 1.
struct RationalAngle {
  int p;
  int q;
};

// Smallest-q rational representation of 2 theta_w, or NotRational.
RationalAngle rational_of(double theta_w, int max_den = 64,
                          double tol = 1e-12);

// Directivity of the m-th edge Green's function (Dirichlet: sine; Neumann:
// cosine angular factor).
complex directivity_hat(int m, double theta, const WedgeProblem& prob);

// Two-angle diffraction coefficient assembled from one-angle directivities
// (Dirichlet only). If the angular denominator is singular the value is
// obtained by symmetric-offset extrapolation and *flagged* is set.
complex embed_diffraction_coefficient(double theta, double theta_i,
                                      const WedgeProblem& prob,
                                      const RationalAngle& ra,
                                      bool* flagged = nullptr);

}  // namespace wedge::embedding
