#pragma once

#include <functional>
#include <vector>

#include "wedge/types.hpp"

namespace wedge::quad {

struct GlRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Gauss-Legendre rule of order n, cached and thread-safe.
const GlRule& gauss_legendre(int n);

// Integrate f over [a, b] with a single n-point Gauss-Legendre rule.
template <typename F>
auto gl_integrate(F&& f, double a, double b, int n) {
  const GlRule& rule = gauss_legendre(n);
  using R = decltype(f(a));
  R sum{};
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

// Integrate over consecutive panels [x0, x1, ..., xm] with n nodes each.
template <typename F>
auto gl_panels(F&& f, const std::vector<double>& breaks, int n) {
  using R = decltype(f(breaks.front()));
  R sum{};
  for (size_t i = 0; i + 1 < breaks.size(); ++i)
    sum += gl_integrate(f, breaks[i], breaks[i + 1], n);
  return sum;
}

// Adaptive complex-valued quadrature (interval bisection against a local
// higher-order rule); used only to build test oracles and diagnostics.
complex adaptive(const std::function<complex(double)>& f, double a, double b,
                 double abs_tol, int max_depth = 40);

}  // namespace wedge::quad
