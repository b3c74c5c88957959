#include "wedge/quad.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace wedge::quad {

namespace {

GlRule make_rule(int n) {
  GlRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration on P_n from Chebyshev-like initial guesses.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GlRule& gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n must be positive");
  static std::map<int, GlRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
  return it->second;
}

namespace {

complex adaptive_impl(const std::function<complex(double)>& f, double a,
                      double b, complex coarse, double abs_tol, int depth) {
  double m = 0.5 * (a + b);
  complex left = gl_integrate(f, a, m, 15);
  complex right = gl_integrate(f, m, b, 15);
  if (std::abs(left + right - coarse) < abs_tol || depth <= 0)
    return left + right;
  return adaptive_impl(f, a, m, left, 0.5 * abs_tol, depth - 1) +
         adaptive_impl(f, m, b, right, 0.5 * abs_tol, depth - 1);
}

}  // namespace

complex adaptive(const std::function<complex(double)>& f, double a, double b,
                 double abs_tol, int max_depth) {
  return adaptive_impl(f, a, b, gl_integrate(f, a, b, 15), abs_tol, max_depth);
}

}  // namespace wedge::quad
