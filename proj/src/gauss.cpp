#include "wavelab/gauss.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wavelab {

GaussRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double xm = 0.5 * (b + a);
  const double xl = 0.5 * (b - a);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-based initial guess for the i-th root of P_n
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    rule.nodes[i] = xm - xl * z;
    rule.nodes[n - 1 - i] = xm + xl * z;
    double w = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

GaussRule corrected_trapezoid(int n, double a, double b) {
  if (n < 2) throw std::invalid_argument("corrected_trapezoid: n must be >= 2");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double h = (b - a) / (n - 1);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = a + h * i;
    rule.weights[i] = h;
  }
  rule.weights[0] = rule.weights[n - 1] = 0.5 * h;
  if (n >= 9) {
    // Gregory end correction, O(h^4)
    static const double c[3] = {3.0 / 8.0, 7.0 / 6.0, 23.0 / 24.0};
    for (int i = 0; i < 3; ++i) {
      rule.weights[i] = c[i] * h;
      rule.weights[n - 1 - i] = c[i] * h;
    }
  }
  return rule;
}

GaussRule periodic_trapezoid(int n) {
  if (n < 1) throw std::invalid_argument("periodic_trapezoid: n must be >= 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double h = 2.0 * std::numbers::pi / n;
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = h * i;
    rule.weights[i] = h;
  }
  return rule;
}

}  // namespace wavelab
