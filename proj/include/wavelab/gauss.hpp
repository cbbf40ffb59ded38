#pragma once

#include <Eigen/Dense>

namespace wavelab {

// Gauss-Legendre rule on [a,b]: nodes and weights computed by Newton
// iteration on the Legendre polynomial (no tables, any order).
struct GaussRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

GaussRule gauss_legendre(int n, double a, double b);

// Uniform trapezoid weights on [a,b] with Gregory end corrections
// (4th order for n >= 9, plain trapezoid below that).
GaussRule corrected_trapezoid(int n, double a, double b);

// Uniform periodic trapezoid on [0, 2*pi) (spectrally accurate for
// periodic integrands): n nodes at 2*pi*j/n, weights 2*pi/n.
GaussRule periodic_trapezoid(int n);

}  // namespace wavelab
