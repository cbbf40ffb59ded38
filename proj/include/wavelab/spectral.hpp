#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <span>

#include "wavelab/domain.hpp"

namespace wavelab {

// Real scalar field represented by coefficients in a Neumann eigenbasis.
class SpectralField {
 public:
  SpectralField() = default;
  SpectralField(std::shared_ptr<const EigenBasis> basis, Eigen::VectorXd coef);
  static SpectralField zero(std::shared_ptr<const EigenBasis> basis);

  const EigenBasis& basis() const { return *basis_; }
  const std::shared_ptr<const EigenBasis>& basis_ptr() const { return basis_; }
  const Eigen::VectorXd& coef() const { return c_; }
  Eigen::VectorXd& coef() { return c_; }
  int size() const { return static_cast<int>(c_.size()); }

  double l2_norm() const { return c_.norm(); }

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(double a);
  friend SpectralField operator+(SpectralField a, const SpectralField& b) {
    return a += b;
  }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) {
    return a -= b;
  }
  friend SpectralField operator*(double a, SpectralField f) { return f *= a; }

 private:
  std::shared_ptr<const EigenBasis> basis_;
  Eigen::VectorXd c_;
};

// Projection of grid values (at the basis quadrature nodes) onto the
// retained span: c_k = sum_j w_j f(x_j) e_k(x_j).
SpectralField analyze(std::shared_ptr<const EigenBasis> basis,
                      const Eigen::VectorXd& grid_values);

// Pointwise synthesis sum_k c_k e_k.
Eigen::VectorXd synthesize(const SpectralField& f);  // at quadrature nodes
double synthesize_at(const SpectralField& f, const Point& p);
Eigen::VectorXd synthesize_at(const SpectralField& f, std::span<const Point> pts);

// Physical gradient components (d/dr, (1/r) d/dtheta) at a point.
void gradient_at(const SpectralField& f, const Point& p, double* d_r,
                 double* d_theta);
// Gradient at the quadrature nodes (requires gradient tables).
void synthesize_gradient(const SpectralField& f, Eigen::VectorXd& d_r,
                         Eigen::VectorXd& d_theta);
// Second radial derivative at a point.
double radial_second_at(const SpectralField& f, const Point& p);

// Functional calculus of -Lap_N: c_k -> m(mu_k) c_k.
SpectralField spectral_multiplier(const SpectralField& f,
                                  const std::function<double(double)>& m);

// Built-in multipliers.
SpectralField halfwave_cos(const SpectralField& f, double t);  // cos(t sqrt(mu))
// sin(t sqrt(mu)) / sqrt(mu), with the removable value t at mu = 0.
SpectralField halfwave_sin_over(const SpectralField& f, double t);
// mu^{s/2}; the zero mode maps to 0 for s > 0 and is rejected for
// s < 0 unless its coefficient vanishes.
SpectralField fractional_power(const SpectralField& f, double s);
// (1 + mu)^{s/2} (Bessel potential).
SpectralField bessel_power(const SpectralField& f, double s);

// Spectral projector onto sqrt(mu) in [lambda, lambda + 1).
SpectralField projector(const SpectralField& f, double lambda);
std::vector<int> cluster_indices(const EigenBasis& basis, double lambda);

// Pointwise u^5 on the dealiased grid, re-analyzed into the basis.
SpectralField quintic(const SpectralField& f);

}  // namespace wavelab
