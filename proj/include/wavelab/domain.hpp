#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "wavelab/bessel.hpp"

namespace wavelab {

enum class DomainKind { Interval, Disk, BallRadial };

std::string to_string(DomainKind k);
DomainKind domain_kind_from_string(const std::string& s);

// Model domain: Interval(0,L) in 1D, Disk of radius R in 2D (full
// angular dependence), radial ball of radius R in 3D (fields depend on
// |x| only).
struct Domain {
  DomainKind kind = DomainKind::Interval;
  double extent = 1.0;  // L for Interval, R otherwise

  int dim() const;
  double measure() const;           // |Omega|
  double boundary_measure() const;  // |dOmega| (counting measure in 1D)
};

// Spatial point in domain coordinates: r is the coordinate on the
// interval, or the distance from the domain center otherwise; theta is
// the polar angle (Disk only).
struct Point {
  double r = 0.0;
  double theta = 0.0;

  double x() const { return r * std::cos(theta); }
  double y() const { return r * std::sin(theta); }
};

// One Neumann eigenfunction: -Lap e = mu e, de/dn = 0 on the boundary.
// Interval: e ~ cos(k pi x / L). Disk: e ~ J_m(sqrt(mu) r) {cos,sin}(m
// theta) with J_m'(sqrt(mu) R) = 0. Ball: e ~ j_0(sqrt(mu) r) with
// j_0'(sqrt(mu) R) = 0.
struct Mode {
  int m = 0;        // angular order (Disk), otherwise 0
  int k = 0;        // radial index; k = 0 is the constant mode
  bool sine = false;
  double mu = 0.0;
  double norm = 1.0;  // L2 normalization constant
};

enum class QuadProfile {
  Dealiased,    // grid fine enough to project u^5 without aliasing
  Orthonormal,  // grid sized for mode products only (linear scans)
};

class EigenBasis {
 public:
  const Domain& domain() const { return domain_; }
  int size() const { return static_cast<int>(modes_.size()); }
  const std::vector<Mode>& modes() const { return modes_; }
  const Mode& mode(int k) const { return modes_[k]; }
  double mu(int k) const { return modes_[k].mu; }
  const Eigen::VectorXd& mu() const { return mu_; }
  int max_angular_order() const { return m_max_; }

  // Quadrature grid over Omega; weights include the radial measure
  // factor r^{d-1} and all angular constants, so sum(w) = |Omega|.
  int quad_size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<Point>& nodes() const { return nodes_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  int n_radial() const { return n_radial_; }
  int n_angular() const { return n_angular_; }

  // Cached evaluation tables, modes x quad points. Gradient tables are
  // built for the Dealiased profile only.
  const Eigen::MatrixXd& table() const { return table_; }
  bool has_gradient_tables() const { return table_dr_.size() > 0; }
  const Eigen::MatrixXd& table_dr() const { return table_dr_; }
  const Eigen::MatrixXd& table_dtheta() const { return table_dth_; }

  // Pointwise evaluation at arbitrary points of the closed domain.
  double value(int k, const Point& p) const;
  // Physical gradient components (d/dr, (1/r) d/dtheta).
  void gradient(int k, const Point& p, double* d_r, double* d_theta) const;
  // Second radial derivative (available on all three domains).
  double radial_second(int k, const Point& p) const;

  // Grid transforms against the cached table.
  Eigen::VectorXd synth_values(const Eigen::VectorXd& coef) const;
  void synth_gradients(const Eigen::VectorXd& coef, Eigen::VectorXd& d_r,
                       Eigen::VectorXd& d_theta) const;
  Eigen::VectorXd analyze_values(const Eigen::VectorXd& grid_values) const;

  friend EigenBasis build_basis(const Domain&, int n_modes, int quad_order,
                                QuadProfile profile, RootCache* cache);

 private:
  Domain domain_;
  std::vector<Mode> modes_;
  Eigen::VectorXd mu_;
  int m_max_ = 0;
  std::vector<Point> nodes_;
  Eigen::VectorXd weights_;
  int n_radial_ = 0, n_angular_ = 1;
  Eigen::MatrixXd table_, table_dr_, table_dth_;
};

// Builds the first n_modes Neumann eigenpairs ordered by eigenvalue.
// quad_order is the radial point count; 0 picks a default sized from
// the retained spectrum and the profile. Throws std::invalid_argument
// on bad sizes and std::runtime_error if a root search fails.
EigenBasis build_basis(const Domain& domain, int n_modes, int quad_order = 0,
                       QuadProfile profile = QuadProfile::Dealiased,
                       RootCache* cache = nullptr);

// All modes with sqrt(mu) <= lambda_max (spectrally complete up to the
// cutoff).
EigenBasis build_basis_cutoff(const Domain& domain, double lambda_max,
                              QuadProfile profile = QuadProfile::Dealiased,
                              RootCache* cache = nullptr);

// Boundary sample points with surface-measure weights; weights sum to
// |dOmega|. The Interval boundary is two atoms of weight 1.
struct BoundaryGrid {
  std::vector<Point> nodes;
  Eigen::VectorXd weights;
};

BoundaryGrid boundary_trace_grid(const EigenBasis& basis);

}  // namespace wavelab
