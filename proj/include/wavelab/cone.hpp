#pragma once

#include <Eigen/Dense>
#include <vector>

#include "wavelab/domain.hpp"

namespace wavelab {

// Truncated backward light cone K_S^T = {(x,t): |x - x0| < -t, S <= t
// <= T} with vertex time normalized to 0. The vertex is the domain
// center for BallRadial (interior vertex) and may be a boundary point
// for the Disk.
struct ConeSpec {
  Point vertex;
  double S = -1.0;
  double T = 0.0;
};

enum class ConeSurface { Lateral, SliceD, BoundaryWall, Edge };

// Sample points with induced-measure weights on one of the cone's
// surfaces. `dir` holds the polar angle of (x - x0) seen from the
// vertex; the outward unit normal to the lateral surface is
// (1/sqrt2, dir-unit-vector/sqrt2) in (t,x) components.
struct ConeSurfaceQuadrature {
  ConeSurface surface = ConeSurface::Lateral;
  std::vector<double> t;
  std::vector<Point> x;
  Eigen::VectorXd w;
  std::vector<double> dir;

  double measure() const { return w.sum(); }
};

bool vertex_on_boundary(const ConeSpec& cone, const Domain& domain);
void validate_cone(const ConeSpec& cone, const Domain& domain);

// Half-opening angle of the circle {|x - x0| = rho} around a boundary
// vertex, measured from the inward normal: |phi| < acos(rho / 2R).
double disk_arc_halfwidth(double rho, double R);

// Builds quadrature for the requested surface. `resolution` controls
// both the time subdivision and the per-slice angular subdivision;
// refining it converges at 2nd order or better. SliceD uses
// `slice_time` and ignores S, T. Throws std::invalid_argument for
// unsupported (surface, domain, vertex) combinations.
ConeSurfaceQuadrature cone_quadrature(const ConeSpec& cone,
                                      const Domain& domain,
                                      ConeSurface surface, int resolution,
                                      double slice_time = 0.0);

}  // namespace wavelab
