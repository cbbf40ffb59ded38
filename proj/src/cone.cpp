#include "wavelab/cone.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wavelab/gauss.hpp"

namespace wavelab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
}  // namespace

bool vertex_on_boundary(const ConeSpec& cone, const Domain& domain) {
  switch (domain.kind) {
    case DomainKind::Interval:
      return cone.vertex.r <= 0.0 || cone.vertex.r >= domain.extent;
    case DomainKind::Disk:
    case DomainKind::BallRadial:
      return std::abs(cone.vertex.r - domain.extent) < 1e-12 * domain.extent;
  }
  return false;
}

void validate_cone(const ConeSpec& cone, const Domain& domain) {
  if (!(cone.S < cone.T) || cone.T > 0.0)
    throw std::invalid_argument("cone requires S < T <= 0");
  const double rho_max = -cone.S;
  switch (domain.kind) {
    case DomainKind::Interval: {
      const double c = cone.vertex.r;
      if (c < 0.0 || c > domain.extent)
        throw std::invalid_argument("cone vertex outside interval");
      break;
    }
    case DomainKind::BallRadial:
      if (cone.vertex.r != 0.0)
        throw std::invalid_argument(
            "BallRadial cones require the vertex at the center");
      if (rho_max > domain.extent)
        throw std::invalid_argument("cone base exits the ball: |S| > R");
      break;
    case DomainKind::Disk:
      if (cone.vertex.r != 0.0 && !vertex_on_boundary(cone, domain))
        throw std::invalid_argument(
            "Disk cone vertex must be the center or a boundary point");
      if (rho_max >= 2.0 * domain.extent)
        throw std::invalid_argument("cone base exceeds the disk diameter");
      break;
  }
}

double disk_arc_halfwidth(double rho, double R) {
  double c = rho / (2.0 * R);
  if (c >= 1.0) return 0.0;
  return std::acos(c);
}

namespace {

// Appends lateral samples for the sphere {|x - x0| = rho} at time t,
// scaled by the time-quadrature weight wt. The sqrt(2) is the area
// stretch of the cone surface relative to dt x dsigma.
void lateral_slice(const ConeSpec& cone, const Domain& dom, double t,
                   double wt, int n_ang, ConeSurfaceQuadrature& q,
                   std::vector<double>& wacc) {
  const double rho = -t;
  if (rho < 0.0) return;
  switch (dom.kind) {
    case DomainKind::Interval: {
      const double c = cone.vertex.r;
      for (double s : {-1.0, 1.0}) {
        double xx = c + s * rho;
        if (xx < 0.0 || xx > dom.extent) continue;
        q.t.push_back(t);
        q.x.push_back(Point{xx, 0.0});
        q.dir.push_back(s > 0 ? 0.0 : kPi);
        wacc.push_back(wt * kSqrt2);
      }
      break;
    }
    case DomainKind::BallRadial: {
      if (rho == 0.0 || rho > dom.extent) return;
      q.t.push_back(t);
      q.x.push_back(Point{rho, 0.0});
      q.dir.push_back(0.0);
      wacc.push_back(wt * kSqrt2 * 4.0 * kPi * rho * rho);
      break;
    }
    case DomainKind::Disk: {
      if (rho == 0.0) return;
      const bool bdry =
          std::abs(cone.vertex.r - dom.extent) < 1e-12 * dom.extent;
      if (!bdry) {
        if (cone.vertex.r + rho > dom.extent) return;
        GaussRule ang = periodic_trapezoid(2 * n_ang);
        for (int j = 0; j < ang.nodes.size(); ++j) {
          double phi = ang.nodes[j];
          double px = cone.vertex.x() + rho * std::cos(phi);
          double py = cone.vertex.y() + rho * std::sin(phi);
          q.t.push_back(t);
          q.x.push_back(Point{std::hypot(px, py), std::atan2(py, px)});
          q.dir.push_back(phi);
          wacc.push_back(wt * kSqrt2 * rho * ang.weights[j]);
        }
      } else {
        const double phimax = disk_arc_halfwidth(rho, dom.extent);
        if (phimax <= 0.0) return;
        GaussRule ang = gauss_legendre(n_ang, -phimax, phimax);
        const double base = cone.vertex.theta + kPi;  // inward direction
        for (int j = 0; j < n_ang; ++j) {
          double phi = ang.nodes[j];
          double dx = std::cos(base + phi), dy = std::sin(base + phi);
          double px = cone.vertex.x() + rho * dx;
          double py = cone.vertex.y() + rho * dy;
          q.t.push_back(t);
          q.x.push_back(Point{std::hypot(px, py), std::atan2(py, px)});
          q.dir.push_back(base + phi);
          wacc.push_back(wt * kSqrt2 * rho * ang.weights[j]);
        }
      }
      break;
    }
  }
}

void slice_quadrature(const ConeSpec& cone, const Domain& dom, double ts,
                      int res, ConeSurfaceQuadrature& q,
                      std::vector<double>& wacc) {
  const double rho = -ts;
  if (rho <= 0.0) return;
  const int n = std::max(res, 4);
  switch (dom.kind) {
    case DomainKind::Interval: {
      double a = std::max(0.0, cone.vertex.r - rho);
      double b = std::min(dom.extent, cone.vertex.r + rho);
      GaussRule g = gauss_legendre(n, a, b);
      for (int i = 0; i < n; ++i) {
        q.t.push_back(ts);
        q.x.push_back(Point{g.nodes[i], 0.0});
        q.dir.push_back(g.nodes[i] >= cone.vertex.r ? 0.0 : kPi);
        wacc.push_back(g.weights[i]);
      }
      break;
    }
    case DomainKind::BallRadial: {
      GaussRule g = gauss_legendre(n, 0.0, std::min(rho, dom.extent));
      for (int i = 0; i < n; ++i) {
        q.t.push_back(ts);
        q.x.push_back(Point{g.nodes[i], 0.0});
        q.dir.push_back(0.0);
        wacc.push_back(4.0 * kPi * g.nodes[i] * g.nodes[i] * g.weights[i]);
      }
      break;
    }
    case DomainKind::Disk: {
      const bool bdry =
          std::abs(cone.vertex.r - dom.extent) < 1e-12 * dom.extent;
      if (!bdry) {
        double rmax = std::min(rho, dom.extent - cone.vertex.r);
        GaussRule gr = gauss_legendre(n, 0.0, rmax);
        GaussRule ga = periodic_trapezoid(2 * n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < 2 * n; ++j) {
            double s = gr.nodes[i], phi = ga.nodes[j];
            double px = cone.vertex.x() + s * std::cos(phi);
            double py = cone.vertex.y() + s * std::sin(phi);
            q.t.push_back(ts);
            q.x.push_back(Point{std::hypot(px, py), std::atan2(py, px)});
            q.dir.push_back(phi);
            wacc.push_back(s * gr.weights[i] * ga.weights[j]);
          }
      } else {
        // Lens {|x - x0| < rho} cut by the circle; vertex-polar
        // coordinates with the radial extent kinked at +-phimax, so
        // integrate the pieces separately.
        const double R = dom.extent;
        const double phimax = disk_arc_halfwidth(rho, R);
        const double base = cone.vertex.theta + kPi;
        auto add_piece = [&](double p0, double p1, bool capped) {
          if (p1 <= p0) return;
          GaussRule ga = gauss_legendre(n, p0, p1);
          for (int j = 0; j < n; ++j) {
            double phi = ga.nodes[j];
            double smax = capped ? rho : 2.0 * R * std::cos(phi);
            GaussRule gs = gauss_legendre(n, 0.0, smax);
            for (int i = 0; i < n; ++i) {
              double s = gs.nodes[i];
              double px = cone.vertex.x() + s * std::cos(base + phi);
              double py = cone.vertex.y() + s * std::sin(base + phi);
              q.t.push_back(ts);
              q.x.push_back(Point{std::hypot(px, py), std::atan2(py, px)});
              q.dir.push_back(base + phi);
              wacc.push_back(s * gs.weights[i] * ga.weights[j]);
            }
          }
        };
        add_piece(-phimax, phimax, true);
        add_piece(-kPi / 2.0, -phimax, false);
        add_piece(phimax, kPi / 2.0, false);
      }
      break;
    }
  }
}

}  // namespace

ConeSurfaceQuadrature cone_quadrature(const ConeSpec& cone,
                                      const Domain& domain,
                                      ConeSurface surface, int resolution,
                                      double slice_time) {
  validate_cone(cone, domain);
  if (resolution < 2)
    throw std::invalid_argument("cone_quadrature: resolution must be >= 2");
  const bool bdry = vertex_on_boundary(cone, domain);
  if ((surface == ConeSurface::BoundaryWall || surface == ConeSurface::Edge) &&
      (domain.kind != DomainKind::Disk || !bdry))
    throw std::invalid_argument(
        "BoundaryWall/Edge surfaces require a Disk with a boundary vertex");

  ConeSurfaceQuadrature q;
  q.surface = surface;
  std::vector<double> wacc;

  switch (surface) {
    case ConeSurface::Lateral: {
      GaussRule tg = corrected_trapezoid(resolution + 1, cone.S, cone.T);
      int n_ang = std::max(8, resolution / 2);
      for (int i = 0; i < tg.nodes.size(); ++i)
        lateral_slice(cone, domain, tg.nodes[i], tg.weights[i], n_ang, q,
                      wacc);
      break;
    }
    case ConeSurface::SliceD: {
      if (slice_time >= 0.0)
        throw std::invalid_argument("SliceD requires a negative slice time");
      slice_quadrature(cone, domain, slice_time, resolution, q, wacc);
      break;
    }
    case ConeSurface::BoundaryWall: {
      GaussRule tg = corrected_trapezoid(resolution + 1, cone.S, cone.T);
      const double R = domain.extent;
      int n_ang = std::max(8, resolution / 2);
      for (int i = 0; i < tg.nodes.size(); ++i) {
        double rho = -tg.nodes[i];
        if (rho <= 0.0) continue;
        double c = rho / (2.0 * R);
        if (c >= 1.0) continue;
        double beta = 2.0 * std::asin(c);  // half-aperture along dOmega
        GaussRule ga = gauss_legendre(n_ang, -beta, beta);
        for (int j = 0; j < n_ang; ++j) {
          double th = cone.vertex.theta + ga.nodes[j];
          q.t.push_back(tg.nodes[i]);
          q.x.push_back(Point{R, th});
          double px = R * std::cos(th) - cone.vertex.x();
          double py = R * std::sin(th) - cone.vertex.y();
          q.dir.push_back(std::atan2(py, px));
          wacc.push_back(tg.weights[i] * R * ga.weights[j]);
        }
      }
      break;
    }
    case ConeSurface::Edge: {
      GaussRule tg = corrected_trapezoid(resolution + 1, cone.S, cone.T);
      const double R = domain.extent;
      for (int i = 0; i < tg.nodes.size(); ++i) {
        double t = tg.nodes[i];
        double rho = -t;
        if (rho <= 0.0) continue;
        double c = rho / (2.0 * R);
        if (c >= 1.0) continue;
        double beta = 2.0 * std::asin(c);
        // arc-length element of the moving endpoint in space-time
        double speed = 1.0 / std::sqrt(1.0 - c * c);
        double wline = tg.weights[i] * std::sqrt(1.0 + speed * speed);
        for (double s : {-1.0, 1.0}) {
          double th = cone.vertex.theta + s * beta;
          q.t.push_back(t);
          q.x.push_back(Point{R, th});
          double px = R * std::cos(th) - cone.vertex.x();
          double py = R * std::sin(th) - cone.vertex.y();
          q.dir.push_back(std::atan2(py, px));
          wacc.push_back(wline);
        }
      }
      break;
    }
  }

  q.w = Eigen::Map<Eigen::VectorXd>(wacc.data(), wacc.size());
  return q;
}

}  // namespace wavelab
