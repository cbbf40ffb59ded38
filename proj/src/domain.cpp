#include "wavelab/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wavelab/gauss.hpp"

namespace wavelab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr int kModeCap = 8192;
}  // namespace

std::string to_string(DomainKind k) {
  switch (k) {
    case DomainKind::Interval: return "interval";
    case DomainKind::Disk: return "disk";
    case DomainKind::BallRadial: return "ball";
  }
  return "?";
}

DomainKind domain_kind_from_string(const std::string& s) {
  if (s == "interval") return DomainKind::Interval;
  if (s == "disk") return DomainKind::Disk;
  if (s == "ball") return DomainKind::BallRadial;
  throw std::invalid_argument("unknown domain kind: " + s);
}

int Domain::dim() const {
  switch (kind) {
    case DomainKind::Interval: return 1;
    case DomainKind::Disk: return 2;
    case DomainKind::BallRadial: return 3;
  }
  return 0;
}

double Domain::measure() const {
  switch (kind) {
    case DomainKind::Interval: return extent;
    case DomainKind::Disk: return kPi * extent * extent;
    case DomainKind::BallRadial:
      return 4.0 / 3.0 * kPi * extent * extent * extent;
  }
  return 0.0;
}

double Domain::boundary_measure() const {
  switch (kind) {
    case DomainKind::Interval: return 2.0;
    case DomainKind::Disk: return 2.0 * kPi * extent;
    case DomainKind::BallRadial: return 4.0 * kPi * extent * extent;
  }
  return 0.0;
}

namespace {

// Radial profile of a mode and its first two derivatives at radius r.
struct RadialEval {
  double v, dv, d2v;
};

RadialEval radial_profile(const Domain& dom, const Mode& mode, double r) {
  if (mode.mu == 0.0) return {1.0, 0.0, 0.0};
  const double w = std::sqrt(mode.mu);
  switch (dom.kind) {
    case DomainKind::Interval:
      return {std::cos(w * r), -w * std::sin(w * r),
              -w * w * std::cos(w * r)};
    case DomainKind::BallRadial:
      return {sph_j0(w * r), w * sph_j0_prime(w * r),
              w * w * sph_j0_second(w * r)};
    case DomainKind::Disk: {
      const double x = w * r;
      const double j = bessel_j(mode.m, x);
      const double jp = bessel_j_prime(mode.m, x);
      // J'' from the Bessel ODE
      double j2;
      if (x > 1e-8) {
        j2 = -jp / x - (1.0 - double(mode.m) * mode.m / (x * x)) * j;
      } else {  // leading series terms
        j2 = (mode.m == 0) ? -0.5 : (mode.m == 2) ? 0.25 : 0.0;
      }
      return {j, w * jp, w * w * j2};
    }
  }
  return {0.0, 0.0, 0.0};
}

double angular_factor(const Mode& mode, double theta) {
  if (mode.m == 0) return 1.0;
  return mode.sine ? std::sin(mode.m * theta) : std::cos(mode.m * theta);
}

double angular_factor_prime(const Mode& mode, double theta) {
  if (mode.m == 0) return 0.0;
  return mode.sine ? mode.m * std::cos(mode.m * theta)
                   : -mode.m * std::sin(mode.m * theta);
}

// L2 normalization constants from the closed-form integrals.
double norm_constant(const Domain& dom, const Mode& mode) {
  if (mode.mu == 0.0) return 1.0 / std::sqrt(dom.measure());
  const double w = std::sqrt(mode.mu);
  const double R = dom.extent;
  switch (dom.kind) {
    case DomainKind::Interval:
      // int_0^L cos^2(k pi x / L) dx = L/2
      return std::sqrt(2.0 / R);
    case DomainKind::BallRadial: {
      // 4 pi int_0^R j0(wr)^2 r^2 dr = (4 pi / w^2)(R/2 - sin(2wR)/(4w))
      const double i = 4.0 * kPi / (w * w) *
                       (0.5 * R - std::sin(2.0 * w * R) / (4.0 * w));
      return 1.0 / std::sqrt(i);
    }
    case DomainKind::Disk: {
      // int_0^R J_m(wr)^2 r dr = (R^2/2)(1 - m^2/(wR)^2) J_m(wR)^2
      // when J_m'(wR) = 0.
      const double x = w * R;
      const double jm = bessel_j(mode.m, x);
      const double rad =
          0.5 * R * R * (1.0 - double(mode.m) * mode.m / (x * x)) * jm * jm;
      const double ang = (mode.m == 0) ? 2.0 * kPi : kPi;
      return 1.0 / std::sqrt(rad * ang);
    }
  }
  return 1.0;
}

}  // namespace

double EigenBasis::value(int k, const Point& p) const {
  const Mode& md = modes_[k];
  const RadialEval re = radial_profile(domain_, md, p.r);
  return md.norm * re.v * angular_factor(md, p.theta);
}

void EigenBasis::gradient(int k, const Point& p, double* d_r,
                          double* d_theta) const {
  const Mode& md = modes_[k];
  const RadialEval re = radial_profile(domain_, md, p.r);
  *d_r = md.norm * re.dv * angular_factor(md, p.theta);
  if (domain_.kind != DomainKind::Disk || md.m == 0) {
    *d_theta = 0.0;
    return;
  }
  // (1/r) d/dtheta; stable as r -> 0 via the J_m series
  double j_over_r;
  if (p.r > 1e-8) {
    j_over_r = re.v / p.r;
  } else {
    const double w = std::sqrt(md.mu);
    j_over_r = (md.m == 1) ? 0.5 * w : 0.0;
  }
  *d_theta = md.norm * j_over_r * angular_factor_prime(md, p.theta);
}

double EigenBasis::radial_second(int k, const Point& p) const {
  const Mode& md = modes_[k];
  const RadialEval re = radial_profile(domain_, md, p.r);
  return md.norm * re.d2v * angular_factor(md, p.theta);
}

Eigen::VectorXd EigenBasis::synth_values(const Eigen::VectorXd& coef) const {
  if (coef.size() != size())
    throw std::invalid_argument("synth_values: coefficient count mismatch");
  return table_.transpose() * coef;
}

void EigenBasis::synth_gradients(const Eigen::VectorXd& coef,
                                 Eigen::VectorXd& d_r,
                                 Eigen::VectorXd& d_theta) const {
  if (!has_gradient_tables())
    throw std::runtime_error("gradient tables not built for this basis");
  d_r = table_dr_.transpose() * coef;
  d_theta = table_dth_.transpose() * coef;
}

Eigen::VectorXd EigenBasis::analyze_values(
    const Eigen::VectorXd& grid_values) const {
  if (grid_values.size() != quad_size())
    throw std::invalid_argument("analyze_values: node count mismatch");
  return table_ * weights_.cwiseProduct(grid_values);
}

namespace {

std::vector<Mode> enumerate_modes(const Domain& dom, int n_modes,
                                  RootCache* cache) {
  std::vector<Mode> modes;
  modes.push_back(Mode{0, 0, false, 0.0, 1.0});
  const double R = dom.extent;
  switch (dom.kind) {
    case DomainKind::Interval: {
      for (int k = 1; k < n_modes; ++k) {
        double w = k * kPi / R;
        modes.push_back(Mode{0, k, false, w * w, 1.0});
      }
      break;
    }
    case DomainKind::BallRadial: {
      RootCache local;
      RootCache& rc = cache ? *cache : local;
      for (int k = 1; k < n_modes; ++k) {
        double x = rc.ball_root(k);
        modes.push_back(Mode{0, k, false, (x / R) * (x / R), 1.0});
      }
      break;
    }
    case DomainKind::Disk: {
      RootCache local;
      RootCache& rc = cache ? *cache : local;
      // Enumerate zeros of J_m' below a growing cutoff until enough
      // modes are collected; j'_{m,1} > m bounds the angular range.
      double X = 2.0 * std::sqrt(double(n_modes)) + 4.0;
      while (true) {
        std::vector<Mode> cand;
        cand.push_back(Mode{0, 0, false, 0.0, 1.0});
        for (int m = 0; m <= int(X) + 1; ++m) {
          for (int k = 1;; ++k) {
            double x = rc.disk_root(m, k);
            if (x > X) break;
            double mu = (x / R) * (x / R);
            cand.push_back(Mode{m, k, false, mu, 1.0});
            if (m > 0) cand.push_back(Mode{m, k, true, mu, 1.0});
          }
        }
        if (int(cand.size()) >= n_modes) {
          std::stable_sort(cand.begin(), cand.end(),
                           [](const Mode& a, const Mode& b) {
                             if (a.mu != b.mu) return a.mu < b.mu;
                             if (a.m != b.m) return a.m < b.m;
                             return a.sine < b.sine;
                           });
          cand.resize(n_modes);
          return cand;
        }
        X *= 1.3;
      }
    }
  }
  return modes;
}

}  // namespace

EigenBasis build_basis(const Domain& domain, int n_modes, int quad_order,
                       QuadProfile profile, RootCache* cache) {
  if (domain.extent <= 0.0)
    throw std::invalid_argument("domain extent must be positive");
  if (n_modes < 1) throw std::invalid_argument("n_modes must be >= 1");
  if (n_modes > kModeCap)
    throw std::invalid_argument("n_modes exceeds hard cap " +
                                std::to_string(kModeCap));

  EigenBasis b;
  b.domain_ = domain;
  b.modes_ = enumerate_modes(domain, n_modes, cache);
  std::stable_sort(b.modes_.begin(), b.modes_.end(),
                   [](const Mode& a, const Mode& c) {
                     if (a.mu != c.mu) return a.mu < c.mu;
                     if (a.m != c.m) return a.m < c.m;
                     return a.sine < c.sine;
                   });
  b.mu_.resize(b.size());
  b.m_max_ = 0;
  for (int i = 0; i < b.size(); ++i) {
    b.mu_[i] = b.modes_[i].mu;
    b.m_max_ = std::max(b.m_max_, b.modes_[i].m);
  }

  const double R = domain.extent;
  const double nu_max = std::sqrt(b.mu_[b.size() - 1]) * R;  // max phase
  int n_r = quad_order;
  if (n_r <= 0) {
    double factor = (profile == QuadProfile::Dealiased) ? 1.8 : 0.9;
    n_r = int(std::ceil(factor * nu_max)) + 24;
  }
  int n_th = 1;
  if (domain.kind == DomainKind::Disk) {
    int mult = (profile == QuadProfile::Dealiased) ? 6 : 2;
    n_th = mult * b.m_max_ + 16;
  }

  // Quadrature grid
  GaussRule radial = gauss_legendre(n_r, 0.0, R);
  b.n_radial_ = n_r;
  b.n_angular_ = n_th;
  const int nq = n_r * n_th;
  b.nodes_.resize(nq);
  b.weights_.resize(nq);
  switch (domain.kind) {
    case DomainKind::Interval:
      for (int i = 0; i < n_r; ++i) {
        b.nodes_[i] = Point{radial.nodes[i], 0.0};
        b.weights_[i] = radial.weights[i];
      }
      break;
    case DomainKind::BallRadial:
      for (int i = 0; i < n_r; ++i) {
        b.nodes_[i] = Point{radial.nodes[i], 0.0};
        b.weights_[i] = 4.0 * kPi * radial.weights[i] * radial.nodes[i] *
                        radial.nodes[i];
      }
      break;
    case DomainKind::Disk: {
      GaussRule ang = periodic_trapezoid(n_th);
      for (int i = 0; i < n_r; ++i)
        for (int j = 0; j < n_th; ++j) {
          int idx = i * n_th + j;
          b.nodes_[idx] = Point{radial.nodes[i], ang.nodes[j]};
          b.weights_[idx] =
              radial.weights[i] * radial.nodes[i] * ang.weights[j];
        }
      break;
    }
  }

  // Normalization and evaluation tables. Radial profiles are computed
  // once per (mode, radius) and tensored with the angular factors.
  for (auto& md : b.modes_) md.norm = norm_constant(domain, md);
  b.table_.resize(b.size(), nq);
  const bool grads = (profile == QuadProfile::Dealiased);
  if (grads) {
    b.table_dr_.resize(b.size(), nq);
    b.table_dth_.resize(b.size(), nq);
  }
  for (int kidx = 0; kidx < b.size(); ++kidx) {
    const Mode& md = b.modes_[kidx];
    for (int i = 0; i < n_r; ++i) {
      const double r = radial.nodes[i];
      const RadialEval re = radial_profile(domain, md, r);
      for (int j = 0; j < n_th; ++j) {
        const int idx = i * n_th + j;
        const double th = b.nodes_[idx].theta;
        const double ang = angular_factor(md, th);
        b.table_(kidx, idx) = md.norm * re.v * ang;
        if (grads) {
          b.table_dr_(kidx, idx) = md.norm * re.dv * ang;
          b.table_dth_(kidx, idx) =
              (md.m == 0) ? 0.0
                          : md.norm * (re.v / r) * angular_factor_prime(md, th);
        }
      }
    }
  }
  return b;
}

EigenBasis build_basis_cutoff(const Domain& domain, double lambda_max,
                              QuadProfile profile, RootCache* cache) {
  if (lambda_max <= 0.0)
    throw std::invalid_argument("lambda_max must be positive");
  const double R = domain.extent;
  const double X = lambda_max * R;
  int count = 1;
  switch (domain.kind) {
    case DomainKind::Interval:
      count += int(std::floor(X / kPi));
      break;
    case DomainKind::BallRadial: {
      int k = 1;
      while (sph_j0prime_zero(k) <= X) {
        ++count;
        ++k;
      }
      break;
    }
    case DomainKind::Disk: {
      RootCache local;
      RootCache& rc = cache ? *cache : local;
      for (int m = 0; m <= int(X) + 1; ++m) {
        for (int k = 1;; ++k) {
          if (rc.disk_root(m, k) > X) break;
          count += (m == 0) ? 1 : 2;
        }
      }
      break;
    }
  }
  return build_basis(domain, count, 0, profile, cache);
}

BoundaryGrid boundary_trace_grid(const EigenBasis& basis) {
  const Domain& dom = basis.domain();
  BoundaryGrid g;
  switch (dom.kind) {
    case DomainKind::Interval:
      g.nodes = {Point{0.0, 0.0}, Point{dom.extent, 0.0}};
      g.weights = Eigen::Vector2d(1.0, 1.0);
      break;
    case DomainKind::BallRadial:
      g.nodes = {Point{dom.extent, 0.0}};
      g.weights = Eigen::VectorXd::Constant(
          1, 4.0 * kPi * dom.extent * dom.extent);
      break;
    case DomainKind::Disk: {
      int n = std::max(64, 6 * basis.max_angular_order() + 16);
      GaussRule ang = periodic_trapezoid(n);
      g.nodes.resize(n);
      g.weights.resize(n);
      for (int j = 0; j < n; ++j) {
        g.nodes[j] = Point{dom.extent, ang.nodes[j]};
        g.weights[j] = dom.extent * ang.weights[j];
      }
      break;
    }
  }
  return g;
}

}  // namespace wavelab
