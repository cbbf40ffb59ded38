#include "wavelab/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace wavelab {

SpectralField::SpectralField(std::shared_ptr<const EigenBasis> basis,
                             Eigen::VectorXd coef)
    : basis_(std::move(basis)), c_(std::move(coef)) {
  if (!basis_) throw std::invalid_argument("SpectralField: null basis");
  if (c_.size() != basis_->size())
    throw std::invalid_argument(
        "SpectralField: coefficient count does not match basis");
}

SpectralField SpectralField::zero(std::shared_ptr<const EigenBasis> basis) {
  int n = basis->size();
  return SpectralField(std::move(basis), Eigen::VectorXd::Zero(n));
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  if (basis_.get() != o.basis_.get())
    throw std::invalid_argument("field arithmetic across different bases");
  c_ += o.c_;
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  if (basis_.get() != o.basis_.get())
    throw std::invalid_argument("field arithmetic across different bases");
  c_ -= o.c_;
  return *this;
}

SpectralField& SpectralField::operator*=(double a) {
  c_ *= a;
  return *this;
}

SpectralField analyze(std::shared_ptr<const EigenBasis> basis,
                      const Eigen::VectorXd& grid_values) {
  Eigen::VectorXd c = basis->analyze_values(grid_values);
  return SpectralField(std::move(basis), std::move(c));
}

Eigen::VectorXd synthesize(const SpectralField& f) {
  return f.basis().synth_values(f.coef());
}

double synthesize_at(const SpectralField& f, const Point& p) {
  const EigenBasis& b = f.basis();
  double s = 0.0;
  for (int k = 0; k < b.size(); ++k) s += f.coef()[k] * b.value(k, p);
  return s;
}

Eigen::VectorXd synthesize_at(const SpectralField& f,
                              std::span<const Point> pts) {
  Eigen::VectorXd out(pts.size());
  for (size_t i = 0; i < pts.size(); ++i)
    out[i] = synthesize_at(f, pts[i]);
  return out;
}

void gradient_at(const SpectralField& f, const Point& p, double* d_r,
                 double* d_theta) {
  const EigenBasis& b = f.basis();
  double gr = 0.0, gt = 0.0;
  for (int k = 0; k < b.size(); ++k) {
    double mr, mt;
    b.gradient(k, p, &mr, &mt);
    gr += f.coef()[k] * mr;
    gt += f.coef()[k] * mt;
  }
  *d_r = gr;
  if (d_theta) *d_theta = gt;
}

void synthesize_gradient(const SpectralField& f, Eigen::VectorXd& d_r,
                         Eigen::VectorXd& d_theta) {
  f.basis().synth_gradients(f.coef(), d_r, d_theta);
}

double radial_second_at(const SpectralField& f, const Point& p) {
  const EigenBasis& b = f.basis();
  double s = 0.0;
  for (int k = 0; k < b.size(); ++k)
    s += f.coef()[k] * b.radial_second(k, p);
  return s;
}

SpectralField spectral_multiplier(const SpectralField& f,
                                  const std::function<double(double)>& m) {
  Eigen::VectorXd c = f.coef();
  for (int k = 0; k < c.size(); ++k) {
    double v = m(f.basis().mu(k));
    if (!std::isfinite(v))
      throw std::domain_error("spectral multiplier not finite at mu = " +
                              std::to_string(f.basis().mu(k)));
    c[k] *= v;
  }
  return SpectralField(f.basis_ptr(), std::move(c));
}

SpectralField halfwave_cos(const SpectralField& f, double t) {
  return spectral_multiplier(
      f, [t](double mu) { return std::cos(t * std::sqrt(mu)); });
}

SpectralField halfwave_sin_over(const SpectralField& f, double t) {
  return spectral_multiplier(f, [t](double mu) {
    if (mu == 0.0) return t;  // lim sin(t w)/w as w -> 0
    double w = std::sqrt(mu);
    return std::sin(t * w) / w;
  });
}

SpectralField fractional_power(const SpectralField& f, double s) {
  Eigen::VectorXd c = f.coef();
  for (int k = 0; k < c.size(); ++k) {
    double mu = f.basis().mu(k);
    if (mu == 0.0) {
      if (s > 0.0) {
        c[k] = 0.0;
      } else if (s < 0.0 && c[k] != 0.0) {
        throw std::domain_error(
            "fractional_power: negative power of -Lap_N applied to a field "
            "with a nonzero mean (zero mode)");
      }
      continue;
    }
    c[k] *= std::pow(mu, 0.5 * s);
  }
  return SpectralField(f.basis_ptr(), std::move(c));
}

SpectralField bessel_power(const SpectralField& f, double s) {
  return spectral_multiplier(
      f, [s](double mu) { return std::pow(1.0 + mu, 0.5 * s); });
}

std::vector<int> cluster_indices(const EigenBasis& basis, double lambda) {
  std::vector<int> idx;
  for (int k = 0; k < basis.size(); ++k) {
    double sq = std::sqrt(basis.mu(k));
    if (sq >= lambda && sq < lambda + 1.0) idx.push_back(k);
  }
  return idx;
}

SpectralField projector(const SpectralField& f, double lambda) {
  if (lambda < 0.0)
    throw std::invalid_argument("projector: lambda must be >= 0");
  Eigen::VectorXd c = Eigen::VectorXd::Zero(f.size());
  for (int k = 0; k < f.size(); ++k) {
    double sq = std::sqrt(f.basis().mu(k));
    if (sq >= lambda && sq < lambda + 1.0) c[k] = f.coef()[k];
  }
  return SpectralField(f.basis_ptr(), std::move(c));
}

SpectralField quintic(const SpectralField& f) {
  Eigen::VectorXd u = synthesize(f);
  Eigen::VectorXd u5 = u.array().pow(5).matrix();
  return analyze(f.basis_ptr(), u5);
}

}  // namespace wavelab
