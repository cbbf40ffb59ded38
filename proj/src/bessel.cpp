#include "wavelab/bessel.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wavelab {

double bessel_j(int m, double x) { return std::cyl_bessel_j(double(m), x); }

double bessel_j_prime(int m, double x) {
  if (m == 0) return -std::cyl_bessel_j(1.0, x);
  return 0.5 * (std::cyl_bessel_j(double(m - 1), x) -
                std::cyl_bessel_j(double(m + 1), x));
}

double sph_j0(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
  }
  return std::sin(x) / x;
}

double sph_j0_prime(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return -x / 3.0 * (1.0 - x2 / 10.0);
  }
  return (x * std::cos(x) - std::sin(x)) / (x * x);
}

double sph_j0_second(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return -1.0 / 3.0 + x2 / 10.0 - x2 * x2 / 168.0;
  }
  // j0'' = -j0 - (2/x) j0'
  return -sph_j0(x) - 2.0 / x * sph_j0_prime(x);
}

namespace {

// Bisection followed by Newton polish on f; the bracket must contain
// exactly one simple zero.
template <typename F, typename DF>
double refine_root(F f, DF df, double lo, double hi, const char* what) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0) {
    throw std::runtime_error(std::string("root finder: bracket without sign "
                                         "change for ") +
                             what);
  }
  for (int iter = 0; iter < 80; ++iter) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if (flo * fm < 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
    if (hi - lo < 1e-9 * (1.0 + std::abs(mid))) break;
  }
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 30; ++iter) {
    double fx = f(x);
    double d = df(x);
    if (d == 0.0) break;
    double step = fx / d;
    double xn = x - step;
    if (xn < lo || xn > hi) {  // fall back to the verified bracket
      xn = 0.5 * (lo + hi);
    }
    if (std::abs(xn - x) < 1e-15 * (1.0 + std::abs(x))) {
      x = xn;
      break;
    }
    x = xn;
  }
  return x;
}

}  // namespace

double bessel_jprime_zero(int m, int k) {
  if (k < 1) throw std::invalid_argument("bessel_jprime_zero: k must be >= 1");
  auto f = [m](double x) { return bessel_j_prime(m, x); };
  // J_m'' from the Bessel ODE: J'' = -J' / x - (1 - m^2/x^2) J
  auto df = [m](double x) {
    return -bessel_j_prime(m, x) / x -
           (1.0 - double(m) * m / (x * x)) * bessel_j(m, x);
  };
  // Scan for sign changes from just above the turning point x ~ m.
  // Zeros of J_m' are separated by at least ~pi/2 in this range, so a
  // pi/8 step cannot skip a pair.
  const double step = std::numbers::pi / 8.0;
  double x0 = (m == 0) ? 0.5 * step : std::max(0.25, double(m) * 0.5);
  double prev = f(x0);
  int found = 0;
  double x = x0;
  const double x_max = x0 + (k + 3) * std::numbers::pi + double(m) + 10.0;
  while (x < x_max) {
    double xn = x + step;
    double fn = f(xn);
    if (prev == 0.0) {
      ++found;
      if (found == k) return x;
    } else if (prev * fn < 0.0) {
      ++found;
      if (found == k) {
        char what[64];
        std::snprintf(what, sizeof(what), "J_%d' zero %d", m, k);
        return refine_root(f, df, x, xn, what);
      }
    }
    x = xn;
    prev = fn;
  }
  throw std::runtime_error("bessel_jprime_zero: scan exhausted for m=" +
                           std::to_string(m) + " k=" + std::to_string(k));
}

double sph_j0prime_zero(int k) {
  if (k < 1) throw std::invalid_argument("sph_j0prime_zero: k must be >= 1");
  // Roots of tan(x) = x via g(x) = sin(x) - x cos(x), which has exactly
  // one zero in (k*pi, (k + 1/2)*pi).
  auto g = [](double x) { return std::sin(x) - x * std::cos(x); };
  auto dg = [](double x) { return x * std::sin(x); };
  const double pi = std::numbers::pi;
  double lo = k * pi + 1e-12;
  double hi = (k + 0.5) * pi - 1e-12;
  return refine_root(g, dg, lo, hi, "tan x = x");
}

RootCache::RootCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    Entry e;
    if (ss >> e.kind >> e.m >> e.k >> e.root) entries_.push_back(e);
  }
}

double* RootCache::find(const std::string& kind, int m, int k) {
  for (auto& e : entries_)
    if (e.kind == kind && e.m == m && e.k == k) return &e.root;
  return nullptr;
}

double RootCache::disk_root(int m, int k) {
  if (double* r = find("disk", m, k)) return *r;
  double root = bessel_jprime_zero(m, k);
  entries_.push_back({"disk", m, k, root});
  dirty_ = true;
  return root;
}

double RootCache::ball_root(int k) {
  if (double* r = find("ball", 0, k)) return *r;
  double root = sph_j0prime_zero(k);
  entries_.push_back({"ball", 0, k, root});
  dirty_ = true;
  return root;
}

void RootCache::save() const {
  if (path_.empty() || !dirty_) return;
  std::ofstream out(path_);
  for (const auto& e : entries_) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s %d %d %.17g\n", e.kind.c_str(), e.m,
                  e.k, e.root);
    out << buf;
  }
}

}  // namespace wavelab
