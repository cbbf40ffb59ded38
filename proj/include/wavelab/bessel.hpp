#pragma once

#include <string>
#include <vector>

namespace wavelab {

// Cylinder Bessel J_m and its derivative.
double bessel_j(int m, double x);
double bessel_j_prime(int m, double x);

// Spherical j_0(x) = sin(x)/x and j_0'(x), stable near x = 0.
double sph_j0(double x);
double sph_j0_prime(double x);
double sph_j0_second(double x);

// k-th positive zero of J_m' (k >= 1), bracketed by a sign scan and
// polished by bisection + Newton to ~1e-13 relative.
// For m = 0 the zero at x = 0 is not counted.
double bessel_jprime_zero(int m, int k);

// k-th positive root of tan(x) = x, i.e. zero of j_0' (k >= 1).
double sph_j0prime_zero(int k);

// Plain-text root cache: lines "kind m k root" with 17 significant
// digits, kind in {disk, ball}. Missing file means an empty cache.
class RootCache {
 public:
  RootCache() = default;
  explicit RootCache(std::string path);
  // Returns a cached root or computes (and stores) it.
  double disk_root(int m, int k);
  double ball_root(int k);
  void save() const;

 private:
  struct Entry {
    std::string kind;
    int m, k;
    double root;
  };
  std::string path_;
  std::vector<Entry> entries_;
  bool dirty_ = false;
  double* find(const std::string& kind, int m, int k);
};

}  // namespace wavelab
