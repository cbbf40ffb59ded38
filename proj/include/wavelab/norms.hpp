#pragma once

#include <limits>

#include "wavelab/spectral.hpp"

namespace wavelab {

class Trajectory;

struct TimeWindow {
  double t0 = 0.0;
  double t1 = 1.0;
};

// Norm descriptor. q and p may be infinity (sampled maxima, a lower
// bound of the true sup); s is restricted to the implemented range
// [-2, 3].
struct NormSpec {
  enum class Kind { Lq, SobolevHs, FractionalWsp, MixedLpLq, MixedLpWsp };

  Kind kind = Kind::Lq;
  double q = 2.0;  // spatial exponent (Lq) or W^{s,p} integrability p
  double s = 0.0;  // smoothness order
  double p = 2.0;  // outer (time) exponent for mixed norms
  TimeWindow window;

  static constexpr double inf = std::numeric_limits<double>::infinity();

  static NormSpec Lq(double q);
  static NormSpec Hs(double s);
  static NormSpec Wsp(double s, double p);
  static NormSpec LpLq(double p, double q, TimeWindow w);
  static NormSpec LpWsp(double p, double s, double q, TimeWindow w);

  void validate() const;
};

// Spatial norms of a single field.
double norm(const SpectralField& f, const NormSpec& spec);

// Mixed space-time norms over the recorded states of a trajectory
// (uniform time grid, trapezoid weights; max over samples for p = inf).
double norm(const Trajectory& traj, const NormSpec& spec);

}  // namespace wavelab
