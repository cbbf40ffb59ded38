#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavelab/cone.hpp"
#include "wavelab/spectral.hpp"

namespace wavelab {

// Solver state (u, du/dt) at time t, sharing one basis.
struct WaveState {
  SpectralField u;
  SpectralField v;
  double t = 0.0;
};

WaveState make_state(std::shared_ptr<const EigenBasis> basis,
                     Eigen::VectorXd u_coef, Eigen::VectorXd v_coef,
                     double t = 0.0);

// Raised when the blow-up guard trips (nonfinite coefficients or
// sup|u| beyond 1e6; with the defocusing sign this signals numerical
// instability, i.e. dt too large).
class BlowupError : public std::runtime_error {
 public:
  BlowupError(double time, const std::string& what)
      : std::runtime_error(what), time_(time) {}
  double time() const { return time_; }

 private:
  double time_;
};

// Exact spectral evolution of the linear Neumann wave equation from
// state.t to t_target (single step, any step size). The zero mode
// drifts as u0 + t u1.
WaveState linear_evolve(const WaveState& state, double t_target);

// Real pair (cos(t sqrt(-Lap)) f, sin(t sqrt(-Lap)) f) representing
// e^{it sqrt(-Lap_N)} f.
struct HalfwavePair {
  SpectralField re;
  SpectralField im;
};
HalfwavePair halfwave(const SpectralField& f, double t);

// Adjoint over a uniformly sampled window: int e^{-is sqrt(-Lap)} f(s) ds
// by trapezoid; returns the real pair (cos-integral, -sin-integral).
HalfwavePair halfwave_adjoint(const std::vector<double>& times,
                              const std::vector<SpectralField>& samples);

// One Strang step: half-step exact linear flow, exact potential kick
// v -> v - dt u^5, half-step linear flow.
WaveState nonlinear_step(const WaveState& state, double dt);

// Trace samples on the moving sphere {|x - x0| = -t} of one cone at
// one recorded time. For radial domains the sphere carries a single
// sample; on the Disk the points are Gauss nodes along the arc, with
// w_arc holding the spatial arc-length weights. gr is the derivative
// along the direction away from the vertex, gtan the in-slice
// perpendicular component.
struct LateralTraceSample {
  double t = 0.0;
  Eigen::VectorXd phi;  // direction angle from the vertex (Disk)
  Eigen::VectorXd w_arc;
  Eigen::VectorXd u, ut, gr, gtan;
  bool has_edge = false;
  double edge_u[2] = {0.0, 0.0};  // u at the arc endpoints on dOmega
};

struct ConeTraceSeries {
  ConeSpec cone;
  int n_arc = 0;
  std::vector<LateralTraceSample> samples;
};

struct BoundaryTraceSeries {
  BoundaryGrid grid;
  std::vector<double> times;
  std::vector<Eigen::VectorXd> u;
  std::vector<Eigen::VectorXd> ut;
};

struct RecorderSpec {
  double dt_record = 0.0;  // 0: record every step
  std::vector<ConeSpec> cones;
  bool record_boundary = false;
  int n_arc = 48;
};

// Time-sampled states at uniform dt_record plus optional boundary and
// cone-sphere traces.
class Trajectory {
 public:
  std::shared_ptr<const EigenBasis> basis;
  double dt = 0.0;
  double dt_record = 0.0;
  std::string scheme = "strang";
  std::vector<WaveState> states;
  std::vector<ConeTraceSeries> cones;
  std::optional<BoundaryTraceSeries> boundary;

  double t_begin() const { return states.front().t; }
  double t_end() const { return states.back().t; }
  // Index of the recorded state nearest to t (within half a recording
  // interval).
  int index_at(double t) const;
  const WaveState& state_at(double t) const { return states[index_at(t)]; }
  const ConeTraceSeries& cone_trace(const ConeSpec& cone) const;
};

// Strang-split integration from state.t to t_final with trace
// recording. dt must divide dt_record. Throws BlowupError on guard
// trip.
Trajectory evolve(const WaveState& state, double t_final, double dt,
                  const RecorderSpec& rec);

// Linear evolution plus Duhamel quadrature (trapezoid in s with exact
// propagator kernels). forcing[i] is f at time data.t + i dt and must
// cover every step: size = n_steps + 1.
Trajectory duhamel_solve(const WaveState& data,
                         const std::vector<SpectralField>& forcing, double dt,
                         const RecorderSpec& rec);

}  // namespace wavelab
