#include "wavelab/solver.hpp"

#include <cmath>
#include <numbers>

#include "wavelab/gauss.hpp"

namespace wavelab {

namespace {
constexpr double kGuardSup = 1e6;
}

WaveState make_state(std::shared_ptr<const EigenBasis> basis,
                     Eigen::VectorXd u_coef, Eigen::VectorXd v_coef,
                     double t) {
  SpectralField u(basis, std::move(u_coef));
  SpectralField v(std::move(basis), std::move(v_coef));
  return WaveState{std::move(u), std::move(v), t};
}

namespace {

// Per-mode linear propagator factors for a time step tau.
struct LinearFlow {
  Eigen::VectorXd cos_wt;      // cos(w tau)
  Eigen::VectorXd sin_over_w;  // sin(w tau)/w, = tau at w = 0
  Eigen::VectorXd w_sin;       // w sin(w tau)

  LinearFlow(const EigenBasis& basis, double tau) {
    const int n = basis.size();
    cos_wt.resize(n);
    sin_over_w.resize(n);
    w_sin.resize(n);
    for (int k = 0; k < n; ++k) {
      double w = std::sqrt(basis.mu(k));
      if (w == 0.0) {
        cos_wt[k] = 1.0;
        sin_over_w[k] = tau;
        w_sin[k] = 0.0;
      } else {
        cos_wt[k] = std::cos(w * tau);
        sin_over_w[k] = std::sin(w * tau) / w;
        w_sin[k] = w * std::sin(w * tau);
      }
    }
  }

  void apply(Eigen::VectorXd& u, Eigen::VectorXd& v) const {
    Eigen::VectorXd un =
        cos_wt.cwiseProduct(u) + sin_over_w.cwiseProduct(v);
    v = cos_wt.cwiseProduct(v) - w_sin.cwiseProduct(u);
    u = std::move(un);
  }
};

void check_finite(const Eigen::VectorXd& u_grid, const Eigen::VectorXd& uc,
                  double t) {
  if (!uc.allFinite())
    throw BlowupError(t, "blow-up guard: nonfinite coefficients at t = " +
                             std::to_string(t));
  double sup = u_grid.cwiseAbs().maxCoeff();
  if (!(sup <= kGuardSup))
    throw BlowupError(t, "blow-up guard: sup|u| = " + std::to_string(sup) +
                             " at t = " + std::to_string(t));
}

}  // namespace

WaveState linear_evolve(const WaveState& state, double t_target) {
  LinearFlow flow(state.u.basis(), t_target - state.t);
  Eigen::VectorXd u = state.u.coef();
  Eigen::VectorXd v = state.v.coef();
  flow.apply(u, v);
  return make_state(state.u.basis_ptr(), std::move(u), std::move(v),
                    t_target);
}

HalfwavePair halfwave(const SpectralField& f, double t) {
  SpectralField re = halfwave_cos(f, t);
  SpectralField im = spectral_multiplier(
      f, [t](double mu) { return std::sin(t * std::sqrt(mu)); });
  return HalfwavePair{std::move(re), std::move(im)};
}

HalfwavePair halfwave_adjoint(const std::vector<double>& times,
                              const std::vector<SpectralField>& samples) {
  if (times.size() != samples.size() || times.size() < 2)
    throw std::invalid_argument("halfwave_adjoint: bad sample layout");
  auto basis = samples[0].basis_ptr();
  Eigen::VectorXd re = Eigen::VectorXd::Zero(basis->size());
  Eigen::VectorXd im = Eigen::VectorXd::Zero(basis->size());
  const int n = static_cast<int>(times.size());
  for (int i = 0; i < n; ++i) {
    double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    w *= (times.back() - times.front()) / (n - 1);
    HalfwavePair p = halfwave(samples[i], -times[i]);
    re += w * p.re.coef();
    im += w * p.im.coef();
  }
  return HalfwavePair{SpectralField(basis, std::move(re)),
                      SpectralField(basis, std::move(im))};
}

WaveState nonlinear_step(const WaveState& state, double dt) {
  if (!(dt != 0.0)) throw std::invalid_argument("nonlinear_step: dt == 0");
  LinearFlow half(state.u.basis(), 0.5 * dt);
  Eigen::VectorXd u = state.u.coef();
  Eigen::VectorXd v = state.v.coef();
  half.apply(u, v);
  const EigenBasis& b = state.u.basis();
  Eigen::VectorXd ug = b.synth_values(u);
  check_finite(ug, u, state.t + 0.5 * dt);
  v -= dt * b.analyze_values(ug.array().pow(5).matrix());
  half.apply(u, v);
  return make_state(state.u.basis_ptr(), std::move(u), std::move(v),
                    state.t + dt);
}

int Trajectory::index_at(double t) const {
  if (states.empty()) throw std::runtime_error("empty trajectory");
  double step = dt_record > 0 ? dt_record : dt;
  int i = static_cast<int>(std::lround((t - states.front().t) / step));
  if (i < 0 || i >= static_cast<int>(states.size()) ||
      std::abs(states[i].t - t) > 0.5 * step + 1e-12)
    throw std::invalid_argument("time " + std::to_string(t) +
                                " not covered by the trajectory");
  return i;
}

const ConeTraceSeries& Trajectory::cone_trace(const ConeSpec& cone) const {
  for (const auto& ct : cones) {
    if (std::abs(ct.cone.S - cone.S) < 1e-12 &&
        std::abs(ct.cone.T - cone.T) < 1e-12 &&
        std::abs(ct.cone.vertex.r - cone.vertex.r) < 1e-12 &&
        std::abs(ct.cone.vertex.theta - cone.vertex.theta) < 1e-12)
      return ct;
  }
  throw std::invalid_argument("cone was not registered during evolution");
}

namespace {

// Records the sphere/arc trace of one cone at the current time.
LateralTraceSample record_lateral(const WaveState& st, const ConeSpec& cone,
                                  int n_arc) {
  const EigenBasis& basis = st.u.basis();
  const Domain& dom = basis.domain();
  LateralTraceSample ls;
  ls.t = st.t;
  const double rho = -st.t;
  if (rho <= 0.0 || (dom.kind != DomainKind::Interval && rho > dom.extent &&
                     cone.vertex.r == 0.0))
    return ls;  // sphere outside the domain or degenerate

  switch (dom.kind) {
    case DomainKind::Interval: {
      std::vector<double> xs, ds;
      for (double s : {-1.0, 1.0}) {
        double xx = cone.vertex.r + s * rho;
        if (xx >= 0.0 && xx <= dom.extent) {
          xs.push_back(xx);
          ds.push_back(s);
        }
      }
      int n = static_cast<int>(xs.size());
      ls.phi.resize(n);
      ls.w_arc = Eigen::VectorXd::Ones(n);
      ls.u.resize(n);
      ls.ut.resize(n);
      ls.gr.resize(n);
      ls.gtan = Eigen::VectorXd::Zero(n);
      for (int i = 0; i < n; ++i) {
        Point p{xs[i], 0.0};
        ls.phi[i] = ds[i] > 0 ? 0.0 : std::numbers::pi;
        ls.u[i] = synthesize_at(st.u, p);
        ls.ut[i] = synthesize_at(st.v, p);
        double dr, dth;
        gradient_at(st.u, p, &dr, &dth);
        ls.gr[i] = ds[i] * dr;  // derivative away from the vertex
      }
      break;
    }
    case DomainKind::BallRadial: {
      ls.phi = Eigen::VectorXd::Zero(1);
      ls.w_arc = Eigen::VectorXd::Constant(1, 4.0 * std::numbers::pi * rho *
                                                  rho);
      ls.u.resize(1);
      ls.ut.resize(1);
      ls.gr.resize(1);
      ls.gtan = Eigen::VectorXd::Zero(1);
      Point p{rho, 0.0};
      ls.u[0] = synthesize_at(st.u, p);
      ls.ut[0] = synthesize_at(st.v, p);
      double dr, dth;
      gradient_at(st.u, p, &dr, &dth);
      ls.gr[0] = dr;
      break;
    }
    case DomainKind::Disk: {
      const double R = dom.extent;
      const bool bdry = std::abs(cone.vertex.r - R) < 1e-12 * R;
      double phimax;
      double base;
      if (bdry) {
        phimax = disk_arc_halfwidth(rho, R);
        base = cone.vertex.theta + std::numbers::pi;
        if (phimax <= 0.0) return ls;
      } else {
        if (cone.vertex.r + rho > R) return ls;
        phimax = std::numbers::pi;
        base = 0.0;
      }
      GaussRule ang = gauss_legendre(n_arc, -phimax, phimax);
      ls.phi.resize(n_arc);
      ls.w_arc.resize(n_arc);
      ls.u.resize(n_arc);
      ls.ut.resize(n_arc);
      ls.gr.resize(n_arc);
      ls.gtan.resize(n_arc);
      for (int j = 0; j < n_arc; ++j) {
        double phi = base + ang.nodes[j];
        double px = cone.vertex.x() + rho * std::cos(phi);
        double py = cone.vertex.y() + rho * std::sin(phi);
        Point p{std::hypot(px, py), std::atan2(py, px)};
        ls.phi[j] = phi;
        ls.w_arc[j] = rho * ang.weights[j];
        ls.u[j] = synthesize_at(st.u, p);
        ls.ut[j] = synthesize_at(st.v, p);
        double dr, dth;
        gradient_at(st.u, p, &dr, &dth);
        double gx = dr * std::cos(p.theta) - dth * std::sin(p.theta);
        double gy = dr * std::sin(p.theta) + dth * std::cos(p.theta);
        ls.gr[j] = gx * std::cos(phi) + gy * std::sin(phi);
        ls.gtan[j] = -gx * std::sin(phi) + gy * std::cos(phi);
      }
      if (bdry) {
        ls.has_edge = true;
        double beta = 2.0 * std::asin(rho / (2.0 * R));
        for (int s = 0; s < 2; ++s) {
          double th = cone.vertex.theta + (s == 0 ? -beta : beta);
          ls.edge_u[s] = synthesize_at(st.u, Point{R, th});
        }
      }
      break;
    }
  }
  return ls;
}

void record_all(const WaveState& st, const RecorderSpec& rec,
                Trajectory& traj) {
  traj.states.push_back(st);
  for (size_t c = 0; c < rec.cones.size(); ++c)
    traj.cones[c].samples.push_back(
        record_lateral(st, rec.cones[c], rec.n_arc));
  if (traj.boundary) {
    auto& b = *traj.boundary;
    b.times.push_back(st.t);
    Eigen::VectorXd u(b.grid.nodes.size()), ut(b.grid.nodes.size());
    for (size_t j = 0; j < b.grid.nodes.size(); ++j) {
      u[j] = synthesize_at(st.u, b.grid.nodes[j]);
      ut[j] = synthesize_at(st.v, b.grid.nodes[j]);
    }
    b.u.push_back(std::move(u));
    b.ut.push_back(std::move(ut));
  }
}

Trajectory make_trajectory(const WaveState& state, double dt,
                           const RecorderSpec& rec) {
  Trajectory traj;
  traj.basis = state.u.basis_ptr();
  traj.dt = dt;
  traj.dt_record = rec.dt_record > 0 ? rec.dt_record : dt;
  for (const auto& cone : rec.cones) {
    validate_cone(cone, traj.basis->domain());
    traj.cones.push_back(ConeTraceSeries{cone, rec.n_arc, {}});
  }
  if (rec.record_boundary)
    traj.boundary =
        BoundaryTraceSeries{boundary_trace_grid(*traj.basis), {}, {}, {}};
  return traj;
}

int substeps_per_record(double dt, double dt_record) {
  if (dt_record <= 0) return 1;
  int n = static_cast<int>(std::lround(dt_record / dt));
  if (n < 1 || std::abs(n * dt - dt_record) > 1e-9 * dt_record)
    throw std::invalid_argument("dt must divide dt_record");
  return n;
}

}  // namespace

Trajectory evolve(const WaveState& state, double t_final, double dt,
                  const RecorderSpec& rec) {
  if (dt <= 0) throw std::invalid_argument("evolve: dt must be positive");
  if (t_final <= state.t)
    throw std::invalid_argument("evolve: t_final must exceed state time");
  const int n_sub = substeps_per_record(dt, rec.dt_record);
  const long total = std::lround((t_final - state.t) / dt);
  if (std::abs(total * dt - (t_final - state.t)) > 1e-9)
    throw std::invalid_argument("evolve: dt must divide the time span");

  Trajectory traj = make_trajectory(state, dt, rec);
  WaveState st = state;
  record_all(st, rec, traj);
  for (long i = 0; i < total; ++i) {
    st = nonlinear_step(st, dt);
    // stamp the exact time to avoid drift in long runs
    st.t = state.t + (i + 1) * dt;
    if ((i + 1) % n_sub == 0 || i + 1 == total) record_all(st, rec, traj);
  }
  return traj;
}

Trajectory duhamel_solve(const WaveState& data,
                         const std::vector<SpectralField>& forcing, double dt,
                         const RecorderSpec& rec) {
  if (dt <= 0)
    throw std::invalid_argument("duhamel_solve: dt must be positive");
  if (forcing.size() < 2)
    throw std::invalid_argument("duhamel_solve: need at least two samples");
  const int n_steps = static_cast<int>(forcing.size()) - 1;
  for (const auto& f : forcing)
    if (f.basis_ptr().get() != data.u.basis_ptr().get())
      throw std::invalid_argument("duhamel_solve: forcing-grid mismatch");
  const int n_sub = substeps_per_record(dt, rec.dt_record);

  Trajectory traj = make_trajectory(data, dt, rec);
  LinearFlow full(data.u.basis(), dt);
  Eigen::VectorXd u = data.u.coef();
  Eigen::VectorXd v = data.v.coef();
  Eigen::VectorXd sin_over_w(u.size()), cos_w(u.size());
  for (int k = 0; k < u.size(); ++k) {
    double w = std::sqrt(data.u.basis().mu(k));
    sin_over_w[k] = (w == 0.0) ? dt : std::sin(w * dt) / w;
    cos_w[k] = std::cos(w * dt);
  }
  WaveState st = data;
  record_all(st, rec, traj);
  for (int i = 0; i < n_steps; ++i) {
    full.apply(u, v);
    // trapezoid of the Duhamel integral over [t_i, t_{i+1}]: the lag-dt
    // kernel hits f_i, the lag-0 kernel hits f_{i+1} (only in v)
    u += 0.5 * dt * sin_over_w.cwiseProduct(forcing[i].coef());
    v += 0.5 * dt *
         (cos_w.cwiseProduct(forcing[i].coef()) + forcing[i + 1].coef());
    st = make_state(data.u.basis_ptr(), u, v, data.t + (i + 1) * dt);
    if ((i + 1) % n_sub == 0 || i + 1 == n_steps) record_all(st, rec, traj);
  }
  return traj;
}

}  // namespace wavelab
