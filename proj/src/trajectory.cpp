#include "contractkit/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace contractkit {

DrivingSignal::DrivingSignal(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  for (std::size_t i = 1; i < pieces_.size(); ++i)
    if (!(pieces_[i].start > pieces_[i - 1].start))
      throw std::invalid_argument("driving signal piece start times must be strictly increasing");
}

DrivingSignal DrivingSignal::step_then_sine() {
  return DrivingSignal({{0.0, Kind::Constant, 1.0}, {5.0, Kind::ConstantPlusSine, 1.0}});
}

double DrivingSignal::operator()(double t) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                             [](double time, const Piece& p) { return time < p.start; });
  if (it == pieces_.begin()) return 0.0;
  const Piece& p = *std::prev(it);
  switch (p.kind) {
    case Kind::Constant: return p.offset;
    case Kind::ConstantPlusSine: return p.offset + std::sin(t - p.start);
  }
  return 0.0;
}

Trajectory integrate(const StateDerivative& f, std::vector<double> x0, double dt, double t_end) {
  if (!(dt > 0.0)) throw std::invalid_argument("step size must be positive");
  if (t_end < 0.0) throw std::invalid_argument("end time must be nonnegative");
  const std::size_t n = x0.size();
  const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));

  Trajectory traj;
  traj.dt = dt;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(std::move(x0));

  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) * dt;
    const std::vector<double>& x = traj.states.back();
    f(t, x, k1);
    for (std::size_t j = 0; j < n; ++j) tmp[j] = x[j] + 0.5 * dt * k1[j];
    f(t + 0.5 * dt, tmp, k2);
    for (std::size_t j = 0; j < n; ++j) tmp[j] = x[j] + 0.5 * dt * k2[j];
    f(t + 0.5 * dt, tmp, k3);
    for (std::size_t j = 0; j < n; ++j) tmp[j] = x[j] + dt * k3[j];
    f(t + dt, tmp, k4);

    std::vector<double> next(n);
    for (std::size_t j = 0; j < n; ++j)
      next[j] = x[j] + dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    traj.times.push_back(static_cast<double>(i + 1) * dt);
    traj.states.push_back(std::move(next));
  }
  return traj;
}

Trajectory integrate(const Matrix& A, const Vector& inject, const DrivingSignal& d,
                     const std::vector<double>& x0, double dt, double t_end) {
  const std::size_t n = A.rows();
  if (A.cols() != n) throw DimensionMismatch("A must be square", n, A.cols());
  if (inject.size() != n) throw DimensionMismatch("injection column length", n, inject.size());
  if (x0.size() != n) throw DimensionMismatch("initial state length", n, x0.size());

  std::vector<double> a(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = A(r, c).get_d();
  const std::vector<double> b = to_double(inject);

  auto rhs = [&](double t, std::span<const double> x, std::span<double> dx) {
    const double u = d(t);
    for (std::size_t r = 0; r < n; ++r) {
      double acc = b[r] * u;
      for (std::size_t c = 0; c < n; ++c) acc += a[r * n + c] * x[c];
      dx[r] = acc;
    }
  };
  return integrate(rhs, x0, dt, t_end);
}

void validate(const VehicleParams& p) {
  if (sgn(p.h) <= 0) throw std::invalid_argument("headway h must be positive");
  if (sgn(p.k) <= 0) throw std::invalid_argument("gain k must be positive");
  if (sgn(p.c) <= 0) throw std::invalid_argument("drag c must be positive");
}

VehicleModel vehicle_closed_loop(const VehicleParams& p) {
  validate(p);
  const Rational inv_h = 1 / p.h;
  VehicleModel m{Matrix(4, 4), Vector(4)};
  m.A(0, 1) = 1;
  m.A(1, 1) = -p.c;
  m.A(2, 3) = 1;
  m.A(3, 0) = p.k * inv_h;
  m.A(3, 1) = inv_h;
  m.A(3, 2) = -p.k * inv_h;
  m.A(3, 3) = -p.k - inv_h;
  m.inject[1] = 1;
  return m;
}

std::vector<double> spacing_error(const Trajectory& traj, double h) {
  std::vector<double> e;
  e.reserve(traj.states.size());
  for (const auto& x : traj.states) {
    if (x.size() != 4) throw DimensionMismatch("vehicle state dimension", 4, x.size());
    e.push_back(-x[0] + x[2] + h * x[3]);
  }
  return e;
}

VehicleExperiment run_vehicle_experiment(const VehicleParams& p, const std::vector<double>& x0,
                                         const DrivingSignal& profile, double dt, double t_end) {
  const VehicleModel model = vehicle_closed_loop(p);
  VehicleExperiment exp;
  exp.trajectory = integrate(model.A, model.inject, profile, x0, dt, t_end);
  exp.error = spacing_error(exp.trajectory, p.h.get_d());
  return exp;
}

void write_csv(std::ostream& os, const VehicleExperiment& exp) {
  os << "t,v1,v2,e\n";
  char line[160];
  const auto& tr = exp.trajectory;
  for (std::size_t i = 0; i < tr.times.size(); ++i) {
    std::snprintf(line, sizeof line, "%.9f,%.12f,%.12f,%.12f\n", tr.times[i], tr.states[i][1],
                  tr.states[i][3], exp.error[i]);
    os << line;
  }
}

}  // namespace contractkit
