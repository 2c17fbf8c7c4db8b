#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "contractkit/matrix.hpp"

namespace contractkit {

/// Scalar signal built from pieces starting at increasing times. Piece k is
/// active on [start_k, start_{k+1}); the last one runs forever. Before the
/// first start the signal is 0.
class DrivingSignal {
 public:
  enum class Kind { Constant, ConstantPlusSine };
  struct Piece {
    double start = 0.0;
    Kind kind = Kind::Constant;
    double offset = 0.0;  // c in `c` or `c + sin(t - start)`
  };

  DrivingSignal() = default;
  explicit DrivingSignal(std::vector<Piece> pieces);

  static DrivingSignal constant(double c) { return DrivingSignal({{0.0, Kind::Constant, c}}); }
  /// 1 on [0, 5), 1 + sin(t - 5) afterwards.
  static DrivingSignal step_then_sine();

  double operator()(double t) const;
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }

 private:
  std::vector<Piece> pieces_;
};

struct Trajectory {
  double dt = 0.0;
  std::vector<double> times;
  std::vector<std::vector<double>> states;
};

using StateDerivative = std::function<void(double t, std::span<const double> x, std::span<double> dx)>;

/// Classical fixed-step RK4 on the grid t_i = i * dt, i = 0..ceil(t_end/dt).
Trajectory integrate(const StateDerivative& f, std::vector<double> x0, double dt, double t_end);

/// x' = A x + inject * d(t)
Trajectory integrate(const Matrix& A, const Vector& inject, const DrivingSignal& d,
                     const std::vector<double>& x0, double dt, double t_end);

/// Headway h, controller gain k, drag c; all strictly positive.
struct VehicleParams {
  Rational h{1};
  Rational k{1, 4};
  Rational c{1, 2};
};

void validate(const VehicleParams& p);

/// Two-vehicle closed loop in state order (s1, v1, s2, v2):
///   s1' = v1, v1' = -c v1 + d1, s2' = v2,
///   v2' = (v1 - v2)/h + k (s1 - s2 - h v2)/h.
struct VehicleModel {
  Matrix A;       // 4 x 4
  Vector inject;  // d1 enters v1' only
};

VehicleModel vehicle_closed_loop(const VehicleParams& p);

/// e = -s1 + s2 + h v2 per sample.
std::vector<double> spacing_error(const Trajectory& traj, double h);

struct VehicleExperiment {
  Trajectory trajectory;
  std::vector<double> error;
};

VehicleExperiment run_vehicle_experiment(const VehicleParams& p, const std::vector<double>& x0,
                                         const DrivingSignal& profile, double dt, double t_end);

/// Header `t,v1,v2,e`, one row per grid point.
void write_csv(std::ostream& os, const VehicleExperiment& exp);

}  // namespace contractkit
