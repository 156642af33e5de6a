#pragma once

#include "flagjac/lie_engine.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace flagjac {

using Matrix12 = Eigen::Matrix<double, 2 * kDim, 2 * kDim>;

/// Constant data of the Jacobi equation along one geodesic, in the parallel
/// frame: J(t) = exp(eps t Lambda) J0 exp(-eps t Lambda).
struct JacobiSystem {
    Matrix6 lambda = Matrix6::Zero();  ///< eps * Lambda_x
    SymMatrix6 j0 = SymMatrix6::Zero();

    static JacobiSystem from_calibration(const Vector6& x, const Calibration& cal);
    /// Test hook: J(t) == J for all t.
    static JacobiSystem constant(const SymMatrix6& j);
};

enum class OperatorModel { conjugation, taylor };

/// J(t); the Taylor model sums t^k/k! J(k) for k <= taylor_order.
SymMatrix6 operator_at_t(const Vector6& x, double t, const Calibration& cal, OperatorModel model = OperatorModel::conjugation,
                         int taylor_order = 8);
SymMatrix6 operator_at_t(const JacobiSystem& sys, double t);

enum class FieldMethod { constcoef, rk4 };

std::string_view method_name(FieldMethod m);

struct FieldTrajectory {
    FieldMethod method = FieldMethod::constcoef;
    double h = 0.0;
    std::vector<double> t;
    std::vector<Eigen::MatrixXd> y;   ///< 6 x c per grid point
    std::vector<Eigen::MatrixXd> dy;  ///< Y'
};

class StepRejected : public std::runtime_error {
public:
    StepRejected(double t, double err)
        : std::runtime_error("rk4 step rejected at t=" + std::to_string(t) + " (error estimate " + std::to_string(err) + ")"),
          t_(t),
          err_(err) {}
    double t() const { return t_; }
    double error() const { return err_; }

private:
    double t_;
    double err_;
};

struct SolveOptions {
    double t_max = 6.283185307179586;
    double h = 1e-3;
    FieldMethod method = FieldMethod::constcoef;
    double rk4_tol = 1e-10;  ///< per-step Richardson estimate bound (relative to state norm)
};

/// Y'' + J(t) Y = 0 with Y(0) = Y0, Y'(0) = V0 (6 x c each). t_max may be
/// negative (backward integration); |t_max| <= 100.
FieldTrajectory solve_fields(const JacobiSystem& sys, const Eigen::MatrixXd& y0, const Eigen::MatrixXd& v0, const SolveOptions& opt);

/// Y'(t)^T Y(t) - Y(t)^T Y'(t) (c x c) at every grid point.
std::vector<Eigen::MatrixXd> wronskian(const FieldTrajectory& tr);
/// max over the grid of |W(t) - W(0)|.
double wronskian_drift(const FieldTrajectory& tr);

/// Propagator of the first-order system for the reduced variable Z.
Matrix12 reduced_generator(const JacobiSystem& sys);

/// Fundamental solution M(t) with M(0) = 0, M'(0) = I, and M'(t).
std::pair<Matrix6, Matrix6> fundamental_at(const JacobiSystem& sys, double t);

struct ConjugatePoint {
    double t;
    int multiplicity;
    double indicator;  ///< sigma_min(M) / |[M; M']| at t
};

struct ConjugateOptions {
    double t_max = 10.0;
    double h = 1e-2;      ///< scan step
    double tol = 1e-10;   ///< location tolerance
    double rank_tol = 1e-7;
};

/// Zeros of det M(t) on (0, t_max]. Each scan interval is searched by counting
/// eigenvalue-1 crossings of the unitary (M' + iM)(M' - iM)^-1, so clustered
/// zeros are resolved independently of the scan step; multiplicity is the
/// number of singular values of M below rank_tol * |[M; M']|.
std::vector<ConjugatePoint> conjugate_points(const JacobiSystem& sys, const ConjugateOptions& opt);

}  // namespace flagjac
