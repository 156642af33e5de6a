#include "flagjac/jacobi_fields.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

namespace flagjac {

namespace {

constexpr int kReanchor = 256;

std::size_t grid_steps(double t_max, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("step size must be positive");
    if (!(std::abs(t_max) <= 100.0)) throw std::invalid_argument("|t_max| must not exceed 100");
    return static_cast<std::size_t>(std::max<long>(1, std::lround(std::abs(t_max) / h)));
}

Matrix6 expm6(const Matrix6& a) { return a.exp(); }

SymMatrix6 conjugate(const Matrix6& e, const SymMatrix6& j) {
    SymMatrix6 r = e * j * e.transpose();
    return 0.5 * (r + r.transpose());
}

// Eigenangles of U = (M' + iM)(M' - iM)^-1, sorted. U is unitary and has the
// eigenvalue 1 exactly where M is singular; at such a crossing the angle
// always moves upward through 0, so net crossings count conjugate points.
using Angles = std::array<double, kDim>;

Angles lagrangian_angles(const Matrix6& m, const Matrix6& dm) {
    using CMatrix = Eigen::Matrix<std::complex<double>, kDim, kDim>;
    const CMatrix c = dm.cast<std::complex<double>>() + std::complex<double>(0.0, 1.0) * m.cast<std::complex<double>>();
    const CMatrix u = c * c.conjugate().inverse();
    Eigen::ComplexEigenSolver<CMatrix> es(u, false);
    Angles a;
    for (int i = 0; i < kDim; ++i) a[static_cast<std::size_t>(i)] = std::arg(es.eigenvalues()(i));
    std::sort(a.begin(), a.end());
    return a;
}

double arc(double a, double b) {
    const double d = std::abs(a - b);
    return std::min(d, 2.0 * std::numbers::pi - d);
}

// Net upward crossings of angle 0 between two spectra, under the matching that
// minimizes the largest move. `max_move` reports that move.
int net_crossings(const Angles& from, const Angles& to, double& max_move) {
    std::array<int, kDim> perm;
    std::iota(perm.begin(), perm.end(), 0);
    std::array<int, kDim> best = perm;
    max_move = HUGE_VAL;
    do {
        double worst = 0.0;
        for (std::size_t i = 0; i < perm.size() && worst < max_move; ++i) {
            worst = std::max(worst, arc(from[i], to[static_cast<std::size_t>(perm[i])]));
        }
        if (worst < max_move) {
            max_move = worst;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    const double q = std::numbers::pi / 2;
    int n = 0;
    for (std::size_t i = 0; i < best.size(); ++i) {
        const double a = from[i];
        const double b = to[static_cast<std::size_t>(best[i])];
        if (a >= -q && a < 0.0 && b >= 0.0 && b < q) ++n;
        if (a >= 0.0 && a < q && b >= -q && b < 0.0) --n;
    }
    return n;
}

struct Sample {
    double t;
    Angles angles;
};

}  // namespace

JacobiSystem JacobiSystem::from_calibration(const Vector6& x, const Calibration& cal) {
    JacobiSystem s;
    s.lambda = static_cast<double>(cal.epsilon) * lambda_of(x, cal.table);
    s.j0 = curvature_jacobi(x, cal.table, cal.curvature_sign);
    return s;
}

JacobiSystem JacobiSystem::constant(const SymMatrix6& j) {
    JacobiSystem s;
    s.j0 = j;
    return s;
}

SymMatrix6 operator_at_t(const JacobiSystem& sys, double t) {
    if (t == 0.0) return sys.j0;
    return conjugate(expm6(t * sys.lambda), sys.j0);
}

SymMatrix6 operator_at_t(const Vector6& x, double t, const Calibration& cal, OperatorModel model, int taylor_order) {
    if (model == OperatorModel::conjugation) return operator_at_t(JacobiSystem::from_calibration(x, cal), t);
    const auto chain = derivative_chain(x, taylor_order, cal);
    SymMatrix6 j = SymMatrix6::Zero();
    double w = 1.0;
    for (int k = 0; k <= taylor_order; ++k) {
        if (k > 0) w *= t / k;
        j += w * chain[static_cast<std::size_t>(k)];
    }
    return j;
}

std::string_view method_name(FieldMethod m) { return m == FieldMethod::constcoef ? "constcoef" : "rk4"; }

Matrix12 reduced_generator(const JacobiSystem& sys) {
    Matrix12 a = Matrix12::Zero();
    a.topRightCorner<kDim, kDim>().setIdentity();
    a.bottomLeftCorner<kDim, kDim>() = -(sys.lambda * sys.lambda + sys.j0);
    a.bottomRightCorner<kDim, kDim>() = -2.0 * sys.lambda;
    return a;
}

std::pair<Matrix6, Matrix6> fundamental_at(const JacobiSystem& sys, double t) {
    const Matrix12 p = (t * reduced_generator(sys)).exp();
    // Z(0) = 0, Z'(0) = I
    const Matrix6 z = p.topRightCorner<kDim, kDim>();
    const Matrix6 dz = p.bottomRightCorner<kDim, kDim>();
    const Matrix6 e = expm6(t * sys.lambda);
    return {e * z, e * (sys.lambda * z + dz)};
}

FieldTrajectory solve_fields(const JacobiSystem& sys, const Eigen::MatrixXd& y0, const Eigen::MatrixXd& v0, const SolveOptions& opt) {
    if (y0.rows() != kDim || v0.rows() != kDim || y0.cols() != v0.cols()) throw std::invalid_argument("initial data must be 6 x c");
    const std::size_t n = grid_steps(opt.t_max, opt.h);
    const double step = opt.t_max / static_cast<double>(n);
    const Eigen::Index c = y0.cols();

    FieldTrajectory tr;
    tr.method = opt.method;
    tr.h = step;
    tr.t.reserve(n + 1);
    tr.y.reserve(n + 1);
    tr.dy.reserve(n + 1);

    if (opt.method == FieldMethod::constcoef) {
        const Matrix12 a = reduced_generator(sys);
        Eigen::MatrixXd s0(2 * kDim, c);
        s0.topRows(kDim) = y0;
        s0.bottomRows(kDim) = v0 - sys.lambda * y0;
        const Matrix12 p = (step * a).exp();
        const Matrix6 e1 = expm6(step * sys.lambda);
        Eigen::MatrixXd s = s0;
        Matrix6 e = Matrix6::Identity();
        for (std::size_t i = 0; i <= n; ++i) {
            const double t = static_cast<double>(i) * step;
            if (i > 0) {
                if (i % kReanchor == 0) {
                    s = (t * a).exp() * s0;
                    e = expm6(t * sys.lambda);
                } else {
                    s = p * s;
                    e = e * e1;
                }
            }
            const auto z = s.topRows(kDim);
            const auto dz = s.bottomRows(kDim);
            tr.t.push_back(t);
            tr.y.push_back(e * z);
            tr.dy.push_back(e * (sys.lambda * z + dz));
        }
        return tr;
    }

    // rk4 on Y'' = -J(t) Y with J(t) from a propagated rotation; each step is
    // taken once with h and once as two h/2 steps for the error estimate
    std::array<Matrix6, 5> quarter;
    quarter[0] = Matrix6::Identity();
    const Matrix6 eq = expm6(0.25 * step * sys.lambda);
    for (std::size_t j = 1; j < quarter.size(); ++j) quarter[j] = quarter[j - 1] * eq;

    auto rk4 = [c](const Eigen::MatrixXd& y, const Eigen::MatrixXd& dy, double hh, const SymMatrix6& ja, const SymMatrix6& jm,
                   const SymMatrix6& jb) {
        const Eigen::MatrixXd k1y = dy;
        const Eigen::MatrixXd k1v = -ja * y;
        const Eigen::MatrixXd k2y = dy + 0.5 * hh * k1v;
        const Eigen::MatrixXd k2v = -jm * (y + 0.5 * hh * k1y);
        const Eigen::MatrixXd k3y = dy + 0.5 * hh * k2v;
        const Eigen::MatrixXd k3v = -jm * (y + 0.5 * hh * k2y);
        const Eigen::MatrixXd k4y = dy + hh * k3v;
        const Eigen::MatrixXd k4v = -jb * (y + hh * k3y);
        std::pair<Eigen::MatrixXd, Eigen::MatrixXd> out{Eigen::MatrixXd(kDim, c), Eigen::MatrixXd(kDim, c)};
        out.first = y + hh / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        out.second = dy + hh / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        return out;
    };

    Eigen::MatrixXd y = y0;
    Eigen::MatrixXd dy = v0;
    Matrix6 e = Matrix6::Identity();
    tr.t.push_back(0.0);
    tr.y.push_back(y);
    tr.dy.push_back(dy);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) * step;
        std::array<SymMatrix6, 5> j;
        for (std::size_t q = 0; q < j.size(); ++q) j[q] = conjugate(e * quarter[q], sys.j0);
        const auto full = rk4(y, dy, step, j[0], j[2], j[4]);
        const auto half1 = rk4(y, dy, 0.5 * step, j[0], j[1], j[2]);
        const auto half2 = rk4(half1.first, half1.second, 0.5 * step, j[2], j[3], j[4]);
        const double scale = std::max({1.0, half2.first.norm(), half2.second.norm()});
        const double est = std::max((half2.first - full.first).norm(), (half2.second - full.second).norm()) / 15.0;
        if (est > opt.rk4_tol * scale) throw StepRejected(t, est);
        y = half2.first;
        dy = half2.second;
        const std::size_t next = i + 1;
        e = next % kReanchor == 0 ? expm6(static_cast<double>(next) * step * sys.lambda) : Matrix6(e * quarter[4]);
        tr.t.push_back(static_cast<double>(next) * step);
        tr.y.push_back(y);
        tr.dy.push_back(dy);
    }
    return tr;
}

std::vector<Eigen::MatrixXd> wronskian(const FieldTrajectory& tr) {
    std::vector<Eigen::MatrixXd> w;
    w.reserve(tr.t.size());
    for (std::size_t i = 0; i < tr.t.size(); ++i) w.push_back(tr.dy[i].transpose() * tr.y[i] - tr.y[i].transpose() * tr.dy[i]);
    return w;
}

double wronskian_drift(const FieldTrajectory& tr) {
    const auto w = wronskian(tr);
    double d = 0.0;
    for (const auto& m : w) d = std::max(d, (m - w.front()).cwiseAbs().maxCoeff());
    return d;
}

std::vector<ConjugatePoint> conjugate_points(const JacobiSystem& sys, const ConjugateOptions& opt) {
    const std::size_t n = grid_steps(opt.t_max, opt.h);
    if (!(opt.t_max > 0.0)) throw std::invalid_argument("t_max must be positive");
    const double step = opt.t_max / static_cast<double>(n);

    auto sample = [&sys](double t) {
        const auto [m, dm] = fundamental_at(sys, t);
        return Sample{t, lagrangian_angles(m, dm)};
    };
    // subdivide until no eigenangle can have moved by more than pi/4
    auto count = [&sample](const Sample& a, const Sample& b, auto&& self, int depth) -> int {
        double move = 0.0;
        const int c = net_crossings(a.angles, b.angles, move);
        if (move <= std::numbers::pi / 4 || depth >= 40) return c;
        const Sample mid = sample(0.5 * (a.t + b.t));
        return self(a, mid, self, depth + 1) + self(mid, b, self, depth + 1);
    };

    std::vector<double> found;
    auto locate = [&](const Sample& a, const Sample& b, int c, auto&& self) -> void {
        if (c <= 0) return;
        if (b.t - a.t <= opt.tol) {
            found.push_back(0.5 * (a.t + b.t));
            return;
        }
        const Sample mid = sample(0.5 * (a.t + b.t));
        self(a, mid, count(a, mid, count, 0), self);
        self(mid, b, count(mid, b, count, 0), self);
    };

    Sample prev{0.0, {}};  // U(0) = I: every angle sits at 0 and leaves upward
    for (std::size_t i = 1; i <= n; ++i) {
        const Sample cur = sample(static_cast<double>(i) * step);
        locate(prev, cur, count(prev, cur, count, 0), locate);
        prev = cur;
    }

    // a multiple crossing can land on both sides of a bisection midpoint
    std::vector<double> merged;
    for (std::size_t i = 0; i < found.size();) {
        std::size_t j = i + 1;
        while (j < found.size() && found[j] - found[j - 1] <= 4.0 * opt.tol) ++j;
        merged.push_back(0.5 * (found[i] + found[j - 1]));
        i = j;
    }

    std::vector<ConjugatePoint> out;
    for (double ts : merged) {
        const auto [m, dm] = fundamental_at(sys, ts);
        Eigen::Matrix<double, 2 * kDim, kDim> state;
        state << m, dm;
        const double big = state.jacobiSvd().singularValues()(0);
        const auto sv = m.jacobiSvd().singularValues();
        int mult = 0;
        for (Eigen::Index k = 0; k < sv.size(); ++k) {
            if (sv(k) < opt.rank_tol * big) ++mult;
        }
        out.push_back({ts, mult, sv(kDim - 1) / big});
    }
    return out;
}

}  // namespace flagjac
