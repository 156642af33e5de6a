#include "test_support.hpp"

#include <algorithm>
#include <cmath>

using namespace flagjac;
using flagjac::testing::as_vector;
using flagjac::testing::pencil_frequencies;
using flagjac::testing::reference_calibration;
using flagjac::testing::sup_diff;

namespace {

const double kTwoPi = 2.0 * std::acos(-1.0);

Vector6 unit_x(std::uint64_t seed) { return as_vector(random_unit_vectors(seed, 1).front()); }

Eigen::MatrixXd random_block(Rng& rng, int cols) {
    Eigen::MatrixXd m(kDim, cols);
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r < kDim; ++r) m(r, c) = rng.normal();
    }
    return m;
}

FieldTrajectory solve(const JacobiSystem& sys, const Eigen::MatrixXd& y0, const Eigen::MatrixXd& v0, FieldMethod m, double t_max = kTwoPi,
                      double h = 1e-3) {
    SolveOptions opt;
    opt.t_max = t_max;
    opt.h = h;
    opt.method = m;
    return solve_fields(sys, y0, v0, opt);
}

const Eigen::MatrixXd kZero6 = Eigen::MatrixXd::Zero(kDim, kDim);
const Eigen::MatrixXd kId6 = Eigen::MatrixXd::Identity(kDim, kDim);

}  // namespace

TEST(OperatorAtT, StartsAtJ0) {
    const Calibration& cal = reference_calibration();
    const Vector6 x = unit_x(3);
    EXPECT_EQ(operator_at_t(x, 0.0, cal), derivative_chain(x, 0, cal)[0]);
    EXPECT_EQ(operator_at_t(x, 0.0, cal, OperatorModel::taylor), derivative_chain(x, 0, cal)[0]);
}

TEST(OperatorAtT, ConjugationAgreesWithTaylor) {
    const Calibration& cal = reference_calibration();
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Vector6 x = unit_x(100 + s);
        const SymMatrix6 a = operator_at_t(x, 0.1, cal, OperatorModel::conjugation);
        const SymMatrix6 b = operator_at_t(x, 0.1, cal, OperatorModel::taylor, 8);
        EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-8);
    }
}

TEST(OperatorAtT, SymmetricWithConstantTrace) {
    const Calibration& cal = reference_calibration();
    const Vector6 x = unit_x(17);
    const double tr0 = operator_at_t(x, 0.0, cal).trace();
    for (double t : {0.5, 1.0, 2.0}) {
        const SymMatrix6 j = operator_at_t(x, t, cal);
        EXPECT_EQ(j, j.transpose());
        EXPECT_LT(std::abs(j.trace() - tr0), 1e-12);
    }
}

TEST(OperatorAtT, FrequenciesAreDifferencesOfLambdaFrequencies) {
    const Calibration& cal = reference_calibration();
    for (std::uint64_t s = 0; s < 5; ++s) {
        const Vector6 x = unit_x(500 + s);
        const JacobiSystem sys = JacobiSystem::from_calibration(x, cal);
        std::vector<Eigen::VectorXd> samples;
        const double dt = 0.2;
        for (int i = 0; i < 64; ++i) samples.emplace_back(vectorize_sym(operator_at_t(sys, i * dt)));
        const auto w = pencil_frequencies(samples, dt);

        Eigen::EigenSolver<Matrix6> es(sys.lambda);
        std::vector<double> lam;
        for (int i = 0; i < 6; ++i) lam.push_back(es.eigenvalues()(i).imag());
        std::vector<double> allowed;
        for (double a : lam) {
            for (double b : lam) allowed.push_back(std::abs(a - b));
        }
        ASSERT_FALSE(w.empty());
        for (double f : w) {
            double best = 1e9;
            for (double a : allowed) best = std::min(best, std::abs(f - a));
            EXPECT_LT(best, 1e-6) << "frequency " << f;
        }
        // both nonzero differences actually occur
        const double f = std::sqrt(2.0) / 4.0;
        auto present = [&w](double target) {
            return std::any_of(w.begin(), w.end(), [target](double v) { return std::abs(v - target) < 1e-6; });
        };
        EXPECT_TRUE(present(f));
        EXPECT_TRUE(present(2.0 * f));
    }
}

TEST(SolveFields, SyntheticHarmonicOscillator) {
    const double lambda = 2.25;
    const JacobiSystem sys = JacobiSystem::constant(lambda * SymMatrix6::Identity());
    Eigen::VectorXd v0 = Eigen::VectorXd::Zero(kDim);
    v0(0) = 1.0;
    const Eigen::VectorXd y0 = Eigen::VectorXd::Zero(kDim);
    for (FieldMethod m : {FieldMethod::constcoef, FieldMethod::rk4}) {
        const FieldTrajectory tr = solve(sys, y0, v0, m);
        double err = 0.0;
        for (std::size_t i = 0; i < tr.t.size(); ++i) {
            Eigen::VectorXd want = Eigen::VectorXd::Zero(kDim);
            want(0) = std::sin(std::sqrt(lambda) * tr.t[i]) / std::sqrt(lambda);
            err = std::max(err, (tr.y[i] - want).cwiseAbs().maxCoeff());
        }
        EXPECT_LT(err, 1e-10) << method_name(m);
    }
}

TEST(SolveFields, GridIsUniformAndEndsAtTMax) {
    const JacobiSystem sys = JacobiSystem::constant(SymMatrix6::Identity());
    const FieldTrajectory tr = solve(sys, kZero6, kId6, FieldMethod::constcoef, 1.0, 0.3);
    ASSERT_EQ(tr.t.size(), 4u);
    EXPECT_NEAR(tr.t.back(), 1.0, 1e-15);
    EXPECT_NEAR(tr.h, 1.0 / 3.0, 1e-15);
}

TEST(SolveFields, MethodsAgreeAlongTheFirstBasisVector) {
    const JacobiSystem sys = JacobiSystem::from_calibration(Vector6::Unit(0), reference_calibration());
    EXPECT_LT(sup_diff(solve(sys, kZero6, kId6, FieldMethod::constcoef), solve(sys, kZero6, kId6, FieldMethod::rk4)), 1e-6);
}

TEST(SolveFields, MethodsAgreeOnRandomGeodesics) {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const JacobiSystem sys = JacobiSystem::from_calibration(unit_x(s), reference_calibration());
        const auto a = solve(sys, kZero6, kId6, FieldMethod::constcoef);
        const auto b = solve(sys, kZero6, kId6, FieldMethod::rk4);
        EXPECT_LT(sup_diff(a, b), 1e-6) << s;
    }
}

TEST(SolveFields, WronskianIsConstant) {
    Rng rng(12);
    for (std::uint64_t s = 0; s < 4; ++s) {
        const JacobiSystem sys = JacobiSystem::from_calibration(unit_x(40 + s), reference_calibration());
        const Eigen::MatrixXd y0 = random_block(rng, 3);
        const Eigen::MatrixXd v0 = random_block(rng, 3);
        for (FieldMethod m : {FieldMethod::constcoef, FieldMethod::rk4}) {
            EXPECT_LT(wronskian_drift(solve(sys, y0, v0, m)), 1e-8) << method_name(m);
            EXPECT_LT(wronskian_drift(solve(sys, kZero6, kId6, m)), 1e-8) << method_name(m);
        }
    }
}

TEST(SolveFields, TimeReversal) {
    Rng rng(21);
    const Eigen::MatrixXd v0 = random_block(rng, 2);
    const Eigen::MatrixXd y0 = Eigen::MatrixXd::Zero(kDim, 2);
    // reversed geodesic: Y_x(-t) = -Y_{-x}(t)
    for (std::uint64_t s = 0; s < 3; ++s) {
        const Vector6 x = unit_x(60 + s);
        const JacobiSystem fwd = JacobiSystem::from_calibration(-x, reference_calibration());
        const JacobiSystem bwd = JacobiSystem::from_calibration(x, reference_calibration());
        const auto a = solve(fwd, y0, v0, FieldMethod::constcoef, 5.0, 1e-2);
        const auto b = solve(bwd, y0, v0, FieldMethod::constcoef, -5.0, 1e-2);
        ASSERT_EQ(a.t.size(), b.t.size());
        double d = 0.0;
        for (std::size_t i = 0; i < a.t.size(); ++i) {
            EXPECT_EQ(b.t[i], -a.t[i]);
            d = std::max(d, (b.y[i] + a.y[i]).cwiseAbs().maxCoeff());
        }
        EXPECT_LT(d, 1e-8);
    }
    // even operator: the fundamental solution itself is odd
    SymMatrix6 j = SymMatrix6::Identity();
    j(0, 1) = j(1, 0) = 0.3;
    j(2, 2) = -0.5;
    const JacobiSystem even = JacobiSystem::constant(j);
    const auto a = solve(even, y0, v0, FieldMethod::rk4, 4.0, 1e-3);
    const auto b = solve(even, y0, v0, FieldMethod::rk4, -4.0, 1e-3);
    double d = 0.0;
    for (std::size_t i = 0; i < a.t.size(); ++i) d = std::max(d, (b.y[i] + a.y[i]).cwiseAbs().maxCoeff());
    EXPECT_LT(d, 1e-8);
}

TEST(SolveFields, FundamentalSolutionMatchesTrajectory) {
    const JacobiSystem sys = JacobiSystem::from_calibration(unit_x(77), reference_calibration());
    const auto tr = solve(sys, kZero6, kId6, FieldMethod::constcoef, 3.0, 1e-2);
    const auto [m, dm] = fundamental_at(sys, 3.0);
    EXPECT_LT((tr.y.back() - m).cwiseAbs().maxCoeff(), 1e-11);
    EXPECT_LT((tr.dy.back() - dm).cwiseAbs().maxCoeff(), 1e-11);
}

TEST(SolveFields, Rk4RejectsOversizedSteps) {
    const JacobiSystem sys = JacobiSystem::constant(1e4 * SymMatrix6::Identity());
    EXPECT_THROW(solve(sys, kZero6, kId6, FieldMethod::rk4, 1.0, 1e-2), StepRejected);
}

TEST(SolveFields, RejectsBadArguments) {
    const JacobiSystem sys = JacobiSystem::constant(SymMatrix6::Identity());
    EXPECT_THROW(solve(sys, kZero6, kId6, FieldMethod::constcoef, 101.0), std::invalid_argument);
    EXPECT_THROW(solve(sys, kZero6, kId6, FieldMethod::constcoef, 1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(solve(sys, Eigen::MatrixXd::Zero(5, 1), Eigen::MatrixXd::Zero(5, 1), FieldMethod::constcoef), std::invalid_argument);
}

TEST(ConjugatePoints, ConstantCurvatureOne) {
    const auto pts = conjugate_points(JacobiSystem::constant(SymMatrix6::Identity()), ConjugateOptions{});
    ASSERT_EQ(pts.size(), 3u);
    const double pi = std::acos(-1.0);
    EXPECT_NEAR(pts[0].t, pi, 1e-8);
    EXPECT_NEAR(pts[1].t, 2 * pi, 1e-8);
    EXPECT_NEAR(pts[2].t, 3 * pi, 1e-8);
    for (const auto& p : pts) EXPECT_EQ(p.multiplicity, 6);
}

TEST(ConjugatePoints, ScalarCurvatureShiftsTheFirstPoint) {
    SymMatrix6 j = SymMatrix6::Identity();
    j(0, 0) = 4.0;
    const auto pts = conjugate_points(JacobiSystem::constant(j), ConjugateOptions{});
    ASSERT_FALSE(pts.empty());
    EXPECT_NEAR(pts[0].t, std::acos(-1.0) / 2.0, 1e-8);
    EXPECT_EQ(pts[0].multiplicity, 1);
}

TEST(ConjugatePoints, ResolvesClustersFinerThanTheScanStep) {
    // decoupled oscillators: zeros at pi / sqrt(lambda_i), 2e-4 apart
    SymMatrix6 j = SymMatrix6::Zero();
    const double pi = std::acos(-1.0);
    std::vector<double> want;
    for (int i = 0; i < 3; ++i) {
        const double t = 3.0 + 2e-4 * i;
        j(i, i) = (pi / t) * (pi / t);
        want.push_back(t);
    }
    const auto pts = conjugate_points(JacobiSystem::constant(j), ConjugateOptions{});
    std::vector<double> got;
    for (const auto& p : pts) {
        if (p.t < 4.0) got.push_back(p.t);
    }
    ASSERT_EQ(got.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(got[i], want[i], 1e-8);
}

TEST(ConjugatePoints, FlatHasNone) {
    EXPECT_TRUE(conjugate_points(JacobiSystem::constant(SymMatrix6::Zero()), ConjugateOptions{}).empty());
}

TEST(ConjugatePoints, StableUnderHalvingTheScanStep) {
    // seed 901 has four conjugate points inside a window of 0.03
    for (std::uint64_t s = 0; s < 8; ++s) {
        const JacobiSystem sys = JacobiSystem::from_calibration(unit_x(900 + s), reference_calibration());
        ConjugateOptions a;
        ConjugateOptions b;
        b.h = a.h / 2;
        const auto pa = conjugate_points(sys, a);
        const auto pb = conjugate_points(sys, b);
        ASSERT_EQ(pa.size(), pb.size()) << s;
        for (std::size_t i = 0; i < pa.size(); ++i) {
            EXPECT_NEAR(pa[i].t, pb[i].t, 1e-6);
            EXPECT_EQ(pa[i].multiplicity, pb[i].multiplicity);
        }
    }
}

TEST(ConjugatePoints, FieldsVanishThere) {
    const JacobiSystem sys = JacobiSystem::from_calibration(unit_x(901), reference_calibration());
    for (const auto& p : conjugate_points(sys, ConjugateOptions{})) {
        const auto [m, dm] = fundamental_at(sys, p.t);
        Eigen::JacobiSVD<Matrix6> svd(m);
        EXPECT_LT(svd.singularValues()(5), 1e-7 * std::max(1.0, svd.singularValues()(0)));
    }
}
