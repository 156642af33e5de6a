#include "test_support.hpp"

using namespace flagjac;
using flagjac::testing::as_vector;
using flagjac::testing::reference_calibration;

TEST(Vectorize, NormEqualsFrobenius) {
    Rng rng(1);
    SymMatrix6 m;
    for (int i = 0; i < 6; ++i) {
        for (int j = i; j < 6; ++j) m(i, j) = m(j, i) = rng.normal();
    }
    EXPECT_NEAR(vectorize_sym(m).norm(), m.norm(), 1e-13);
    SymMatrix6 n = SymMatrix6::Identity();
    n(0, 5) = n(5, 0) = 2.0;
    EXPECT_NEAR(vectorize_sym(m).dot(vectorize_sym(n)), (m * n).trace(), 1e-12);
}

TEST(Recurrence, OracleFindsOrderFourWithConstantCoefficients) {
    const Recurrence r = find_recurrence(RecurrenceOptions{}, reference_calibration());
    ASSERT_TRUE(r.found) << r.diagnostic;
    EXPECT_TRUE(r.well_conditioned);
    EXPECT_EQ(r.order, 4);
    EXPECT_EQ(r.lhs, "J5");
    ASSERT_EQ(r.coefficients.size(), 4u);
    EXPECT_NEAR(r.coefficients[0], -1.0 / 16.0, 1e-10);
    EXPECT_NEAR(r.coefficients[1], 0.0, 1e-10);
    EXPECT_NEAR(r.coefficients[2], -5.0 / 8.0, 1e-10);
    EXPECT_NEAR(r.coefficients[3], 0.0, 1e-10);
    EXPECT_LT(r.heldout_residual, 1e-9);
    EXPECT_EQ(rational_approx(r.coefficients[0]).str(), "-1/16");
    EXPECT_EQ(rational_approx(r.coefficients[2]).str(), "-5/8");
}

TEST(Recurrence, StableAcrossSeeds) {
    const Recurrence ref = find_recurrence(RecurrenceOptions{}, reference_calibration());
    for (std::uint64_t seed : {1ULL, 7ULL, 42ULL, 1234ULL, 99991ULL}) {
        RecurrenceOptions opt;
        opt.seed = seed;
        const Recurrence r = find_recurrence(opt, reference_calibration());
        ASSERT_TRUE(r.found) << seed;
        EXPECT_EQ(r.order, ref.order);
        EXPECT_LT(r.heldout_residual, 1e-9);
        for (std::size_t i = 0; i < r.coefficients.size(); ++i) EXPECT_NEAR(r.coefficients[i], ref.coefficients[i], 1e-10);
    }
}

TEST(Recurrence, OddChainRelationGivesMinusFiveEighths) {
    RecurrenceOptions opt;
    opt.odd = true;
    const Recurrence r = find_recurrence(opt, reference_calibration());
    ASSERT_TRUE(r.found) << r.diagnostic;
    EXPECT_EQ(r.lhs, "J5");
    ASSERT_EQ(r.basis, (std::vector<std::string>{"J1", "J3"}));
    EXPECT_NEAR(r.coefficients[1], -0.625, 1e-8);
    EXPECT_NEAR(r.coefficients[0], -0.0625, 1e-8);
}

TEST(Recurrence, ShiftedRescaledAndKrylovChecks) {
    const Calibration& cal = reference_calibration();
    const Recurrence r = find_recurrence(RecurrenceOptions{}, cal);
    const RecurrenceCheck c = verify_recurrence(r, cal, 2718, 300);
    EXPECT_LT(c.fresh_residual, 1e-9);
    ASSERT_EQ(c.shifted_residual.size(), 3u);
    for (double s : c.shifted_residual) EXPECT_LT(s, 1e-9);
    EXPECT_LT(c.rescaled_residual, 1e-9);
    EXPECT_EQ(c.krylov_degrees.size(), 10u);
    EXPECT_TRUE(c.krylov_consistent);
}

TEST(Recurrence, KrylovDegreesFromJ0AndJ1) {
    const Calibration& cal = reference_calibration();
    for (const auto& p : random_unit_vectors(31, 10)) {
        // J0 has a component commuting with Lambda, hence one extra dimension
        EXPECT_EQ(krylov_degree(as_vector(p), cal, 0), 5);
        EXPECT_EQ(krylov_degree(as_vector(p), cal, 1), 4);
    }
}

TEST(Recurrence, LambdaSpectrumIsConstantOnTheSphere) {
    const Calibration& cal = reference_calibration();
    for (const auto& p : random_unit_vectors(5, 20)) {
        const Matrix6 L = lambda_of(as_vector(p), cal.table);
        Eigen::EigenSolver<Matrix6> es(L);
        std::vector<double> w;
        for (int i = 0; i < 6; ++i) w.push_back(std::abs(es.eigenvalues()(i).imag()));
        std::sort(w.begin(), w.end());
        const double f = std::sqrt(2.0) / 4.0;
        const std::vector<double> want{0, 0, f, f, f, f};
        for (int i = 0; i < 6; ++i) EXPECT_NEAR(w[static_cast<std::size_t>(i)], want[static_cast<std::size_t>(i)], 1e-12);
    }
}

TEST(Recurrence, TooFewSamplesIsIllConditioned) {
    RecurrenceOptions opt;
    opt.samples = 10;
    const Recurrence r = find_recurrence(opt, reference_calibration());
    EXPECT_FALSE(r.well_conditioned);
    EXPECT_FALSE(r.found);
    EXPECT_NE(r.diagnostic.find("too few"), std::string::npos);
}

TEST(Recurrence, AppendixSourceRecoversTheSameRelation) {
    RecurrenceOptions opt;
    opt.source = RecurrenceSource::appendix;
    const Recurrence r = find_recurrence(opt, reference_calibration());
    ASSERT_TRUE(r.found) << r.diagnostic;
    ASSERT_EQ(r.basis, (std::vector<std::string>{"J3", "B"}));
    EXPECT_NEAR(r.coefficients[0], -0.625, 1e-8);
    EXPECT_NEAR(r.coefficients[1], 1.0, 1e-8);
}

TEST(Recurrence, RejectsOutOfRangeOrders) {
    RecurrenceOptions opt;
    opt.k_max = 12;
    EXPECT_THROW(find_recurrence(opt, reference_calibration()), std::invalid_argument);
}
