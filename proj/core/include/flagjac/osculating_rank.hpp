#pragma once

#include "flagjac/lie_engine.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace flagjac {

using Vector21 = Eigen::Matrix<double, kUpper, 1>;

/// Upper-triangle flattening, off-diagonal entries scaled by sqrt(2) so the
/// Euclidean norm equals the Frobenius norm.
Vector21 vectorize_sym(const SymMatrix6& m);

enum class RecurrenceSource { oracle, appendix };

struct RecurrenceOptions {
    RecurrenceSource source = RecurrenceSource::oracle;
    int k_max = 8;
    int samples = 500;   ///< fit samples; the same number again is held out
    double tol = 1e-9;
    std::uint64_t seed = 42;
    bool odd = false;    ///< fit J(2q+1) against J1, J3, ..., J(2q-1) only
    Variant variant = Variant::repaired;  ///< appendix source only
    int min_samples = 64;
};

struct Recurrence {
    bool found = false;
    bool well_conditioned = true;
    int order = 0;                          ///< p (appendix source: number of basis elements)
    std::vector<std::string> basis;         ///< labels of the spanning elements
    std::vector<int> basis_orders;          ///< derivative orders (0 for B)
    std::string lhs;                        ///< label of the dependent element
    int lhs_order = 0;
    std::vector<double> coefficients;
    double fit_residual = 0.0;
    double heldout_residual = 0.0;
    int samples_used = 0;
    int samples_skipped = 0;                ///< degenerate samples (chain ~ 0)
    std::vector<double> singular_values;    ///< of the accepted (or last tried) stacked system
    std::uint64_t seed = 0;
    std::string diagnostic;
};

/// Calibration used for source=oracle; ignored for source=appendix.
Recurrence find_recurrence(const RecurrenceOptions& opt, const Calibration& cal);

struct RecurrenceCheck {
    double fresh_residual = 0.0;
    std::vector<double> shifted_residual;   ///< m = 1..3
    double rescaled_residual = 0.0;
    int samples = 0;
    /// Krylov degree of ad(Lambda) on the cyclic subspace of J1 at the first
    /// ten fresh points; each should equal the recurrence order.
    std::vector<int> krylov_degrees;
    bool krylov_consistent = false;
};

/// Fresh-sample, shifted (m = 1..3), non-unit-rescaled and Krylov checks
/// (oracle source).
RecurrenceCheck verify_recurrence(const Recurrence& rec, const Calibration& cal, std::uint64_t fresh_seed, int samples = 500);

/// Dimension of the cyclic subspace of ad(Lambda_x) generated by J(start).
int krylov_degree(const Vector6& x, const Calibration& cal, int start = 0, double rel_tol = 1e-8);

struct RationalApprox {
    long num;
    long den;
    std::string str() const;
};
RationalApprox rational_approx(double v, long max_den = 1024);

}  // namespace flagjac
