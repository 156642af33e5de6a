#pragma once

#include "flagjac/appendix.hpp"
#include "flagjac/poly_matrix.hpp"
#include "flagjac/sampling.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <vector>

namespace flagjac {

inline constexpr int kLieDim = 9;  // u(3): six m-directions, three h-directions

using LieVector = Eigen::Matrix<double, kLieDim, 1>;
using Matrix6 = Eigen::Matrix<double, kDim, kDim>;

/// Roots of u(3)/t^3 as index pairs (a, b), zero-based.
inline constexpr std::array<std::array<int, 2>, 3> kRoots = {{{0, 1}, {0, 2}, {1, 2}}};

/// How the coordinate pairs {1,4}, {2,5}, {3,6} sit on the root spaces.
///
/// Pair p (coordinates p and p+3) spans root kRoots[pair_root[p]] with basis
/// E_ab - E_ba and orientation[p] * i (E_ab + E_ba).
struct BasisLayout {
    std::array<int, 3> pair_root{0, 1, 2};
    std::array<int, 3> orientation{1, 1, 1};
    friend bool operator==(const BasisLayout&, const BasisLayout&) = default;
};

/// Integer structure constants of u(3) in the basis B_0..B_5 (m) and
/// B_6..B_8 = i E_aa (h), plus the root-space metric scales.
///
/// The metric is <A, B> = -(s/2) tr(AB): |B_m|^2 = s, |B_h|^2 = s/2.
struct BracketTable {
    BasisLayout layout;
    std::array<double, 3> metric{1.0, 1.0, 1.0};
    std::array<std::array<std::array<int, kLieDim>, kLieDim>, kLieDim> c{};

    /// [B_i, B_j] = sum_k coeff(i, j, k) B_k
    int coeff(int i, int j, int k) const { return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]; }
    LieVector bracket(const LieVector& u, const LieVector& v) const;
    /// Matrix of ad(u) acting on coefficient vectors.
    Eigen::Matrix<double, kLieDim, kLieDim> ad(const LieVector& u) const;
    /// <u, v> for coefficient vectors.
    double inner(const LieVector& u, const LieVector& v) const;
};

/// Throws std::invalid_argument unless every s_r > 0.
BracketTable build_bracket_table(const std::array<double, 3>& metric, const BasisLayout& layout = {});

/// Lambda_x = 1/2 [x, .]_m in orthonormal m-coordinates (equal scales).
Matrix6 lambda_of(const Vector6& x, const BracketTable& t);

/// R(X, Y)Z of the naturally reductive metric, orthonormal m-coordinates.
Vector6 curvature(const BracketTable& t, const Vector6& X, const Vector6& Y, const Vector6& Z);

/// J(0) v = R(v, x) x, times the curvature sign.
SymMatrix6 curvature_jacobi(const Vector6& x, const BracketTable& t, int curvature_sign = 1);

struct EntryResidual {
    int k;
    int i;  ///< 1-based
    int j;
    double residual;
};

struct Calibration {
    BracketTable table;
    int curvature_sign = 1;
    int epsilon = 1;
    double scale = 1.0;
    std::array<double, 4> order_constants{1.0, 1.0, 1.0, 1.0};  ///< c_2..c_5

    Variant target = Variant::repaired;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    int samples = 0;
    int candidate_index = -1;
    int candidates_evaluated = 0;
    int matching_candidates = 0;  ///< candidates with no entry above tol
    bool matched = false;
    double residual = 0.0;
    std::array<double, 4> order_residual{};
    int mismatched_entries = 0;
    std::vector<EntryResidual> worst_entries;  ///< entries above tol, worst first (at most 84)
};

/// A calibration carrying only the convention (no search bookkeeping).
Calibration make_calibration(const BasisLayout& layout, int curvature_sign, int epsilon, double scale);

/// [J0, J1, ..., JK] at x; J(k+1) = eps (Lambda J(k) - J(k) Lambda). K <= 12.
std::vector<SymMatrix6> derivative_chain(const Vector6& x, int K, const Calibration& cal);

struct CalibrationOptions {
    Variant target = Variant::repaired;
    double tol = 1e-9;
    std::uint64_t seed = 42;
    int samples = 500;
};

/// Search over 6 assignments x 8 orientations x 2 curvature signs x 2 eps.
Calibration calibrate(const CalibrationOptions& opt);

/// Enumerated candidate conventions, in search order.
struct Candidate {
    BasisLayout layout;
    int curvature_sign;
    int epsilon;
};
std::vector<Candidate> calibration_candidates();

struct ValidationResult {
    int samples = 0;
    double residual = 0.0;
    std::array<double, 4> order_residual{};
    std::vector<EntryResidual> worst_entries;
};

/// Oracle against the appendix variant on a seeded sample, c_k applied.
ValidationResult cross_validate(const Calibration& cal, Variant target, std::uint64_t seed, int samples, double tol);

/// Exact oracle chain over Q(sqrt2); requires the scale to be q^2 or 2 q^2
/// for a rational q with denominator at most 1024.
struct ExactOracle {
    PolySquare lambda;
    std::vector<PolyMatrix> chain;  ///< J0..JK
};
ExactOracle exact_chain(const Calibration& cal, int K);

struct OracleRepair {
    std::vector<SummandFlip> flips;             ///< summand flips reconciling printed entries
    std::vector<EntryFlip> entry_flips;         ///< whole-entry flips reconciling entries
    std::vector<EntryFlip> unresolved;          ///< entries no single or paired flip fixes
    int entries_compared = 0;
};

/// Compares every printed entry with the exact oracle and localizes sign
/// errors to whole entries, single summands or pairs of summands.
OracleRepair oracle_repair_search(const Calibration& cal);

}  // namespace flagjac
