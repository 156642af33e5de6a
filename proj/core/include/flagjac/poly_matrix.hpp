#pragma once

#include "flagjac/multipoly.hpp"

#include <Eigen/Dense>

#include <array>

namespace flagjac {

inline constexpr int kDim = 6;
inline constexpr int kUpper = kDim * (kDim + 1) / 2;  // 21

using SymMatrix6 = Eigen::Matrix<double, kDim, kDim>;
using Vector6 = Eigen::Matrix<double, kDim, 1>;

/// Zero-based upper-triangle slot of (i, j), either order.
int upper_index(int i, int j);

/// Symmetric 6x6 matrix of polynomials, upper triangle stored.
class PolyMatrix {
public:
    const MultiPoly& operator()(int i, int j) const { return e_[static_cast<std::size_t>(upper_index(i, j))]; }
    MultiPoly& operator()(int i, int j) { return e_[static_cast<std::size_t>(upper_index(i, j))]; }

    const std::array<MultiPoly, kUpper>& upper() const { return e_; }

    SymMatrix6 eval(const std::array<double, kNumVars>& x) const;
    /// Exact substitution; returns the 21 upper-triangle values row by row.
    std::array<QSqrt2, kUpper> eval_exact(const std::array<QSqrt2, kNumVars>& x) const;

    MultiPoly trace() const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) { return a.e_ == b.e_; }

private:
    std::array<MultiPoly, kUpper> e_{};
};

/// Square (not necessarily symmetric) 6x6 polynomial matrix, row-major.
using PolySquare = std::array<MultiPoly, kDim * kDim>;

/// A*S - S*A for polynomial A and symmetric S, returned as a PolyMatrix
/// (the result is symmetric whenever A is skew).
PolyMatrix commutator(const PolySquare& a, const PolyMatrix& s);

/// Compiled form of a PolyMatrix for fast repeated floating evaluation.
class CompiledMatrix {
public:
    CompiledMatrix() = default;
    explicit CompiledMatrix(const PolyMatrix& m);
    SymMatrix6 eval(const std::array<double, kNumVars>& x) const;

private:
    std::array<CompiledPoly, kUpper> e_{};
};

}  // namespace flagjac
