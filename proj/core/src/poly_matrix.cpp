#include "flagjac/poly_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace flagjac {

int upper_index(int i, int j) {
    if (i < 0 || j < 0 || i >= kDim || j >= kDim) throw std::out_of_range("matrix index out of range");
    if (i > j) std::swap(i, j);
    return i * kDim - i * (i - 1) / 2 + (j - i);
}

SymMatrix6 PolyMatrix::eval(const std::array<double, kNumVars>& x) const { return CompiledMatrix(*this).eval(x); }

std::array<QSqrt2, kUpper> PolyMatrix::eval_exact(const std::array<QSqrt2, kNumVars>& x) const {
    std::array<QSqrt2, kUpper> out;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = e_[k].eval(x);
    return out;
}

MultiPoly PolyMatrix::trace() const {
    MultiPoly t;
    for (int i = 0; i < kDim; ++i) t += (*this)(i, i);
    return t;
}

PolyMatrix commutator(const PolySquare& a, const PolyMatrix& s) {
    PolyMatrix r;
    auto at = [&a](int i, int j) -> const MultiPoly& { return a[static_cast<std::size_t>(i * kDim + j)]; };
    for (int i = 0; i < kDim; ++i) {
        for (int j = i; j < kDim; ++j) {
            MultiPoly v;
            for (int m = 0; m < kDim; ++m) {
                if (!at(i, m).is_zero()) v += at(i, m) * s(m, j);
                if (!at(m, j).is_zero()) v -= s(i, m) * at(m, j);
            }
            r(i, j) = std::move(v);
        }
    }
    return r;
}

CompiledMatrix::CompiledMatrix(const PolyMatrix& m) {
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] = CompiledPoly(m.upper()[k]);
}

SymMatrix6 CompiledMatrix::eval(const std::array<double, kNumVars>& x) const {
    SymMatrix6 out;
    for (int i = 0; i < kDim; ++i) {
        for (int j = i; j < kDim; ++j) {
            const double v = e_[static_cast<std::size_t>(upper_index(i, j))].eval(x);
            out(i, j) = v;
            out(j, i) = v;
        }
    }
    return out;
}

}  // namespace flagjac
