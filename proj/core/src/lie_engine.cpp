#include "flagjac/lie_engine.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace flagjac {

namespace {

using CMat3 = Eigen::Matrix3cd;

constexpr int kM = kDim;  // first h index

std::array<CMat3, kLieDim> basis_matrices(const BasisLayout& layout) {
    const std::complex<double> I(0.0, 1.0);
    std::array<CMat3, kLieDim> b;
    for (int p = 0; p < 3; ++p) {
        const auto [a, c] = kRoots.at(static_cast<std::size_t>(layout.pair_root.at(static_cast<std::size_t>(p))));
        CMat3 e_ac = CMat3::Zero();
        CMat3 e_ca = CMat3::Zero();
        e_ac(a, c) = 1.0;
        e_ca(c, a) = 1.0;
        b[static_cast<std::size_t>(p)] = e_ac - e_ca;
        b[static_cast<std::size_t>(p + 3)] = static_cast<double>(layout.orientation.at(static_cast<std::size_t>(p))) * I * (e_ac + e_ca);
    }
    for (int a = 0; a < 3; ++a) {
        CMat3 h = CMat3::Zero();
        h(a, a) = I;
        b[static_cast<std::size_t>(kM + a)] = h;
    }
    return b;
}

double require_equal_scale(const BracketTable& t) {
    const double s = t.metric[0];
    if (t.metric[1] != s || t.metric[2] != s) {
        throw std::invalid_argument("curvature model needs equal root-space scales");
    }
    return s;
}

LieVector embed(const Vector6& x) {
    LieVector u = LieVector::Zero();
    u.head<kDim>() = x;
    return u;
}

LieVector proj_m(LieVector u) {
    u.tail<kLieDim - kDim>().setZero();
    return u;
}

LieVector proj_h(LieVector u) {
    u.head<kDim>().setZero();
    return u;
}

}  // namespace

LieVector BracketTable::bracket(const LieVector& u, const LieVector& v) const {
    LieVector w = LieVector::Zero();
    for (int i = 0; i < kLieDim; ++i) {
        if (u(i) == 0.0) continue;
        for (int j = 0; j < kLieDim; ++j) {
            if (v(j) == 0.0) continue;
            for (int k = 0; k < kLieDim; ++k) w(k) += u(i) * v(j) * coeff(i, j, k);
        }
    }
    return w;
}

Eigen::Matrix<double, kLieDim, kLieDim> BracketTable::ad(const LieVector& u) const {
    Eigen::Matrix<double, kLieDim, kLieDim> a = Eigen::Matrix<double, kLieDim, kLieDim>::Zero();
    for (int i = 0; i < kLieDim; ++i) {
        if (u(i) == 0.0) continue;
        for (int j = 0; j < kLieDim; ++j) {
            for (int k = 0; k < kLieDim; ++k) a(k, j) += u(i) * coeff(i, j, k);
        }
    }
    return a;
}

double BracketTable::inner(const LieVector& u, const LieVector& v) const {
    double s = 0.0;
    for (int p = 0; p < 3; ++p) {
        const double w = metric[static_cast<std::size_t>(layout.pair_root[static_cast<std::size_t>(p)])];
        s += w * (u(p) * v(p) + u(p + 3) * v(p + 3));
    }
    const double hs = (metric[0] + metric[1] + metric[2]) / 6.0;
    for (int a = kM; a < kLieDim; ++a) s += hs * u(a) * v(a);
    return s;
}

BracketTable build_bracket_table(const std::array<double, 3>& metric, const BasisLayout& layout) {
    for (double s : metric) {
        if (!(s > 0.0)) throw std::invalid_argument("metric scales must be positive");
    }
    BracketTable t;
    t.metric = metric;
    t.layout = layout;
    const auto b = basis_matrices(layout);
    std::array<double, kLieDim> norm2{};
    for (int k = 0; k < kLieDim; ++k) norm2[static_cast<std::size_t>(k)] = -(b[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)]).trace().real();
    for (int i = 0; i < kLieDim; ++i) {
        for (int j = 0; j < kLieDim; ++j) {
            const CMat3 br = b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] - b[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i)];
            for (int k = 0; k < kLieDim; ++k) {
                const double v = -(br * b[static_cast<std::size_t>(k)]).trace().real() / norm2[static_cast<std::size_t>(k)];
                const double r = std::round(v);
                if (std::abs(v - r) > 1e-12) throw std::logic_error("non-integral structure constant");
                t.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = static_cast<int>(r);
            }
        }
    }
    return t;
}

Matrix6 lambda_of(const Vector6& x, const BracketTable& t) {
    const double s = require_equal_scale(t);
    const auto ad = t.ad(embed(x));
    return ad.topLeftCorner<kDim, kDim>() / (2.0 * std::sqrt(s));
}

Vector6 curvature(const BracketTable& t, const Vector6& X, const Vector6& Y, const Vector6& Z) {
    const double s = require_equal_scale(t);
    const LieVector u = embed(X);
    const LieVector v = embed(Y);
    const LieVector w = embed(Z);
    const LieVector uv = t.bracket(u, v);
    LieVector r = -t.bracket(proj_h(uv), w);
    r -= 0.5 * proj_m(t.bracket(proj_m(uv), w));
    // [Lambda_X, Lambda_Y] Z with Lambda_X = 1/2 [X, .]_m
    r += 0.25 * proj_m(t.bracket(u, proj_m(t.bracket(v, w))));
    r -= 0.25 * proj_m(t.bracket(v, proj_m(t.bracket(u, w))));
    return r.head<kDim>() / s;
}

SymMatrix6 curvature_jacobi(const Vector6& x, const BracketTable& t, int curvature_sign) {
    const double s = require_equal_scale(t);
    const auto ad = t.ad(embed(x));
    // J v = R(v,x)x = -[[v,x]_h, x] - 1/4 [[v,x]_m, x]_m
    const auto am = ad.topLeftCorner<kDim, kDim>();          // m -> m
    const auto ah = ad.bottomLeftCorner<kLieDim - kDim, kDim>();  // m -> h
    const auto amh = ad.topRightCorner<kDim, kLieDim - kDim>();   // h -> m
    SymMatrix6 j = -(amh * ah + 0.25 * am * am);
    j *= static_cast<double>(curvature_sign) / s;
    return 0.5 * (j + j.transpose());
}

Calibration make_calibration(const BasisLayout& layout, int curvature_sign, int epsilon, double scale) {
    Calibration c;
    c.table = build_bracket_table({scale, scale, scale}, layout);
    c.curvature_sign = curvature_sign;
    c.epsilon = epsilon;
    c.scale = scale;
    return c;
}

std::vector<SymMatrix6> derivative_chain(const Vector6& x, int K, const Calibration& cal) {
    if (K < 0 || K > 12) throw std::invalid_argument("chain length must be in 0..12");
    const Matrix6 lam = lambda_of(x, cal.table);
    std::vector<SymMatrix6> chain;
    chain.reserve(static_cast<std::size_t>(K + 1));
    chain.push_back(curvature_jacobi(x, cal.table, cal.curvature_sign));
    for (int k = 0; k < K; ++k) {
        const SymMatrix6& j = chain.back();
        SymMatrix6 n = static_cast<double>(cal.epsilon) * (lam * j - j * lam);
        chain.push_back(0.5 * (n + n.transpose()));
    }
    return chain;
}

namespace {

QSqrt2 rational_constant(double v, const char* what) {
    const mpq_class q = nearest_rational(v, 1024);
    if (std::abs(q.get_d() - v) > 1e-9 * std::max(1.0, std::abs(v))) {
        throw std::domain_error(std::string(what) + " is not a small rational");
    }
    return QSqrt2(q);
}

}  // namespace

ExactOracle exact_chain(const Calibration& cal, int K) {
    if (K < 0 || K > 12) throw std::invalid_argument("chain length must be in 0..12");
    const BracketTable& t = cal.table;
    const QSqrt2 s = rational_constant(require_equal_scale(t), "metric scale");
    const auto root = sqrt_in_field(s.rat_part());
    if (!root) throw std::domain_error("square root of the metric scale is not in Q(sqrt2)");
    const QSqrt2 half_inv_root = *root->inverse() * QSqrt2(mpq_class(1, 2));
    const QSqrt2 eps(cal.epsilon);

    // ad_x as linear polynomials
    std::array<std::array<MultiPoly, kLieDim>, kLieDim> ad;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kLieDim; ++j) {
            for (int k = 0; k < kLieDim; ++k) {
                const int c = t.coeff(i, j, k);
                if (c != 0) ad[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] += MultiPoly::var(i) * QSqrt2(c);
            }
        }
    }
    ExactOracle out;
    for (int k = 0; k < kDim; ++k) {
        for (int j = 0; j < kDim; ++j) out.lambda[static_cast<std::size_t>(k * kDim + j)] = ad[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] * half_inv_root;
    }
    const QSqrt2 jscale = QSqrt2(-cal.curvature_sign) * *s.inverse();
    PolyMatrix j0;
    for (int a = 0; a < kDim; ++a) {
        for (int b = a; b < kDim; ++b) {
            MultiPoly h;
            MultiPoly m;
            for (int l = 0; l < kLieDim; ++l) {
                const MultiPoly& x1 = ad[static_cast<std::size_t>(a)][static_cast<std::size_t>(l)];
                const MultiPoly& x2 = ad[static_cast<std::size_t>(l)][static_cast<std::size_t>(b)];
                if (x1.is_zero() || x2.is_zero()) continue;
                if (l < kDim) {
                    m += x1 * x2;
                } else {
                    h += x1 * x2;
                }
            }
            j0(a, b) = (h + m * QSqrt2(mpq_class(1, 4))) * jscale;
        }
    }
    out.chain.push_back(j0);
    for (int k = 0; k < K; ++k) {
        PolyMatrix n = commutator(out.lambda, out.chain.back());
        if (cal.epsilon != 1) {
            for (int a = 0; a < kDim; ++a) {
                for (int b = a; b < kDim; ++b) n(a, b) = n(a, b) * eps;
            }
        }
        out.chain.push_back(std::move(n));
    }
    return out;
}

OracleRepair oracle_repair_search(const Calibration& cal) {
    const ExactOracle ex = exact_chain(cal, 5);
    OracleRepair out;
    for (int k = 2; k <= 5; ++k) {
        const QSqrt2 ck = rational_constant(cal.order_constants[static_cast<std::size_t>(k - 2)], "order constant");
        for (int i = 1; i <= kDim; ++i) {
            for (int j = i; j <= kDim; ++j) {
                ++out.entries_compared;
                const MultiPoly target = ex.chain[static_cast<std::size_t>(k)](i - 1, j - 1) * ck;
                const Expression& e = appendix_expression(k, i, j);
                const MultiPoly printed = e.expand();
                if (printed == target) continue;
                if (-printed == target) {
                    out.entry_flips.push_back({k, i, j});
                    continue;
                }
                const int n = static_cast<int>(e.summands().size());
                bool fixed = false;
                for (int a = 0; a < n && !fixed; ++a) {
                    if (e.expand({a}) == target) {
                        out.flips.push_back({k, i, j, a, e.summand_text(a)});
                        fixed = true;
                    }
                }
                for (int a = 0; a < n && !fixed; ++a) {
                    for (int b = a + 1; b < n && !fixed; ++b) {
                        if (e.expand({a, b}) == target) {
                            out.flips.push_back({k, i, j, a, e.summand_text(a)});
                            out.flips.push_back({k, i, j, b, e.summand_text(b)});
                            fixed = true;
                        }
                    }
                }
                if (!fixed) out.unresolved.push_back({k, i, j});
            }
        }
    }
    return out;
}

}  // namespace flagjac
