#include "flagjac/osculating_rank.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flagjac {

namespace {

constexpr std::uint64_t kHeldoutSalt = 0x9E3779B97F4A7C15ULL;

Vector6 as_vector(const Point6& p) { return Eigen::Map<const Vector6>(p.data()); }

std::string order_label(int k) { return k == 0 ? "B" : "J" + std::to_string(k); }

/// Derivative matrices indexed by order for one sample (B stored at index 0
/// for the appendix source).
using ChainSample = std::vector<SymMatrix6>;

struct Stack {
    std::vector<ChainSample> rows;
    int skipped = 0;
};

Stack collect(const std::vector<Point6>& pts, const RecurrenceOptions& opt, const Calibration& cal, int top) {
    Stack st;
    if (opt.source == RecurrenceSource::oracle) {
        for (const auto& p : pts) {
            auto ch = derivative_chain(as_vector(p), top, cal);
            if (ch[1].norm() < 1e-12) {
                ++st.skipped;
                continue;
            }
            st.rows.push_back(std::move(ch));
        }
        return st;
    }
    std::array<CompiledMatrix, 4> jm;
    for (int k = 2; k <= 5; ++k) jm[static_cast<std::size_t>(k - 2)] = CompiledMatrix(derivative_matrix(k, opt.variant));
    const CompiledMatrix bm(j5_decompose(opt.variant).B);
    for (const auto& p : pts) {
        ChainSample s(6, SymMatrix6::Zero());
        s[0] = bm.eval(p);
        for (int k = 2; k <= 5; ++k) s[static_cast<std::size_t>(k)] = jm[static_cast<std::size_t>(k - 2)].eval(p);
        if (s[2].norm() < 1e-12 && s[3].norm() < 1e-12) {
            ++st.skipped;
            continue;
        }
        st.rows.push_back(std::move(s));
    }
    return st;
}

double relation_residual(const ChainSample& s, int lhs, const std::vector<int>& basis, const std::vector<double>& a,
                         int shift = 0, double lambda = 1.0) {
    SymMatrix6 r = s[static_cast<std::size_t>(lhs + shift)];
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const double w = a[i] * std::pow(lambda, lhs - basis[i]);
        r -= w * s[static_cast<std::size_t>(basis[i] + shift)];
    }
    const double n = s[static_cast<std::size_t>(lhs + shift)].norm();
    return n > 0.0 ? r.norm() / n : r.norm();
}

double max_residual(const Stack& st, int lhs, const std::vector<int>& basis, const std::vector<double>& a, int shift = 0) {
    double m = 0.0;
    for (const auto& s : st.rows) m = std::max(m, relation_residual(s, lhs, basis, a, shift));
    return m;
}

struct Fit {
    bool dependent = false;
    bool basis_independent = true;
    std::vector<double> coef;
    std::vector<double> singular_values;
};

Fit fit(const Stack& st, int lhs, const std::vector<int>& basis) {
    const auto n = static_cast<Eigen::Index>(st.rows.size());
    const auto m = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXd A(n * kUpper, m + 1);
    for (Eigen::Index r = 0; r < n; ++r) {
        const auto& s = st.rows[static_cast<std::size_t>(r)];
        for (Eigen::Index c = 0; c < m; ++c) A.block<kUpper, 1>(r * kUpper, c) = vectorize_sym(s[static_cast<std::size_t>(basis[static_cast<std::size_t>(c)])]);
        A.block<kUpper, 1>(r * kUpper, m) = vectorize_sym(s[static_cast<std::size_t>(lhs)]);
    }
    // rank decisions on column-normalized matrices
    Eigen::MatrixXd An = A;
    for (Eigen::Index c = 0; c <= m; ++c) {
        const double cn = An.col(c).norm();
        if (cn > 0.0) An.col(c) /= cn;
    }
    Fit f;
    Eigen::JacobiSVD<Eigen::MatrixXd> aug(An);
    const auto& sv = aug.singularValues();
    f.singular_values.assign(sv.data(), sv.data() + sv.size());
    Eigen::JacobiSVD<Eigen::MatrixXd> bas(An.leftCols(m));
    const auto& bsv = bas.singularValues();
    f.basis_independent = bsv.size() == 0 || bsv(bsv.size() - 1) > 1e-8 * bsv(0);
    f.dependent = sv(sv.size() - 1) <= 1e-8 * sv(0);
    if (f.dependent) {
        Eigen::VectorXd a = A.leftCols(m).colPivHouseholderQr().solve(A.col(m));
        f.coef.assign(a.data(), a.data() + a.size());
    }
    return f;
}

}  // namespace

Vector21 vectorize_sym(const SymMatrix6& m) {
    Vector21 v;
    const double r2 = std::sqrt(2.0);
    for (int i = 0; i < kDim; ++i) {
        for (int j = i; j < kDim; ++j) v(upper_index(i, j)) = i == j ? m(i, i) : r2 * m(i, j);
    }
    return v;
}

Recurrence find_recurrence(const RecurrenceOptions& opt, const Calibration& cal) {
    Recurrence rec;
    rec.seed = opt.seed;
    const bool oracle = opt.source == RecurrenceSource::oracle;
    if (oracle && (opt.k_max < 1 || opt.k_max > 11)) throw std::invalid_argument("k_max must be in 1..11");
    const int top = oracle ? opt.k_max + 1 : 5;

    const Stack train = collect(sphere_sample(opt.seed, opt.samples), opt, cal, top);
    const Stack held = collect(random_unit_vectors(opt.seed ^ kHeldoutSalt, opt.samples), opt, cal, top);
    rec.samples_used = static_cast<int>(train.rows.size());
    rec.samples_skipped = train.skipped;
    if (rec.samples_used < opt.min_samples) {
        rec.well_conditioned = false;
        rec.diagnostic = "too few non-degenerate samples (" + std::to_string(rec.samples_used) + " < " +
                         std::to_string(opt.min_samples) + ")";
    }
    if (train.rows.empty()) return rec;

    std::vector<std::pair<int, std::vector<int>>> trials;  // (lhs, basis)
    if (oracle) {
        if (opt.odd) {
            for (int q = 1; 2 * q + 1 <= top; ++q) {
                std::vector<int> b;
                for (int i = 1; i < 2 * q + 1; i += 2) b.push_back(i);
                trials.emplace_back(2 * q + 1, b);
            }
        } else {
            for (int p = 1; p <= opt.k_max; ++p) {
                std::vector<int> b;
                for (int i = 1; i <= p; ++i) b.push_back(i);
                trials.emplace_back(p + 1, b);
            }
        }
    } else {
        trials = {{5, {3}}, {5, {3, 0}}, {5, {2, 3, 4, 0}}};
    }

    for (const auto& [lhs, basis] : trials) {
        Fit f = fit(train, lhs, basis);
        rec.singular_values = f.singular_values;
        if (!f.basis_independent) {
            rec.diagnostic = "spanning set {" + order_label(basis.front()) + "..} is already dependent";
            break;
        }
        if (!f.dependent) continue;
        rec.order = oracle ? lhs - 1 : static_cast<int>(basis.size());
        rec.lhs_order = lhs;
        rec.lhs = order_label(lhs);
        rec.basis_orders = basis;
        rec.basis.clear();
        for (int b : basis) rec.basis.push_back(order_label(b));
        rec.coefficients = f.coef;
        rec.fit_residual = max_residual(train, lhs, basis, f.coef);
        rec.heldout_residual = max_residual(held, lhs, basis, f.coef);
        rec.found = rec.heldout_residual < opt.tol;
        if (!rec.found) rec.diagnostic = "held-out residual above tolerance";
        break;
    }
    if (rec.lhs.empty() && rec.diagnostic.empty()) rec.diagnostic = "no dependence up to the requested order";
    if (!rec.well_conditioned) rec.found = false;
    return rec;
}

RecurrenceCheck verify_recurrence(const Recurrence& rec, const Calibration& cal, std::uint64_t fresh_seed, int samples) {
    RecurrenceCheck out;
    out.samples = samples;
    if (rec.lhs.empty()) return out;
    const int top = std::min(rec.lhs_order + 3, 12);
    const auto pts = random_unit_vectors(fresh_seed, samples);
    std::vector<ChainSample> chains;
    chains.reserve(pts.size());
    for (const auto& p : pts) chains.push_back(derivative_chain(as_vector(p), top, cal));
    for (const auto& c : chains) out.fresh_residual = std::max(out.fresh_residual, relation_residual(c, rec.lhs_order, rec.basis_orders, rec.coefficients));
    for (int m = 1; m <= 3 && rec.lhs_order + m <= top; ++m) {
        double r = 0.0;
        for (const auto& c : chains) r = std::max(r, relation_residual(c, rec.lhs_order, rec.basis_orders, rec.coefficients, m));
        out.shifted_residual.push_back(r);
    }
    Rng rng(fresh_seed ^ kHeldoutSalt);
    for (const auto& p : pts) {
        const double lambda = 0.5 + 1.5 * rng.uniform();
        const auto c = derivative_chain(lambda * as_vector(p), rec.lhs_order, cal);
        out.rescaled_residual = std::max(out.rescaled_residual, relation_residual(c, rec.lhs_order, rec.basis_orders, rec.coefficients, 0, lambda));
    }
    out.krylov_consistent = !pts.empty();
    for (std::size_t i = 0; i < std::min<std::size_t>(10, pts.size()); ++i) {
        const int d = krylov_degree(as_vector(pts[i]), cal, 1);
        out.krylov_degrees.push_back(d);
        if (d != rec.order) out.krylov_consistent = false;
    }
    return out;
}

int krylov_degree(const Vector6& x, const Calibration& cal, int start, double rel_tol) {
    const int top = 12;
    if (start < 0 || start >= top) throw std::invalid_argument("krylov start out of range");
    const auto ch = derivative_chain(x, top, cal);
    Eigen::MatrixXd K(kUpper, top - start + 1);
    for (int k = start; k <= top; ++k) {
        Vector21 v = vectorize_sym(ch[static_cast<std::size_t>(k)]);
        const double n = v.norm();
        K.col(k - start) = n > 0.0 ? Vector21(v / n) : v;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(K);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > rel_tol * sv(0)) ++rank;
    }
    return rank;
}

std::string RationalApprox::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

RationalApprox rational_approx(double v, long max_den) {
    const mpq_class q = nearest_rational(v, max_den);
    return {q.get_num().get_si(), q.get_den().get_si()};
}

}  // namespace flagjac
