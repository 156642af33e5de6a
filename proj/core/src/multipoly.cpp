#include "flagjac/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace flagjac {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

MultiPoly::MultiPoly(const QSqrt2& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::var(int i) {
    Exponents e{};
    e.at(static_cast<std::size_t>(i)) = 1;
    return monomial(e, QSqrt2(1));
}

MultiPoly MultiPoly::monomial(const Exponents& e, const QSqrt2& c) {
    MultiPoly p;
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::norm_squared() {
    MultiPoly n;
    for (int i = 0; i < kNumVars; ++i) {
        Exponents e{};
        e[static_cast<std::size_t>(i)] = 2;
        n.add_term(e, QSqrt2(1));
    }
    return n;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

void MultiPoly::add_term(const Exponents& e, const QSqrt2& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const QSqrt2& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e{};
            for (std::size_t i = 0; i < e.size(); ++i) {
                const int s = ea[i] + eb[i];
                if (s > 255) throw std::overflow_error("MultiPoly: exponent overflow");
                e[i] = static_cast<std::uint8_t>(s);
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly result(1);
    MultiPoly base = *this;
    while (n > 0) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n > 0) base = base * base;
    }
    return result;
}

QSqrt2 MultiPoly::eval(const std::array<QSqrt2, kNumVars>& x) const {
    QSqrt2 sum;
    for (const auto& [e, c] : terms_) {
        QSqrt2 t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        }
        sum += t;
    }
    return sum;
}

double MultiPoly::eval(const std::array<double, kNumVars>& x) const { return CompiledPoly(*this).eval(x); }

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        const bool mixed = !c.is_rational() && sgn(c.rat_part()) != 0;
        const bool negative = !mixed && c.sign() < 0;
        const QSqrt2 mag = negative ? -c : c;
        std::string coef = mixed ? "(" + mag.str() + ")" : mag.str();
        std::string term;
        if (mono.empty()) {
            term = coef;
        } else if (mag == QSqrt2(1)) {
            term = mono;
        } else {
            term = coef + "*" + mono;
        }
        if (first) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
        first = false;
    }
    return out;
}

DivResult poly_divexact(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("poly_divexact: division by the zero polynomial");
    const auto& [qe, qc] = q.leading();
    const QSqrt2 qinv = *qc.inverse();
    MultiPoly r = p;
    MultiPoly quot;
    MultiPoly rem;
    while (!r.is_zero()) {
        const auto [le, lc] = r.leading();
        bool divides = true;
        Exponents d{};
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (le[i] < qe[i]) {
                divides = false;
                break;
            }
            d[i] = static_cast<std::uint8_t>(le[i] - qe[i]);
        }
        if (divides) {
            const MultiPoly t = MultiPoly::monomial(d, lc * qinv);
            quot += t;
            r -= t * q;
        } else {
            const MultiPoly t = MultiPoly::monomial(le, lc);
            rem += t;
            r -= t;
        }
    }
    DivResult out;
    if (rem.is_zero()) out.quotient = std::move(quot);
    out.remainder = std::move(rem);
    return out;
}

Homogeneity poly_homogeneity_check(const MultiPoly& p) {
    if (p.is_zero()) return {HomogeneityKind::zero, 0};
    const int d = total_degree(p.leading().first);
    for (const auto& [e, c] : p.terms()) {
        if (total_degree(e) != d) return {HomogeneityKind::mixed, 0};
    }
    return {HomogeneityKind::homogeneous, d};
}

namespace {

struct DD {
    double hi;
    double lo;
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    DD t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD dd_mul(DD a, DD b) {
    const double p = a.hi * b.hi;
    const double e = std::fma(a.hi, b.hi, -p);
    return quick_two_sum(p, e + (a.hi * b.lo + a.lo * b.hi));
}

}  // namespace

CompiledPoly::CompiledPoly(const MultiPoly& p) {
    terms_.reserve(p.size());
    mpf_class root(2, 256);
    mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
    for (const auto& [e, c] : p.terms()) {
        mpf_class v = mpf_class(c.rat_part(), 256) + mpf_class(c.sqrt2_part(), 256) * root;
        const double hi = v.get_d();
        v -= hi;
        terms_.push_back({e, hi, v.get_d()});
        for (auto k : e) max_exp_ = std::max<int>(max_exp_, k);
    }
}

double CompiledPoly::eval(const std::array<double, kNumVars>& x) const {
    constexpr int kMaxExp = 32;
    if (max_exp_ >= kMaxExp) throw std::out_of_range("CompiledPoly: exponent too large");
    std::array<std::array<DD, kMaxExp>, kNumVars> pw{};
    for (std::size_t i = 0; i < kNumVars; ++i) {
        pw[i][0] = {1.0, 0.0};
        for (int k = 1; k <= max_exp_; ++k) pw[i][static_cast<std::size_t>(k)] = dd_mul(pw[i][static_cast<std::size_t>(k - 1)], {x[i], 0.0});
    }
    DD sum{0.0, 0.0};
    for (const auto& t : terms_) {
        DD m{t.hi, t.lo};
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (t.e[i] != 0) m = dd_mul(m, pw[i][t.e[i]]);
        }
        sum = dd_add(sum, m);
    }
    return sum.hi + sum.lo;
}

}  // namespace flagjac
