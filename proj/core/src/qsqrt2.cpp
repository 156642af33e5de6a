#include "flagjac/qsqrt2.hpp"

#include <gmp.h>

#include <cctype>
#include <cmath>

namespace flagjac {

QSqrt2::QSqrt2(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
}

int QSqrt2::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with 2 b^2
    const int c = cmp(a_ * a_, 2 * b_ * b_);
    return c > 0 ? sa : (c < 0 ? sb : 0);
}

std::optional<QSqrt2> QSqrt2::inverse() const {
    if (is_zero()) return std::nullopt;
    const mpq_class n = norm();
    return QSqrt2(a_ / n, -b_ / n);
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
    mpq_class a = a_ * o.a_ + 2 * b_ * o.b_;
    mpq_class b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

std::strong_ordering operator<=>(const QSqrt2& x, const QSqrt2& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

double QSqrt2::to_double() const {
    mpf_class r(a_, 256);
    if (!is_rational()) {
        mpf_class root(2, 256);
        mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
        r += mpf_class(b_, 256) * root;
    }
    // get_d truncates toward zero; round to nearest by comparing neighbours
    const double d = r.get_d();
    if (sgn(r) == 0) return 0.0;
    const double away = std::nextafter(d, sgn(r) > 0 ? HUGE_VAL : -HUGE_VAL);
    const mpf_class ed = abs(r - mpf_class(d, 256));
    const mpf_class ea = abs(r - mpf_class(away, 256));
    return ea < ed ? away : d;
}

std::string QSqrt2::str() const {
    if (sgn(b_) == 0) return a_.get_str();
    std::string s;
    if (sgn(a_) != 0) {
        s = a_.get_str();
        if (sgn(b_) > 0) s += '+';
    }
    s += b_.get_str() + "*sqrt2";
    return s;
}

std::ostream& operator<<(std::ostream& os, const QSqrt2& q) { return os << q.str(); }

namespace {

std::optional<mpq_class> parse_rational(std::string_view t) {
    if (t.empty()) return std::nullopt;
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    bool slash = false;
    bool digits = false;
    for (; i < t.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(t[i]))) {
            digits = true;
        } else if (t[i] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            return std::nullopt;
        }
    }
    if (!digits) return std::nullopt;
    std::string s(t[0] == '+' ? t.substr(1) : t);
    mpq_class q;
    if (q.set_str(s, 10) != 0) return std::nullopt;
    if (slash && sgn(q.get_den()) == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

// "r/s*sqrt2", "sqrt2", "-sqrt2" -> r/s
std::optional<mpq_class> parse_sqrt2_term(std::string_view t) {
    constexpr std::string_view tag = "sqrt2";
    if (t.size() < tag.size() || t.substr(t.size() - tag.size()) != tag) return std::nullopt;
    std::string_view head = t.substr(0, t.size() - tag.size());
    if (head.empty() || head == "+") return mpq_class(1);
    if (head == "-") return mpq_class(-1);
    if (head.back() != '*') return std::nullopt;
    return parse_rational(head.substr(0, head.size() - 1));
}

}  // namespace

std::optional<QSqrt2> QSqrt2::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    if (text.find("sqrt2") == std::string_view::npos) {
        auto q = parse_rational(text);
        if (!q) return std::nullopt;
        return QSqrt2(*q, 0);
    }
    // split at the sign that starts the sqrt2 term (not at position 0, not after '/')
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != '/') split = i;
    }
    if (split == std::string_view::npos) {
        auto b = parse_sqrt2_term(text);
        if (!b) return std::nullopt;
        return QSqrt2(0, *b);
    }
    auto a = parse_rational(text.substr(0, split));
    auto b = parse_sqrt2_term(text.substr(split));
    if (!a || !b) return std::nullopt;
    return QSqrt2(*a, *b);
}

std::optional<QSqrt2> qsqrt2_op(const QSqrt2& a, const QSqrt2& b, ArithOp kind) {
    switch (kind) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: {
            auto inv = b.inverse();
            if (!inv) return std::nullopt;
            return a * *inv;
        }
    }
    return std::nullopt;
}

mpq_class nearest_rational(double v, long max_den) {
    // best approximation via continued-fraction convergents and semiconvergents
    const mpq_class x(v);
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    mpz_class n = x.get_num();
    mpz_class d = x.get_den();
    for (;;) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        const mpz_class q2 = q0 + a * q1;
        if (q2 > max_den) break;
        const mpz_class p2 = p0 + a * p1;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const mpz_class r = n - a * d;
        n = d;
        d = r;
        if (d == 0) return mpq_class(p1, q1);
    }
    mpz_class k = (mpz_class(max_den) - q0) / q1;
    const mpq_class b1(p0 + k * p1, q0 + k * q1);
    const mpq_class b2(p1, q1);
    return abs(b2 - x) <= abs(b1 - x) ? b2 : b1;
}

std::optional<QSqrt2> sqrt_in_field(const mpq_class& s) {
    if (sgn(s) < 0) return std::nullopt;
    if (sgn(s) == 0) return QSqrt2(0);
    auto exact_root = [](const mpq_class& q) -> std::optional<mpq_class> {
        if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0) return std::nullopt;
        if (mpz_perfect_square_p(q.get_den_mpz_t()) == 0) return std::nullopt;
        mpz_class n;
        mpz_class d;
        mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
        return mpq_class(n, d);
    };
    if (auto r = exact_root(s)) return QSqrt2(*r, 0);
    if (auto r = exact_root(mpq_class(s / 2))) return QSqrt2(0, *r);
    return std::nullopt;
}

}  // namespace flagjac
