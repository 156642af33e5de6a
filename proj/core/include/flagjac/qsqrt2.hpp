#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace flagjac {

/// Exact element a + b*sqrt(2) of the quadratic field Q(sqrt2).
///
/// Both parts are GMP rationals kept in canonical (reduced) form.
class QSqrt2 {
public:
    QSqrt2() = default;
    QSqrt2(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    explicit QSqrt2(mpq_class a, mpq_class b = 0);

    static QSqrt2 sqrt2() { return QSqrt2(0, 1); }

    const mpq_class& rat_part() const { return a_; }
    const mpq_class& sqrt2_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    /// Galois conjugate a - b*sqrt2.
    QSqrt2 conj() const { return QSqrt2(a_, -b_); }
    /// Field norm a^2 - 2 b^2; zero only for the zero element.
    mpq_class norm() const { return a_ * a_ - 2 * b_ * b_; }
    /// Exact sign of the real number a + b*sqrt2.
    int sign() const;

    std::optional<QSqrt2> inverse() const;

    QSqrt2& operator+=(const QSqrt2& o);
    QSqrt2& operator-=(const QSqrt2& o);
    QSqrt2& operator*=(const QSqrt2& o);

    friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
    friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
    friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
    QSqrt2 operator-() const { return QSqrt2(-a_, -b_); }

    friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    /// Ordering by real value.
    friend std::strong_ordering operator<=>(const QSqrt2& x, const QSqrt2& y);

    /// Nearest double (round to nearest from a 256-bit intermediate).
    double to_double() const;

    /// Text form "p/q" or "p/q+r/s*sqrt2" (integers print without "/1").
    std::string str() const;
    /// Accepts the text form above plus "r/s*sqrt2", "-sqrt2", "sqrt2" and plain integers.
    static std::optional<QSqrt2> parse(std::string_view text);

private:
    mpq_class a_{0};
    mpq_class b_{0};
};

std::ostream& operator<<(std::ostream& os, const QSqrt2& q);

enum class ArithOp { add, sub, mul, div };

/// Field operation; std::nullopt signals division by zero.
std::optional<QSqrt2> qsqrt2_op(const QSqrt2& a, const QSqrt2& b, ArithOp kind);

/// Closest rational to v with denominator at most max_den (v must be finite).
mpq_class nearest_rational(double v, long max_den);

/// Exact square root of a nonnegative rational when it lies in Q(sqrt2)
/// (that is, when s = q^2 or s = 2 q^2).
std::optional<QSqrt2> sqrt_in_field(const mpq_class& s);

}  // namespace flagjac
