#pragma once

#include "flagjac/qsqrt2.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flagjac {

inline constexpr int kNumVars = 6;

using Exponents = std::array<std::uint8_t, kNumVars>;

int total_degree(const Exponents& e);

/// Graded lexicographic order, largest first: higher total degree first, ties
/// broken lexicographically with x1 > x2 > ... > x6.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at offset " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Sparse polynomial in x1..x6 with QSqrt2 coefficients.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, QSqrt2, GradedLexGreater>;

    MultiPoly() = default;
    MultiPoly(const QSqrt2& c);  // NOLINT(google-explicit-constructor)
    MultiPoly(long c) : MultiPoly(QSqrt2(c)) {}  // NOLINT(google-explicit-constructor)

    /// x_{i+1}, zero-based index.
    static MultiPoly var(int i);
    static MultiPoly monomial(const Exponents& e, const QSqrt2& c);
    /// x1^2 + ... + x6^2
    static MultiPoly norm_squared();

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Leading term in graded-lex order; precondition: nonzero.
    const TermMap::value_type& leading() const { return *terms_.begin(); }
    int degree() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const QSqrt2& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const QSqrt2& c) { return a *= c; }
    friend MultiPoly operator*(const QSqrt2& c, MultiPoly a) { return a *= c; }
    MultiPoly operator-() const;
    MultiPoly pow(unsigned n) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    QSqrt2 eval(const std::array<QSqrt2, kNumVars>& x) const;
    /// Compensated double-double evaluation, rounded once at the end.
    double eval(const std::array<double, kNumVars>& x) const;

    /// Canonical text: "coef*x1^a1*...*x6^a6" terms joined by " + " / " - ".
    std::string str() const;
    /// Parses the canonical text form (any term order, repeated monomials merge).
    static MultiPoly parse(std::string_view text);

private:
    void add_term(const Exponents& e, const QSqrt2& c);
    TermMap terms_;
};

/// Result of exact division p / q.
struct DivResult {
    std::optional<MultiPoly> quotient;  ///< set iff q divides p
    MultiPoly remainder;                ///< division-algorithm remainder (zero iff divisible)
    bool divisible() const { return quotient.has_value(); }
};

/// Exact division by the graded-lex division algorithm; q must be nonzero.
DivResult poly_divexact(const MultiPoly& p, const MultiPoly& q);

enum class HomogeneityKind { zero, homogeneous, mixed };

struct Homogeneity {
    HomogeneityKind kind;
    int degree;  ///< meaningful for kind == homogeneous
};

Homogeneity poly_homogeneity_check(const MultiPoly& p);

/// Precomputed form for repeated floating evaluation: exponent list plus
/// coefficients split into double-double pairs.
class CompiledPoly {
public:
    CompiledPoly() = default;
    explicit CompiledPoly(const MultiPoly& p);
    double eval(const std::array<double, kNumVars>& x) const;

private:
    struct Term {
        Exponents e;
        double hi;
        double lo;
    };
    std::vector<Term> terms_;
    int max_exp_ = 0;
};

}  // namespace flagjac
