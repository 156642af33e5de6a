#include "flagjac/expression.hpp"

#include <cctype>

namespace flagjac {

struct Expression::Node {
    enum class Kind { constant, variable, norm_sq, sum, product, quotient, power };
    Kind kind;
    QSqrt2 value;                // constant
    int var = 0;                 // variable index, or exponent for power
    std::vector<std::shared_ptr<const Node>> children;
    std::vector<int> signs;      // sum: +1 / -1 per child
    std::vector<int> ids;        // sum: summand id per child
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

std::shared_ptr<Expression::Node> make(Kind k) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = k;
    return n;
}

MultiPoly expand_node(const Expression::Node& n, const std::set<int>& flipped) {
    switch (n.kind) {
        case Kind::constant: return MultiPoly(n.value);
        case Kind::variable: return MultiPoly::var(n.var);
        case Kind::norm_sq: return MultiPoly::norm_squared();
        case Kind::sum: {
            MultiPoly s;
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                int sign = n.signs[i];
                if (flipped.count(n.ids[i]) != 0) sign = -sign;
                MultiPoly c = expand_node(*n.children[i], flipped);
                if (sign > 0) {
                    s += c;
                } else {
                    s -= c;
                }
            }
            return s;
        }
        case Kind::product: {
            MultiPoly p(1);
            for (const auto& c : n.children) p = p * expand_node(*c, flipped);
            return p;
        }
        case Kind::quotient: {
            const MultiPoly den = expand_node(*n.children[1], flipped);
            const QSqrt2 d = den.is_zero() ? QSqrt2(0) : den.leading().second;
            return expand_node(*n.children[0], flipped) * *d.inverse();
        }
        case Kind::power: return expand_node(*n.children[0], flipped).pow(static_cast<unsigned>(n.var));
    }
    return {};
}

class Parser {
public:
    Parser(std::string_view src, std::vector<Summand>& out) : s_(src), summands_(out) {}

    NodePtr parse_all() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool starts_primary() {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 's' || c == 'N' || c == '(';
    }

    NodePtr expr() {
        auto sum = std::make_shared<Expression::Node>();
        sum->kind = Kind::sum;
        ++depth_;
        int sign = 1;
        char c = peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++pos_;
        }
        for (;;) {
            skip_ws();
            const int id = static_cast<int>(summands_.size());
            summands_.push_back({id, pos_, pos_, depth_});
            NodePtr t = term();
            summands_[static_cast<std::size_t>(id)].end = last_end_;
            sum->children.push_back(t);
            sum->signs.push_back(sign);
            sum->ids.push_back(id);
            c = peek();
            if (c != '+' && c != '-') break;
            sign = c == '-' ? -1 : 1;
            ++pos_;
        }
        --depth_;
        return sum;
    }

    NodePtr term() {
        auto prod = std::make_shared<Expression::Node>();
        prod->kind = Kind::product;
        NodePtr acc = factor();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                prod->children.push_back(acc);
                acc = factor();
            } else if (c == '/') {
                const std::size_t at = pos_;
                ++pos_;
                NodePtr den = factor();
                const MultiPoly d = expand_node(*den, {});
                if (d.degree() != 0) throw ParseError("divisor must be a nonzero constant", at);
                auto q = make(Kind::quotient);
                q->children = {acc, den};
                acc = q;
            } else if (starts_primary()) {
                prod->children.push_back(acc);
                acc = factor();
            } else {
                break;
            }
        }
        if (prod->children.empty()) return acc;
        prod->children.push_back(acc);
        return prod;
    }

    NodePtr factor() {
        NodePtr base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) throw ParseError("expected integer exponent", start);
            auto p = make(Kind::power);
            p->var = std::stoi(std::string(s_.substr(start, pos_ - start)));
            p->children = {base};
            last_end_ = pos_;
            return p;
        }
        return base;
    }

    NodePtr primary() {
        const char c = peek();
        const std::size_t start = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            auto n = make(Kind::constant);
            n->value = QSqrt2(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
            last_end_ = pos_;
            return n;
        }
        if (c == 'x') {
            ++pos_;
            if (pos_ >= s_.size() || s_[pos_] < '1' || s_[pos_] > '6') throw ParseError("expected variable x1..x6", start);
            auto n = make(Kind::variable);
            n->var = s_[pos_] - '1';
            ++pos_;
            last_end_ = pos_;
            return n;
        }
        if (s_.substr(pos_, 5) == "sqrt2") {
            pos_ += 5;
            auto n = make(Kind::constant);
            n->value = QSqrt2::sqrt2();
            last_end_ = pos_;
            return n;
        }
        if (c == 'N') {
            ++pos_;
            last_end_ = pos_;
            return make(Kind::norm_sq);
        }
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            last_end_ = pos_;
            return e;
        }
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    std::string_view s_;
    std::vector<Summand>& summands_;
    std::size_t pos_ = 0;
    std::size_t last_end_ = 0;
    int depth_ = -1;
};

}  // namespace

Expression Expression::parse(std::string_view source) {
    Expression e;
    e.source_ = std::string(source);
    Parser p(e.source_, e.summands_);
    e.root_ = p.parse_all();
    return e;
}

std::string_view Expression::summand_text(int id) const {
    const Summand& s = summands_.at(static_cast<std::size_t>(id));
    return std::string_view(source_).substr(s.begin, s.end - s.begin);
}

MultiPoly Expression::expand(const std::set<int>& flipped) const { return expand_node(*root_, flipped); }

// Defined here so the polynomial text form shares the expression grammar.
MultiPoly MultiPoly::parse(std::string_view text) { return Expression::parse(text).expand(); }

}  // namespace flagjac
