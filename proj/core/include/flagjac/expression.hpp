#pragma once

#include "flagjac/multipoly.hpp"

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace flagjac {

/// One additive term of some sum in the source text.
struct Summand {
    int id;             ///< position in reading order, starting at 0
    std::size_t begin;  ///< byte span in the source, sign excluded
    std::size_t end;
    int depth;          ///< parenthesis nesting level of the owning sum
};

/// Parsed arithmetic expression kept as a tree, so individual summands can
/// be sign-flipped before expansion.
///
/// Grammar: integers, x1..x6, sqrt2, N (= x1^2 + ... + x6^2), + - * / ^ and
/// parentheses. Juxtaposition multiplies. Divisors must be constant.
class Expression {
public:
    static Expression parse(std::string_view source);

    const std::string& source() const { return source_; }
    const std::vector<Summand>& summands() const { return summands_; }
    std::string_view summand_text(int id) const;

    MultiPoly expand() const { return expand({}); }
    /// Expansion with the listed summands negated.
    MultiPoly expand(const std::set<int>& flipped) const;

    struct Node;

private:
    std::string source_;
    std::vector<Summand> summands_;
    std::shared_ptr<const Node> root_;
};

}  // namespace flagjac
