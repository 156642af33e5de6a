#pragma once

#include "flagjac/expression.hpp"
#include "flagjac/poly_matrix.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flagjac {

/// One printed entry of the derivative matrix of order k (1-based i <= j).
struct AppendixEntry {
    int k;
    int i;
    int j;
    const char* text;
};

std::span<const AppendixEntry> appendix_entries();

/// Parsed expression of entry (i, j) of order k, 1-based, either order of i, j.
const Expression& appendix_expression(int k, int i, int j);

enum class Variant {
    as_printed,      ///< token-for-token transcription
    entry_repaired,  ///< minimal whole-entry sign flips from the trace search
    repaired,        ///< entry flips plus localized single-summand sign flips
};

std::string_view variant_name(Variant v);
/// Accepts "printed", "as_printed", "repaired", "entry-repaired", "entry_repaired".
std::optional<Variant> parse_variant(std::string_view s);

struct EntryFlip {
    int k;
    int i;
    int j;
    friend bool operator==(const EntryFlip&, const EntryFlip&) = default;
};

/// Sign flip of one additive summand of a printed entry.
struct SummandFlip {
    int k;
    int i;
    int j;
    int summand;            ///< Summand::id within appendix_expression(k, i, j)
    std::string_view text;  ///< expected source text of that summand
    friend bool operator==(const SummandFlip&, const SummandFlip&) = default;
};

struct FlipSet {
    std::vector<EntryFlip> entries;
    std::vector<SummandFlip> summands;
    bool empty() const { return entries.empty() && summands.empty(); }
};

/// Summand-level sign corrections applied by Variant::repaired on top of the
/// entry flips. Located by exact comparison with the Lie-algebra oracle.
std::span<const SummandFlip> summand_repairs();

/// Flip set realizing a variant (empty for as_printed).
const FlipSet& variant_flips(Variant v);

struct DerivativeMatrix {
    int k;
    Variant variant;
    FlipSet flips;
    PolyMatrix matrix;
};

/// Throws std::out_of_range unless 2 <= k <= 5.
DerivativeMatrix build_derivative_matrix(int k, Variant v);
/// Same matrix without the flip bookkeeping; cached.
const PolyMatrix& derivative_matrix(int k, Variant v);
PolyMatrix build_with_flips(int k, const FlipSet& flips);

SymMatrix6 eval_derivative(int k, const std::array<double, kNumVars>& x, Variant v);
std::array<QSqrt2, kUpper> eval_derivative_exact(int k, const std::array<QSqrt2, kNumVars>& x, Variant v);

MultiPoly trace_poly(int k, Variant v = Variant::as_printed);

class DecompositionError : public std::runtime_error {
public:
    DecompositionError(const std::string& what, int i, int j)
        : std::runtime_error(what + " at entry (" + std::to_string(i) + "," + std::to_string(j) + ")"), i_(i), j_(j) {}
    int i() const { return i_; }
    int j() const { return j_; }

private:
    int i_;
    int j_;
};

struct J5Decomposition {
    QSqrt2 a;     ///< coefficient of N * J3
    PolyMatrix B; ///< cubic matrix multiplying N^2
};

/// Splits J5 = a N J3 + N^2 B entrywise; throws DecompositionError naming the
/// first entry where divisibility or the common ratio breaks.
J5Decomposition j5_decompose(Variant v = Variant::as_printed);

using RationalPoint = std::array<QSqrt2, kNumVars>;

struct TraceWitness {
    RationalPoint x;
    QSqrt2 exact;
    double value;
};

struct OrderAudit {
    int k;
    MultiPoly trace;
    bool zero;
    std::vector<TraceWitness> witnesses;  ///< points with |trace| > 1e-6
};

struct RepairCandidate {
    int k;
    std::vector<int> diagonal;      ///< flipped diagonal entries, 1-based
    std::vector<EntryFlip> linked;  ///< flips carried into J5 by J3 flips
    bool symbolic_zero;             ///< trace vanishes identically after the flips
    std::vector<TraceWitness> witness_traces;  ///< trace after the flips at the order's audit witnesses
};

struct RepairSearch {
    int max_flips;
    std::vector<RepairCandidate> accepted;   ///< ordered by cardinality
    std::vector<RepairCandidate> evaluated;  ///< every candidate examined
};

struct AuditReport {
    Variant variant;
    std::vector<OrderAudit> orders;
    std::vector<RepairCandidate> suggestions;
    bool all_pass() const;
};

/// Fixed rational witness points tried in order.
std::span<const RationalPoint> witness_points();

AuditReport audit_go_consistency(Variant v);

/// Diagonal sign flips (off-diagonal flips cannot change a trace), cardinality
/// at most max_flips <= 4; J3 flips propagate to the same J5 entries.
RepairSearch sign_repair_search(int max_flips, Variant base = Variant::as_printed);

}  // namespace flagjac
