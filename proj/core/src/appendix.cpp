#include "flagjac/appendix.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>

namespace flagjac {

namespace {

void check_order(int k) {
    if (k < 2 || k > 5) throw std::out_of_range("derivative order must be in 2..5, got " + std::to_string(k));
}

const std::map<std::array<int, 3>, Expression>& parsed_entries() {
    static const auto table = [] {
        std::map<std::array<int, 3>, Expression> m;
        for (const auto& e : appendix_entries()) m.emplace(std::array<int, 3>{e.k, e.i, e.j}, Expression::parse(e.text));
        return m;
    }();
    return table;
}

constexpr SummandFlip kSummandRepairs[] = {
    {3, 1, 4, 7, "x2 x6"},
    {3, 2, 4, 2, "x6 (x2^2 (4 x1^2 - x5^2) + x4^2 (x1^2 - 4 x5^2) + (x1^2 - x5^2) (x1^2 + 7 x3^2 + x5^2 + 7 x6^2))"},
    {3, 2, 5, 11, "x4 x6"},
    {3, 4, 5, 23, "x5 x2 x6 (4 x1^2 + x2^2 + 7 x3^2 + 4 x4^2 + x5^2 + 7 x6^2)"},
    {4, 4, 5, 7, "N (3 x3^2 - 5 x6^2)"},
    {5, 1, 4, 7, "x2 x6"},
    {5, 2, 4, 10, "x6 (x2^2 (4 x1^2 - x5^2) + x4^2 (x1^2 - 4 x5^2) + (x1^2 - x5^2) (x1^2 + 7 x3^2 + x5^2 + 7 x6^2))"},
    {5, 2, 5, 11, "x4 x6"},
    {5, 4, 5, 31, "x5 x2 x6 (4 x1^2 + x2^2 + 7 x3^2 + 4 x4^2 + x5^2 + 7 x6^2)"},
};

QSqrt2 inv_sqrt2() { return QSqrt2(0, mpq_class(1, 2)); }

bool is_nonzero_numeric(const QSqrt2& v) { return std::abs(v.to_double()) > 1e-6; }

struct MinimalEntryFlips {
    std::vector<EntryFlip> flips;
    std::vector<std::string> diagnostics;
};

MinimalEntryFlips minimal_entry_flips() {
    MinimalEntryFlips out;
    const RepairSearch rs = sign_repair_search(4, Variant::as_printed);
    for (int k = 2; k <= 5; ++k) {
        std::size_t best = 99;
        for (const auto& c : rs.accepted) {
            if (c.k == k) best = std::min(best, c.diagonal.size());
        }
        std::vector<const RepairCandidate*> minimal;
        for (const auto& c : rs.accepted) {
            if (c.k == k && c.diagonal.size() == best) minimal.push_back(&c);
        }
        if (minimal.size() != 1) {
            out.diagnostics.push_back("order " + std::to_string(k) + ": " +
                                      (minimal.empty() ? "no" : "no unique") +
                                      " minimal flip set, keeping the printed entries");
            continue;
        }
        for (int d : minimal.front()->diagonal) out.flips.push_back({k, d, d});
        for (const auto& l : minimal.front()->linked) {
            if (std::find(out.flips.begin(), out.flips.end(), l) == out.flips.end()) out.flips.push_back(l);
        }
    }
    return out;
}

}  // namespace

const Expression& appendix_expression(int k, int i, int j) {
    check_order(k);
    if (i > j) std::swap(i, j);
    return parsed_entries().at({k, i, j});
}

std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::as_printed: return "printed";
        case Variant::entry_repaired: return "entry-repaired";
        case Variant::repaired: return "repaired";
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view s) {
    if (s == "printed" || s == "as_printed") return Variant::as_printed;
    if (s == "repaired") return Variant::repaired;
    if (s == "entry-repaired" || s == "entry_repaired") return Variant::entry_repaired;
    return std::nullopt;
}

std::span<const SummandFlip> summand_repairs() { return kSummandRepairs; }

const FlipSet& variant_flips(Variant v) {
    static const std::array<FlipSet, 3> sets = [] {
        std::array<FlipSet, 3> s;
        MinimalEntryFlips m = minimal_entry_flips();
        for (const auto& d : m.diagnostics) std::clog << "flagjac: " << d << '\n';
        s[1].entries = m.flips;
        s[2].entries = m.flips;
        s[2].summands.assign(std::begin(kSummandRepairs), std::end(kSummandRepairs));
        return s;
    }();
    switch (v) {
        case Variant::as_printed: return sets[0];
        case Variant::entry_repaired: return sets[1];
        case Variant::repaired: return sets[2];
    }
    return sets[0];
}

PolyMatrix build_with_flips(int k, const FlipSet& flips) {
    check_order(k);
    PolyMatrix m;
    for (int i = 1; i <= kDim; ++i) {
        for (int j = i; j <= kDim; ++j) {
            const Expression& ex = appendix_expression(k, i, j);
            std::set<int> ids;
            for (const auto& f : flips.summands) {
                if (f.k != k || std::minmax(f.i, f.j) != std::minmax(i, j)) continue;
                if (ex.summand_text(f.summand) != f.text) {
                    throw std::logic_error("summand flip does not match source text at order " + std::to_string(k) +
                                           " entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
                }
                ids.insert(f.summand);
            }
            MultiPoly p = ex.expand(ids);
            for (const auto& f : flips.entries) {
                if (f.k == k && std::minmax(f.i, f.j) == std::minmax(i, j)) p = -p;
            }
            m(i - 1, j - 1) = std::move(p);
        }
    }
    return m;
}

const PolyMatrix& derivative_matrix(int k, Variant v) {
    check_order(k);
    static std::mutex mu;
    static std::map<std::pair<int, Variant>, std::unique_ptr<PolyMatrix>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({k, v});
        if (it != cache.end()) return *it->second;
    }
    // built outside the lock: repaired variants recurse into the printed one
    auto built = std::make_unique<PolyMatrix>(
        build_with_flips(k, v == Variant::as_printed ? FlipSet{} : variant_flips(v)));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.try_emplace({k, v}, std::move(built));
    return *it->second;
}

DerivativeMatrix build_derivative_matrix(int k, Variant v) {
    return DerivativeMatrix{k, v, variant_flips(v), derivative_matrix(k, v)};
}

SymMatrix6 eval_derivative(int k, const std::array<double, kNumVars>& x, Variant v) {
    return derivative_matrix(k, v).eval(x);
}

std::array<QSqrt2, kUpper> eval_derivative_exact(int k, const std::array<QSqrt2, kNumVars>& x, Variant v) {
    return derivative_matrix(k, v).eval_exact(x);
}

MultiPoly trace_poly(int k, Variant v) { return derivative_matrix(k, v).trace(); }

J5Decomposition j5_decompose(Variant v) {
    const PolyMatrix& j3 = derivative_matrix(3, v);
    const PolyMatrix& j5 = derivative_matrix(5, v);
    const MultiPoly n = MultiPoly::norm_squared();
    std::optional<QSqrt2> a;
    std::array<MultiPoly, kUpper> quotients;
    for (int i = 0; i < kDim; ++i) {
        for (int j = i; j < kDim; ++j) {
            DivResult q = poly_divexact(j5(i, j), n);
            if (!q.divisible()) throw DecompositionError("J5 entry not divisible by N", i + 1, j + 1);
            // Q = a J3 + N B, so the normal forms modulo N satisfy r(Q) = a r(J3)
            const MultiPoly rq = poly_divexact(*q.quotient, n).remainder;
            const MultiPoly r3 = poly_divexact(j3(i, j), n).remainder;
            if (r3.is_zero()) {
                if (!rq.is_zero()) throw DecompositionError("J5 remainder without matching J3 term", i + 1, j + 1);
            } else {
                const auto& [e3, c3] = r3.leading();
                auto it = rq.terms().find(e3);
                const QSqrt2 ratio = it == rq.terms().end() ? QSqrt2(0) : it->second * *c3.inverse();
                if (!(rq == r3 * ratio)) throw DecompositionError("J5 and J3 are not proportional modulo N", i + 1, j + 1);
                if (a && !(*a == ratio)) throw DecompositionError("inconsistent J3 coefficient " + ratio.str() + " vs " + a->str(), i + 1, j + 1);
                a = ratio;
            }
            quotients[static_cast<std::size_t>(upper_index(i, j))] = std::move(*q.quotient);
        }
    }
    J5Decomposition out;
    out.a = a.value_or(QSqrt2(0));
    for (int i = 0; i < kDim; ++i) {
        for (int j = i; j < kDim; ++j) {
            const MultiPoly rest = quotients[static_cast<std::size_t>(upper_index(i, j))] - out.a * j3(i, j);
            DivResult b = poly_divexact(rest, n);
            if (!b.divisible()) throw DecompositionError("J5 remainder not divisible by N^2", i + 1, j + 1);
            out.B(i, j) = std::move(*b.quotient);
        }
    }
    return out;
}

std::span<const RationalPoint> witness_points() {
    static const std::array<RationalPoint, 4> pts = {
        RationalPoint{1, 0, 1, 0, 1, 1},
        RationalPoint{0, inv_sqrt2(), 0, 0, 0, inv_sqrt2()},
        RationalPoint{1, 2, 0, 0, 1, 1},
        RationalPoint{1, 2, 3, 4, 5, 6},
    };
    return pts;
}

bool AuditReport::all_pass() const {
    return std::all_of(orders.begin(), orders.end(), [](const OrderAudit& o) { return o.zero; });
}

AuditReport audit_go_consistency(Variant v) {
    AuditReport rep;
    rep.variant = v;
    for (int k = 2; k <= 5; ++k) {
        OrderAudit o;
        o.k = k;
        o.trace = trace_poly(k, v);
        o.zero = o.trace.is_zero();
        if (!o.zero) {
            for (const auto& x : witness_points()) {
                const QSqrt2 t = o.trace.eval(x);
                if (is_nonzero_numeric(t)) o.witnesses.push_back({x, t, t.to_double()});
            }
        }
        rep.orders.push_back(std::move(o));
    }
    if (!rep.all_pass()) rep.suggestions = sign_repair_search(1, v).accepted;
    return rep;
}

RepairSearch sign_repair_search(int max_flips, Variant base) {
    if (max_flips < 0 || max_flips > 4) throw std::invalid_argument("max_flips must be in 0..4");
    RepairSearch out;
    out.max_flips = max_flips;
    std::vector<EntryFlip> linked;  // J5 flips implied by the unique minimal J3 set
    for (int k = 2; k <= 5; ++k) {
        PolyMatrix m = derivative_matrix(k, base);
        if (k == 5) {
            for (const auto& l : linked) m(l.i - 1, l.j - 1) = -m(l.i - 1, l.j - 1);
        }
        const MultiPoly tr = m.trace();
        std::vector<RationalPoint> wits;
        for (const auto& x : witness_points()) {
            if (is_nonzero_numeric(tr.eval(x))) wits.push_back(x);
        }
        const std::vector<EntryFlip> carried = k == 5 ? linked : std::vector<EntryFlip>{};
        if (tr.is_zero()) {
            RepairCandidate c{k, {}, carried, true, {}};
            out.evaluated.push_back(c);
            out.accepted.push_back(c);
            continue;
        }
        std::vector<const RepairCandidate*> k_accepted;
        for (int size = 1; size <= max_flips; ++size) {
            // subsets of {0..5} with `size` elements in lexicographic order
            std::vector<int> sel(kDim, 0);
            std::fill(sel.begin(), sel.begin() + size, 1);
            do {
                RepairCandidate c;
                c.k = k;
                c.linked = carried;
                MultiPoly t = tr;
                for (int d = 0; d < kDim; ++d) {
                    if (sel[static_cast<std::size_t>(d)] == 0) continue;
                    c.diagonal.push_back(d + 1);
                    t -= m(d, d) * QSqrt2(2);
                    if (k == 3) c.linked.push_back({5, d + 1, d + 1});
                }
                c.symbolic_zero = t.is_zero();
                for (const auto& x : wits) {
                    const QSqrt2 v = t.eval(x);
                    c.witness_traces.push_back({x, v, v.to_double()});
                }
                out.evaluated.push_back(c);
                if (c.symbolic_zero) out.accepted.push_back(c);
            } while (std::prev_permutation(sel.begin(), sel.end()));
        }
        if (k == 3) {
            std::size_t best = 99;
            int count = 0;
            for (const auto& c : out.accepted) {
                if (c.k != 3) continue;
                if (c.diagonal.size() < best) {
                    best = c.diagonal.size();
                    count = 1;
                } else if (c.diagonal.size() == best) {
                    ++count;
                }
            }
            if (count == 1) {
                for (const auto& c : out.accepted) {
                    if (c.k == 3 && c.diagonal.size() == best) linked = c.linked;
                }
            }
        }
    }
    return out;
}

}  // namespace flagjac
