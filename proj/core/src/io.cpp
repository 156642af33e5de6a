#include "flagjac/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <limits>
#include <sstream>

namespace flagjac {

using Json = nlohmann::ordered_json;

namespace {

std::string scalar_text(const Json& v) {
    switch (v.type()) {
        case Json::value_t::string: return v.get<std::string>();
        case Json::value_t::boolean: return v.get<bool>() ? "true" : "false";
        case Json::value_t::number_float: return fmt17(v.get<double>());
        case Json::value_t::number_integer: return std::to_string(v.get<std::int64_t>());
        case Json::value_t::number_unsigned: return std::to_string(v.get<std::uint64_t>());
        case Json::value_t::null: return "null";
        default: return v.dump();
    }
}

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

bool scalar_array(const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v) {
        if (!is_scalar(e)) return false;
    }
    return true;
}

std::string inline_array(const Json& v) {
    std::string s = "[";
    bool first = true;
    for (const auto& e : v) {
        if (!first) s += ", ";
        first = false;
        s += scalar_text(e);
    }
    return s + "]";
}

void render_text(const Json& obj, int indent, std::ostringstream& os) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, v] : obj.items()) {
        if (is_scalar(v)) {
            os << pad << key << ": " << scalar_text(v) << '\n';
        } else if (scalar_array(v)) {
            os << pad << key << ": " << inline_array(v) << '\n';
        } else if (v.is_object()) {
            os << pad << key << ":\n";
            render_text(v, indent + 2, os);
        } else {
            os << pad << key << ":\n";
            for (const auto& e : v) {
                if (scalar_array(e)) {
                    os << pad << "  - " << inline_array(e) << '\n';
                } else if (e.is_object()) {
                    os << pad << "  -\n";
                    render_text(e, indent + 4, os);
                } else {
                    os << pad << "  - " << scalar_text(e) << '\n';
                }
            }
        }
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void flatten(const Json& v, const std::string& path, std::ostringstream& os) {
    if (v.is_object()) {
        for (const auto& [key, e] : v.items()) flatten(e, path.empty() ? key : path + "." + key, os);
    } else if (v.is_array()) {
        std::size_t i = 0;
        for (const auto& e : v) flatten(e, path + "[" + std::to_string(i++) + "]", os);
    } else {
        os << csv_field(path) << ',' << csv_field(scalar_text(v)) << '\n';
    }
}

Json provenance_json(const Provenance& prov) {
    Json p = Json::object();
    for (const auto& [k, v] : prov) p[k] = v;
    return p;
}

void provenance_comments(const Provenance& prov, std::ostringstream& os) {
    for (const auto& [k, v] : prov) os << "# " << k << ": " << v << '\n';
}

/// Generic emission: json as-is, text as indented key/value lines, csv as
/// flattened path,value rows.
std::string emit(const Json& doc, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::json: return doc.dump(2) + "\n";
        case Format::text: render_text(doc, 0, os); break;
        case Format::csv:
            os << "field,value\n";
            flatten(doc, "", os);
            break;
    }
    return os.str();
}

Json doubles(const auto& range) {
    Json a = Json::array();
    for (double v : range) a.push_back(v);
    return a;
}

Json exact_point(const RationalPoint& x) {
    Json a = Json::array();
    for (const auto& q : x) a.push_back(q.str());
    return a;
}

Json witness_json(const TraceWitness& w) {
    return Json{{"x", exact_point(w.x)}, {"exact", w.exact.str()}, {"value", w.value}};
}

Json candidate_json(const RepairCandidate& c) {
    Json linked = Json::array();
    for (const auto& e : c.linked) linked.push_back(Json{{"k", e.k}, {"i", e.i}, {"j", e.j}});
    Json wit = Json::array();
    for (const auto& w : c.witness_traces) wit.push_back(witness_json(w));
    Json diag = Json::array();
    for (int d : c.diagonal) diag.push_back(Json::array({d, d}));
    return Json{{"k", c.k}, {"flipped_entries", diag}, {"linked", linked}, {"symbolic_zero", c.symbolic_zero}, {"witness_traces", wit}};
}

Json entry_residuals(const std::vector<EntryResidual>& es) {
    Json a = Json::array();
    for (const auto& e : es) a.push_back(Json{{"k", e.k}, {"i", e.i}, {"j", e.j}, {"residual", e.residual}});
    return a;
}

Json matrix_rows(const Eigen::MatrixXd& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
        rows.push_back(r);
    }
    return rows;
}

double number_or_inf(const Json& v) {
    return v.is_null() ? std::numeric_limits<double>::infinity() : v.get<double>();
}

}  // namespace

std::optional<Format> parse_format(std::string_view s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "text") return Format::text;
    return std::nullopt;
}

std::string_view format_name(Format f) {
    switch (f) {
        case Format::json: return "json";
        case Format::csv: return "csv";
        case Format::text: return "text";
    }
    return "?";
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string write_matrix(const MatrixArtifact& m, Format f, const Provenance& prov) {
    if (f == Format::csv) {
        std::ostringstream os;
        provenance_comments(prov, os);
        os << "# k: " << m.k << "\n# variant: " << variant_name(m.variant) << "\n# x:";
        for (double v : m.x) os << ' ' << fmt17(v);
        os << '\n';
        for (int i = 0; i < kDim; ++i) {
            for (int j = 0; j < kDim; ++j) os << (j ? "," : "") << fmt17(m.matrix(i, j));
            os << '\n';
        }
        return os.str();
    }
    Json doc{{"kind", "matrix"}, {"k", m.k}, {"variant", std::string(variant_name(m.variant))}, {"x", doubles(m.x)}};
    if (m.x_exact) doc["x_exact"] = exact_point(*m.x_exact);
    doc["matrix"] = matrix_rows(m.matrix);
    if (m.exact) {
        Json e = Json::array();
        for (const auto& q : *m.exact) e.push_back(q.str());
        doc["exact"] = e;
    }
    doc["provenance"] = provenance_json(prov);
    return emit(doc, f);
}

std::string write_audit(const AuditReport& r, Format f, const Provenance& prov) {
    Json orders = Json::array();
    for (const auto& o : r.orders) {
        Json wit = Json::array();
        for (const auto& w : o.witnesses) wit.push_back(witness_json(w));
        orders.push_back(Json{{"k", o.k}, {"trace_zero", o.zero}, {"trace", o.trace.str()}, {"witnesses", wit}});
    }
    Json sugg = Json::array();
    for (const auto& c : r.suggestions) sugg.push_back(candidate_json(c));
    Json failing = Json::array();
    for (const auto& o : r.orders) {
        if (!o.zero) failing.push_back(o.k);
    }
    Json doc{{"kind", "audit"},
             {"variant", std::string(variant_name(r.variant))},
             {"all_pass", r.all_pass()},
             {"failing_orders", failing},
             {"orders", orders},
             {"suggestions", sugg},
             {"provenance", provenance_json(prov)}};
    return emit(doc, f);
}

std::string write_repair(const RepairSearch& search, const OracleRepair* oracle, Format f, const Provenance& prov) {
    Json acc = Json::array();
    for (const auto& c : search.accepted) acc.push_back(candidate_json(c));
    Json ev = Json::array();
    for (const auto& c : search.evaluated) ev.push_back(candidate_json(c));
    Json doc{{"kind", "repair"}, {"max_flips", search.max_flips}, {"accepted", acc}, {"evaluated", ev}};
    if (oracle) {
        auto entries = [](const std::vector<EntryFlip>& v) {
            Json a = Json::array();
            for (const auto& e : v) a.push_back(Json{{"k", e.k}, {"i", e.i}, {"j", e.j}});
            return a;
        };
        Json sf = Json::array();
        for (const auto& s : oracle->flips) {
            sf.push_back(Json{{"k", s.k}, {"i", s.i}, {"j", s.j}, {"summand", s.summand}, {"text", std::string(s.text)}});
        }
        doc["oracle"] = Json{{"entries_compared", oracle->entries_compared},
                             {"entry_flips", entries(oracle->entry_flips)},
                             {"summand_flips", sf},
                             {"unresolved", entries(oracle->unresolved)}};
    }
    doc["provenance"] = provenance_json(prov);
    return emit(doc, f);
}

std::string write_calibration(const Calibration& cal, Format f, const Provenance& prov, const ValidationResult* validation) {
    const auto& L = cal.table.layout;
    Json doc{{"kind", "calibration"},
             {"layout", Json{{"pair_root", L.pair_root}, {"orientation", L.orientation}}},
             {"metric", doubles(cal.table.metric)},
             {"curvature_sign", cal.curvature_sign},
             {"epsilon", cal.epsilon},
             {"scale", cal.scale},
             {"order_constants", doubles(cal.order_constants)},
             {"search",
              Json{{"target", std::string(variant_name(cal.target))},
                   {"tol", cal.tol},
                   {"seed", cal.seed},
                   {"samples", cal.samples},
                   {"candidate_index", cal.candidate_index},
                   {"candidates_evaluated", cal.candidates_evaluated},
                   {"matching_candidates", cal.matching_candidates},
                   {"matched", cal.matched},
                   {"residual", cal.residual},
                   {"order_residual", doubles(cal.order_residual)},
                   {"mismatched_entries", cal.mismatched_entries},
                   {"worst_entries", entry_residuals(cal.worst_entries)}}}};
    if (validation) {
        doc["validation"] = Json{{"samples", validation->samples},
                                 {"residual", validation->residual},
                                 {"order_residual", doubles(validation->order_residual)},
                                 {"worst_entries", entry_residuals(validation->worst_entries)}};
    }
    doc["provenance"] = provenance_json(prov);
    return emit(doc, f);
}

Calibration read_calibration(std::string_view text) {
    try {
        const Json doc = Json::parse(text);
        if (doc.value("kind", "") != "calibration") throw ArtifactError("not a calibration artifact");
        BasisLayout layout;
        layout.pair_root = doc.at("layout").at("pair_root").get<std::array<int, 3>>();
        layout.orientation = doc.at("layout").at("orientation").get<std::array<int, 3>>();
        Calibration cal;
        cal.table = build_bracket_table(doc.at("metric").get<std::array<double, 3>>(), layout);
        cal.curvature_sign = doc.at("curvature_sign").get<int>();
        cal.epsilon = doc.at("epsilon").get<int>();
        cal.scale = doc.at("scale").get<double>();
        cal.order_constants = doc.at("order_constants").get<std::array<double, 4>>();
        const Json& s = doc.at("search");
        const auto target = parse_variant(s.at("target").get<std::string>());
        if (!target) throw ArtifactError("unknown calibration target");
        cal.target = *target;
        cal.tol = s.at("tol").get<double>();
        cal.seed = s.at("seed").get<std::uint64_t>();
        cal.samples = s.at("samples").get<int>();
        cal.candidate_index = s.at("candidate_index").get<int>();
        cal.candidates_evaluated = s.at("candidates_evaluated").get<int>();
        cal.matching_candidates = s.at("matching_candidates").get<int>();
        cal.matched = s.at("matched").get<bool>();
        cal.residual = number_or_inf(s.at("residual"));
        for (std::size_t i = 0; i < 4; ++i) cal.order_residual[i] = number_or_inf(s.at("order_residual").at(i));
        cal.mismatched_entries = s.at("mismatched_entries").get<int>();
        for (const auto& e : s.at("worst_entries")) {
            cal.worst_entries.push_back({e.at("k").get<int>(), e.at("i").get<int>(), e.at("j").get<int>(), number_or_inf(e.at("residual"))});
        }
        if (std::abs(cal.curvature_sign) != 1 || std::abs(cal.epsilon) != 1) throw ArtifactError("calibration signs must be +-1");
        return cal;
    } catch (const Json::exception& e) {
        throw ArtifactError(std::string("malformed calibration: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ArtifactError(std::string("invalid calibration: ") + e.what());
    }
}

std::string write_recurrence(const Recurrence& rec, const RecurrenceCheck* check, Format f, const Provenance& prov) {
    Json rational = Json::array();
    for (double c : rec.coefficients) rational.push_back(rational_approx(c).str());
    Json doc{{"kind", "recurrence"},
             {"found", rec.found},
             {"well_conditioned", rec.well_conditioned},
             {"order", rec.order},
             {"lhs", rec.lhs},
             {"basis", rec.basis},
             {"coefficients", doubles(rec.coefficients)},
             {"coefficients_rational", rational},
             {"fit_residual", rec.fit_residual},
             {"heldout_residual", rec.heldout_residual},
             {"samples_used", rec.samples_used},
             {"samples_skipped", rec.samples_skipped},
             {"singular_values", doubles(rec.singular_values)},
             {"seed", rec.seed},
             {"diagnostic", rec.diagnostic}};
    if (check) {
        doc["check"] = Json{{"samples", check->samples},
                            {"fresh_residual", check->fresh_residual},
                            {"shifted_residual", doubles(check->shifted_residual)},
                            {"rescaled_residual", check->rescaled_residual},
                            {"krylov_degrees", check->krylov_degrees},
                            {"krylov_consistent", check->krylov_consistent}};
    }
    doc["provenance"] = provenance_json(prov);
    return emit(doc, f);
}

std::string write_trajectory(const FieldTrajectory& tr, Format f, const Provenance& prov) {
    const Eigen::Index cols = tr.y.empty() ? 0 : tr.y.front().cols();
    if (f == Format::json) {
        Json t = doubles(tr.t);
        Json y = Json::array();
        Json dy = Json::array();
        for (std::size_t i = 0; i < tr.t.size(); ++i) {
            y.push_back(matrix_rows(tr.y[i]));
            dy.push_back(matrix_rows(tr.dy[i]));
        }
        Json doc{{"kind", "trajectory"},
                 {"method", std::string(method_name(tr.method))},
                 {"h", tr.h},
                 {"columns", cols},
                 {"t", t},
                 {"y", y},
                 {"dy", dy},
                 {"provenance", provenance_json(prov)}};
        return doc.dump(2) + "\n";
    }
    const char sep = f == Format::csv ? ',' : ' ';
    std::ostringstream os;
    provenance_comments(prov, os);
    os << "# method: " << method_name(tr.method) << "\n# h: " << fmt17(tr.h) << '\n';
    if (f == Format::text) os << "# ";
    os << 't';
    for (const char* name : {"y", "dy"}) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            for (int r = 0; r < kDim; ++r) os << sep << name << r + 1 << '_' << c + 1;
        }
    }
    os << '\n';
    for (std::size_t i = 0; i < tr.t.size(); ++i) {
        os << fmt17(tr.t[i]);
        for (const auto* m : {&tr.y[i], &tr.dy[i]}) {
            for (Eigen::Index c = 0; c < cols; ++c) {
                for (int r = 0; r < kDim; ++r) os << sep << fmt17((*m)(r, c));
            }
        }
        os << '\n';
    }
    return os.str();
}

std::string write_conjugate(const std::vector<ConjugatePoint>& pts, Format f, const Provenance& prov) {
    if (f == Format::csv) {
        std::ostringstream os;
        provenance_comments(prov, os);
        os << "t,multiplicity,indicator\n";
        for (const auto& p : pts) os << fmt17(p.t) << ',' << p.multiplicity << ',' << fmt17(p.indicator) << '\n';
        return os.str();
    }
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(Json{{"t", p.t}, {"multiplicity", p.multiplicity}, {"indicator", p.indicator}});
    Json doc{{"kind", "conjugate_points"}, {"count", pts.size()}, {"points", a}, {"provenance", provenance_json(prov)}};
    return emit(doc, f);
}

}  // namespace flagjac
