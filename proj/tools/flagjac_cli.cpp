#include "flagjac/io.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace fs = std::filesystem;
using namespace flagjac;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMissing = 3;

constexpr std::uint64_t kValidationSalt = 0xC2B2AE3D27D4EB4FULL;
constexpr std::uint64_t kFieldsSalt = 0x165667B19E3779F9ULL;
constexpr int kFieldBatch = 16;
constexpr double kWronskianTol = 1e-8;
constexpr double kMethodTol = 1e-6;
constexpr const char* kDefaultCalibration = "calibration.json";
constexpr const char* kVersion = "0.1.0";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingArtifact : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct RunConfig {
    std::string command;
    int k = 0;
    std::string x;
    std::string variant;
    double tol = kUnset;
    int samples = 500;
    std::uint64_t seed = 42;
    double t_max = kUnset;
    double h = kUnset;
    std::string format = "text";
    std::string out;
    std::string calibration;
    bool no_calibrate = false;
    // command specific
    int max_flips = 1;
    std::string method = "constcoef";
    double synthetic = kUnset;
    std::string y0;
    std::string v0;
};

double or_default(double v, double d) { return std::isnan(v) ? d : v; }

fs::path output_dir() {
    const char* env = std::getenv("FLAGJAC_OUTPUT_DIR");
    return env && *env ? fs::path(env) : fs::path(".");
}

fs::path calibration_path(const RunConfig& c) {
    return c.calibration.empty() ? output_dir() / kDefaultCalibration : fs::path(c.calibration);
}

void write_file(const fs::path& p, const std::string& content) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << content;
}

void emit(const RunConfig& c, const std::string& content) {
    if (c.out.empty() || c.out == "-") {
        std::cout << content;
    } else {
        write_file(c.out, content);
    }
}

Format format_of(const RunConfig& c) {
    auto f = parse_format(c.format);
    if (!f) throw UsageError("--format must be json, csv or text");
    return *f;
}

Variant variant_of(const RunConfig& c, Variant fallback) {
    if (c.variant.empty()) return fallback;
    auto v = parse_variant(c.variant);
    if (!v) throw UsageError("--variant must be printed, entry-repaired or repaired");
    return *v;
}

struct ParsedX {
    Point6 x{};
    std::optional<RationalPoint> exact;
};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

ParsedX parse_vector(const std::string& text, const char* flag) {
    std::vector<std::string> tok;
    std::stringstream ss(text);
    for (std::string t; std::getline(ss, t, ',');) tok.push_back(trim(t));
    if (tok.size() != kNumVars) throw UsageError(std::string(flag) + " needs 6 comma-separated numbers");
    ParsedX p;
    RationalPoint exact;
    bool all_exact = true;
    for (std::size_t i = 0; i < tok.size(); ++i) {
        if (auto q = QSqrt2::parse(tok[i])) {
            exact[i] = *q;
            p.x[i] = q->to_double();
            continue;
        }
        all_exact = false;
        double v = 0.0;
        const char* b = tok[i].data();
        const char* e = b + tok[i].size();
        const auto [ptr, ec] = std::from_chars(b, e, v);
        if (ec != std::errc() || ptr != e || !std::isfinite(v)) {
            throw UsageError(std::string(flag) + ": malformed component '" + tok[i] + "'");
        }
        p.x[i] = v;
    }
    if (all_exact) p.exact = exact;
    return p;
}

Vector6 as_vector(const Point6& p) { return Eigen::Map<const Vector6>(p.data()); }

Provenance provenance(const RunConfig& c) {
    Provenance p{{"tool", std::string("flagjac ") + kVersion}, {"command", c.command}};
    auto add = [&p](const char* k, std::string v) { p.emplace_back(k, std::move(v)); };
    if (c.command == "eval") add("k", std::to_string(c.k));
    if (!c.x.empty()) add("x", c.x);
    if (!c.variant.empty()) add("variant", c.variant);
    if (!std::isnan(c.tol)) add("tol", fmt17(c.tol));
    add("samples", std::to_string(c.samples));
    add("seed", std::to_string(c.seed));
    if (!std::isnan(c.t_max)) add("t_max", fmt17(c.t_max));
    if (!std::isnan(c.h)) add("h", fmt17(c.h));
    add("format", c.format);
    if (c.command == "repair") add("max_flips", std::to_string(c.max_flips));
    if (!std::isnan(c.synthetic)) add("synthetic", fmt17(c.synthetic));
    if (!c.y0.empty()) add("y0", c.y0);
    if (!c.v0.empty()) add("v0", c.v0);
    if (c.no_calibrate) add("no_calibrate", "true");
    return p;
}

/// Loads the persisted calibration, or calibrates in memory unless
/// --no-calibrate forbids it.
Calibration obtain_calibration(const RunConfig& c) {
    const fs::path path = calibration_path(c);
    if (fs::exists(path)) {
        std::ifstream f(path, std::ios::binary);
        std::stringstream buf;
        buf << f.rdbuf();
        try {
            return read_calibration(buf.str());
        } catch (const ArtifactError& e) {
            throw MissingArtifact(path.string() + ": " + e.what());
        }
    }
    if (c.no_calibrate) throw MissingArtifact("calibration " + path.string() + " not found and --no-calibrate given");
    // a file named on the command line is a hard prerequisite
    if (!c.calibration.empty()) throw MissingArtifact("calibration " + path.string() + " not found");
    std::cerr << "flagjac: no calibration at " << path.string() << ", calibrating in memory\n";
    CalibrationOptions opt;
    opt.seed = c.seed;
    return calibrate(opt);
}

JacobiSystem system_of(const RunConfig& c) {
    if (!std::isnan(c.synthetic)) {
        if (!c.x.empty()) throw UsageError("--synthetic and --x are exclusive");
        return JacobiSystem::constant(c.synthetic * SymMatrix6::Identity());
    }
    if (c.x.empty()) throw UsageError("--x is required");
    const ParsedX px = parse_vector(c.x, "--x");
    return JacobiSystem::from_calibration(as_vector(px.x), obtain_calibration(c));
}

int cmd_eval(RunConfig& c) {
    const Format f = format_of(c);
    const Variant v = variant_of(c, Variant::repaired);
    if (c.x.empty()) throw UsageError("--x is required");
    const ParsedX px = parse_vector(c.x, "--x");
    MatrixArtifact m;
    m.k = c.k;
    m.variant = v;
    m.x = px.x;
    if (px.exact) {
        const auto ex = eval_derivative_exact(c.k, *px.exact, v);
        for (int i = 0; i < kDim; ++i) {
            for (int j = i; j < kDim; ++j) m.matrix(i, j) = m.matrix(j, i) = ex[static_cast<std::size_t>(upper_index(i, j))].to_double();
        }
        if (f == Format::json) {
            m.exact = ex;
            m.x_exact = px.exact;
        }
    } else {
        m.matrix = eval_derivative(c.k, px.x, v);
    }
    emit(c, write_matrix(m, f, provenance(c)));
    return kExitPass;
}

int cmd_audit(RunConfig& c) {
    const Format f = format_of(c);
    const AuditReport r = audit_go_consistency(variant_of(c, Variant::repaired));
    emit(c, write_audit(r, f, provenance(c)));
    if (!r.all_pass()) {
        std::cerr << "flagjac: trace audit failed for k =";
        for (const auto& o : r.orders) {
            if (!o.zero) std::cerr << ' ' << o.k;
        }
        std::cerr << '\n';
        return kExitFail;
    }
    return kExitPass;
}

int cmd_repair(RunConfig& c) {
    const Format f = format_of(c);
    const Variant v = variant_of(c, Variant::as_printed);
    const RepairSearch rs = sign_repair_search(c.max_flips, v);
    const OracleRepair orc = oracle_repair_search(obtain_calibration(c));
    emit(c, write_repair(rs, &orc, f, provenance(c)));
    return orc.unresolved.empty() ? kExitPass : kExitFail;
}

int cmd_calibrate(RunConfig& c) {
    const Format f = format_of(c);
    CalibrationOptions opt;
    opt.target = variant_of(c, Variant::repaired);
    opt.tol = or_default(c.tol, 1e-9);
    opt.seed = c.seed;
    opt.samples = c.samples;
    const Calibration cal = calibrate(opt);
    const Provenance prov = provenance(c);
    write_file(calibration_path(c), write_calibration(cal, Format::json, prov));
    emit(c, write_calibration(cal, f, prov));
    return cal.matched ? kExitPass : kExitFail;
}

int cmd_verify(RunConfig& c) {
    const Format f = format_of(c);
    const Calibration cal = obtain_calibration(c);
    const double tol = or_default(c.tol, 1e-9);
    const ValidationResult val = cross_validate(cal, variant_of(c, Variant::repaired), c.seed ^ kValidationSalt, c.samples, tol);
    emit(c, write_calibration(cal, f, provenance(c), &val));
    return val.residual < tol ? kExitPass : kExitFail;
}

bool recurrence_ok(const Recurrence& rec, const RecurrenceCheck& chk, double tol) {
    if (!rec.found || !rec.well_conditioned || !(chk.fresh_residual < tol) || !(chk.rescaled_residual < tol)) return false;
    for (double r : chk.shifted_residual) {
        if (!(r < tol)) return false;
    }
    return chk.krylov_consistent;
}

std::pair<Recurrence, RecurrenceCheck> run_rank(const RunConfig& c, const Calibration& cal, double tol) {
    RecurrenceOptions opt;
    opt.samples = c.samples;
    opt.seed = c.seed;
    opt.tol = tol;
    const Recurrence rec = find_recurrence(opt, cal);
    const RecurrenceCheck chk = verify_recurrence(rec, cal, c.seed ^ kValidationSalt, std::max(c.samples, 1));
    return {rec, chk};
}

int cmd_rank(RunConfig& c) {
    const Format f = format_of(c);
    const Calibration cal = obtain_calibration(c);
    const double tol = or_default(c.tol, 1e-9);
    const auto [rec, chk] = run_rank(c, cal, tol);
    emit(c, write_recurrence(rec, &chk, f, provenance(c)));
    if (!rec.well_conditioned) std::cerr << "flagjac: rank: " << rec.diagnostic << '\n';
    return recurrence_ok(rec, chk, tol) ? kExitPass : kExitFail;
}

Eigen::MatrixXd initial_block(const std::string& text, const char* flag, bool identity) {
    if (text.empty()) return identity ? Eigen::MatrixXd(Eigen::MatrixXd::Identity(kDim, kDim)) : Eigen::MatrixXd(Eigen::MatrixXd::Zero(kDim, kDim));
    return as_vector(parse_vector(text, flag).x);
}

int cmd_fields(RunConfig& c) {
    const Format f = format_of(c);
    SolveOptions opt;
    opt.t_max = or_default(c.t_max, 2.0 * M_PI);
    opt.h = or_default(c.h, 1e-3);
    if (c.method == "constcoef") {
        opt.method = FieldMethod::constcoef;
    } else if (c.method == "rk4") {
        opt.method = FieldMethod::rk4;
    } else {
        throw UsageError("--method must be constcoef or rk4");
    }
    if (!(opt.h > 0.0) || !(std::abs(opt.t_max) <= 100.0)) throw UsageError("need h > 0 and |t_max| <= 100");
    const JacobiSystem sys = system_of(c);
    // default initial data: the fundamental solution Y(0) = 0, Y'(0) = I
    const bool single = !c.y0.empty() || !c.v0.empty();
    Eigen::MatrixXd y0 = initial_block(c.y0, "--y0", false);
    Eigen::MatrixXd v0 = initial_block(c.v0, "--v0", !single);
    if (single) {
        if (y0.cols() != 1) y0 = Eigen::VectorXd::Zero(kDim);
        if (v0.cols() != 1) v0 = Eigen::VectorXd::Zero(kDim);
    }
    FieldTrajectory tr;
    try {
        tr = solve_fields(sys, y0, v0, opt);
    } catch (const StepRejected& e) {
        std::cerr << "flagjac: fields: " << e.what() << '\n';
        return kExitFail;
    }
    emit(c, write_trajectory(tr, f, provenance(c)));
    const double drift = wronskian_drift(tr);
    if (!(drift < kWronskianTol)) {
        std::cerr << "flagjac: fields: Wronskian drift " << fmt17(drift) << " exceeds " << fmt17(kWronskianTol) << '\n';
        return kExitFail;
    }
    return kExitPass;
}

int cmd_conjugate(RunConfig& c) {
    const Format f = format_of(c);
    ConjugateOptions opt;
    opt.t_max = or_default(c.t_max, 10.0);
    opt.h = or_default(c.h, 1e-2);
    opt.tol = or_default(c.tol, 1e-10);
    if (!(opt.h > 0.0) || !(opt.t_max > 0.0 && opt.t_max <= 100.0)) throw UsageError("need h > 0 and 0 < t_max <= 100");
    const JacobiSystem sys = system_of(c);
    emit(c, write_conjugate(conjugate_points(sys, opt), f, provenance(c)));
    return kExitPass;
}

struct FieldsBatch {
    double method_diff = 0.0;
    double wronskian = 0.0;
    int trajectories = 0;
};

FieldsBatch run_fields_batch(const Calibration& cal, std::uint64_t seed, double t_max, double h) {
    FieldsBatch b;
    const Eigen::MatrixXd y0 = Eigen::MatrixXd::Zero(kDim, kDim);
    const Eigen::MatrixXd v0 = Eigen::MatrixXd::Identity(kDim, kDim);
    for (const auto& p : random_unit_vectors(seed, kFieldBatch)) {
        const JacobiSystem sys = JacobiSystem::from_calibration(as_vector(p), cal);
        SolveOptions opt;
        opt.t_max = t_max;
        opt.h = h;
        const auto cc = solve_fields(sys, y0, v0, opt);
        opt.method = FieldMethod::rk4;
        const auto rk = solve_fields(sys, y0, v0, opt);
        for (std::size_t i = 0; i < cc.t.size(); ++i) {
            b.method_diff = std::max(b.method_diff, (cc.y[i] - rk.y[i]).cwiseAbs().maxCoeff());
        }
        b.wronskian = std::max({b.wronskian, wronskian_drift(cc), wronskian_drift(rk)});
        ++b.trajectories;
    }
    return b;
}

int cmd_pipeline(RunConfig& c) {
    const double tol = or_default(c.tol, 1e-9);
    const Provenance prov = provenance(c);
    std::ostringstream sum;
    for (const auto& [k, v] : prov) sum << "# " << k << ": " << v << '\n';
    auto stage_time = std::chrono::steady_clock::now();
    auto lap = [&stage_time](const char* name) {
        const auto now = std::chrono::steady_clock::now();
        std::cerr << "flagjac: pipeline " << name << " took " << std::chrono::duration<double>(now - stage_time).count() << " s\n";
        stage_time = now;
    };
    auto fail = [&](const char* stage, const std::string& why) {
        sum << "FAIL stage " << stage << ": " << why << '\n';
        emit(c, sum.str());
        std::cerr << "flagjac: pipeline failed at stage " << stage << '\n';
        return kExitFail;
    };

    Calibration cal;
    if (c.no_calibrate) {
        cal = obtain_calibration(c);
        sum << "calibrate: loaded " << calibration_path(c).string() << '\n';
    } else {
        CalibrationOptions opt;
        opt.tol = tol;
        opt.seed = c.seed;
        opt.samples = c.samples;
        cal = calibrate(opt);
        write_file(calibration_path(c), write_calibration(cal, Format::json, prov));
    }
    sum << "calibrate: candidate " << cal.candidate_index << " of " << cal.candidates_evaluated << ", matching " << cal.matching_candidates
        << ", scale " << fmt17(cal.scale) << ", residual " << fmt17(cal.residual) << '\n';
    lap("calibrate");
    if (!cal.matched) return fail("calibrate", "no candidate convention below tolerance");

    const ValidationResult val = cross_validate(cal, Variant::repaired, c.seed ^ kValidationSalt, c.samples, tol);
    sum << "verify: " << val.samples << " fresh samples, residual " << fmt17(val.residual) << '\n';
    lap("verify");
    if (!(val.residual < tol)) return fail("verify", "cross-validation residual above tolerance");

    const auto [rec, chk] = run_rank(c, cal, tol);
    write_file(output_dir() / "recurrence.json", write_recurrence(rec, &chk, Format::json, prov));
    sum << "rank: samples used " << rec.samples_used << ", skipped " << rec.samples_skipped << '\n';
    if (!rec.lhs.empty()) {
        sum << "rank: order p = " << rec.order << ", " << rec.lhs << " =";
        for (std::size_t i = 0; i < rec.coefficients.size(); ++i) {
            sum << ' ' << (i ? "+ " : "") << "(" << fmt17(rec.coefficients[i]) << ") " << rec.basis[i];
        }
        sum << '\n';
        for (std::size_t i = 0; i < rec.basis.size(); ++i) {
            char buf[64];
            const double v = std::abs(rec.coefficients[i]) < 5e-9 ? 0.0 : rec.coefficients[i];
            std::snprintf(buf, sizeof buf, "%.8f", v);
            sum << "rank: coefficient of " << rec.basis[i] << " = " << buf << " ~ " << rational_approx(rec.coefficients[i]).str() << '\n';
        }
        sum << "rank: held-out residual " << fmt17(rec.heldout_residual) << ", fresh " << fmt17(chk.fresh_residual) << ", rescaled "
            << fmt17(chk.rescaled_residual) << '\n';
        for (std::size_t m = 0; m < chk.shifted_residual.size(); ++m) {
            sum << "rank: shifted m=" << m + 1 << " residual " << fmt17(chk.shifted_residual[m]) << '\n';
        }
        sum << "rank: Krylov degrees";
        for (int d : chk.krylov_degrees) sum << ' ' << d;
        sum << '\n';
    }
    lap("rank");
    if (!rec.well_conditioned) return fail("rank", "ill-conditioned: " + rec.diagnostic);
    if (!recurrence_ok(rec, chk, tol)) return fail("rank", rec.diagnostic.empty() ? "relation checks above tolerance" : rec.diagnostic);

    const double t_max = or_default(c.t_max, 2.0 * M_PI);
    const double h = or_default(c.h, 1e-3);
    FieldsBatch fb;
    try {
        fb = run_fields_batch(cal, c.seed ^ kFieldsSalt, t_max, h);
    } catch (const StepRejected& e) {
        return fail("fields", e.what());
    }
    sum << "fields: " << fb.trajectories << " geodesics, constcoef vs rk4 " << fmt17(fb.method_diff) << ", Wronskian drift "
        << fmt17(fb.wronskian) << '\n';
    lap("fields");
    if (!(fb.method_diff < kMethodTol)) return fail("fields", "constcoef and rk4 disagree");
    if (!(fb.wronskian < kWronskianTol)) return fail("fields", "Wronskian drift above tolerance");

    sum << "PASS all stages\n";
    emit(c, sum.str());
    return kExitPass;
}

void add_common(CLI::App* s, RunConfig& c) {
    s->add_option("--format", c.format, "Output format: json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    s->add_option("--out", c.out, "Output file (default: standard output)");
}

void add_calibration(CLI::App* s, RunConfig& c) {
    s->add_option("--calibration", c.calibration, "Calibration file; must exist when given (default: $FLAGJAC_OUTPUT_DIR/calibration.json, computed in memory if absent)");
    s->add_flag("--no-calibrate", c.no_calibrate, "Fail with exit 3 instead of calibrating when the file is missing");
}

void add_sampling(CLI::App* s, RunConfig& c) {
    s->add_option("--samples", c.samples, "Number of sample directions")->check(CLI::Range(1, 1000000));
    s->add_option("--seed", c.seed, "Random seed");
    s->add_option("--tol", c.tol, "Tolerance")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobi operator derivatives on the flag manifold U(3)/T^3: evaluation, audit, calibration and Jacobi fields"};
    app.require_subcommand(1);
    // --h is the grid step, so help is long-form only
    app.set_help_flag("--help", "Print this help message and exit");
    app.set_version_flag("--version", kVersion);
    RunConfig c;

    auto* eval = app.add_subcommand("eval", "Evaluate J(k) at x");
    eval->add_option("--k", c.k, "Derivative order 2..5")->required()->check(CLI::Range(2, 5));
    eval->add_option("--x", c.x, "Six comma-separated components (integers, p/q or a+b*sqrt2 keep exact)")->required();
    eval->add_option("--variant", c.variant, "printed, entry-repaired or repaired (default)");
    add_common(eval, c);

    auto* audit = app.add_subcommand("audit", "Check that every trace polynomial vanishes");
    audit->add_option("--variant", c.variant, "printed, entry-repaired or repaired (default)");
    add_common(audit, c);

    auto* repair = app.add_subcommand("repair", "Sign repair search and oracle localization");
    repair->add_option("--variant", c.variant, "Base variant (default printed)");
    repair->add_option("--max-flips", c.max_flips, "Largest flip set size")->check(CLI::Range(1, 4));
    add_common(repair, c);
    add_calibration(repair, c);

    auto* calib = app.add_subcommand("calibrate", "Search the Lie-algebra convention matching a variant");
    calib->add_option("--variant", c.variant, "Target variant (default repaired)");
    calib->add_option("--calibration", c.calibration, "Where to store the calibration");
    add_sampling(calib, c);
    add_common(calib, c);

    auto* verify = app.add_subcommand("verify", "Cross-validate a calibration on fresh samples");
    verify->add_option("--variant", c.variant, "Target variant (default repaired)");
    add_sampling(verify, c);
    add_common(verify, c);
    add_calibration(verify, c);

    auto* rank = app.add_subcommand("rank", "Recover the constant osculating relation");
    add_sampling(rank, c);
    add_common(rank, c);
    add_calibration(rank, c);

    auto* fields = app.add_subcommand("fields", "Solve the Jacobi equation along a geodesic");
    fields->add_option("--x", c.x, "Geodesic direction");
    fields->add_option("--t-max", c.t_max, "End time, may be negative (default 2 pi)");
    fields->add_option("--h", c.h, "Grid step (default 1e-3)");
    fields->add_option("--method", c.method, "constcoef (default) or rk4");
    fields->add_option("--y0", c.y0, "Initial value (default 0)");
    fields->add_option("--v0", c.v0, "Initial derivative (default: identity, all six fields)");
    fields->add_option("--synthetic", c.synthetic, "Use J(t) = value * Identity instead of --x");
    add_common(fields, c);
    add_calibration(fields, c);

    auto* conj = app.add_subcommand("conjugate", "Conjugate points along a geodesic");
    conj->add_option("--x", c.x, "Geodesic direction");
    conj->add_option("--t-max", c.t_max, "Scan end (default 10)");
    conj->add_option("--h", c.h, "Scan step (default 1e-2)");
    conj->add_option("--tol", c.tol, "Location tolerance (default 1e-10)")->check(CLI::PositiveNumber);
    conj->add_option("--synthetic", c.synthetic, "Use J(t) = value * Identity instead of --x");
    add_common(conj, c);
    add_calibration(conj, c);

    auto* pipe = app.add_subcommand("pipeline", "calibrate, verify, rank and fields end to end");
    add_sampling(pipe, c);
    pipe->add_option("--t-max", c.t_max, "Field horizon (default 2 pi)");
    pipe->add_option("--h", c.h, "Field step (default 1e-3)");
    pipe->add_option("--out", c.out, "Summary file (default: standard output)");
    pipe->add_option("--format", c.format, "Summary is always text")->check(CLI::IsMember({"text"}));
    add_calibration(pipe, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = kExitPass;
    try {
        const CLI::App* sub = app.get_subcommands().front();
        c.command = sub->get_name();
        if (c.command == "eval") code = cmd_eval(c);
        else if (c.command == "audit") code = cmd_audit(c);
        else if (c.command == "repair") code = cmd_repair(c);
        else if (c.command == "calibrate") code = cmd_calibrate(c);
        else if (c.command == "verify") code = cmd_verify(c);
        else if (c.command == "rank") code = cmd_rank(c);
        else if (c.command == "fields") code = cmd_fields(c);
        else if (c.command == "conjugate") code = cmd_conjugate(c);
        else code = cmd_pipeline(c);
    } catch (const UsageError& e) {
        std::cerr << "flagjac: " << e.what() << "\nRun with --help for more information.\n";
        return kExitUsage;
    } catch (const MissingArtifact& e) {
        std::cerr << "flagjac: missing prerequisite: " << e.what() << '\n';
        return kExitMissing;
    } catch (const std::exception& e) {
        std::cerr << "flagjac: " << e.what() << '\n';
        return kExitFail;
    }
    std::cerr << "flagjac: " << c.command << " finished in " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
              << " s\n";
    return code;
}
