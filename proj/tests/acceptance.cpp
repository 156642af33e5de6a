// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "flagjac/io.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace flagjac;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

QSqrt2 q(const char* s) { return *QSqrt2::parse(s); }

RationalPoint rpoint(std::initializer_list<const char*> xs) {
    RationalPoint p;
    std::size_t i = 0;
    for (const char* x : xs) p[i++] = q(x);
    return p;
}

Vector6 as_vector(const Point6& p) { return Eigen::Map<const Vector6>(p.data()); }

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Verdict transcription() {
    const auto t0 = Clock::now();
    int bad = 0;
    for (const auto& e : appendix_entries()) {
        const Homogeneity h = poly_homogeneity_check(Expression::parse(e.text).expand());
        if (h.kind != HomogeneityKind::homogeneous || h.degree != e.k + 2) ++bad;
    }
    const double secs = seconds_since(t0);
    const bool ok = appendix_entries().size() == 84 && bad == 0 && secs < 1.0;
    return {ok, std::to_string(appendix_entries().size()) + " entries parsed, " + std::to_string(bad) + " not homogeneous of degree k+2, " +
                    fmt("%.3f s", secs)};
}

Verdict golden_evaluations() {
    const RationalPoint g = rpoint({"0", "1/2*sqrt2", "0", "0", "0", "1/2*sqrt2"});
    const Point6 gf{0.0, std::sqrt(0.5), 0.0, 0.0, 0.0, std::sqrt(0.5)};
    using Nonzeros = std::map<std::pair<int, int>, QSqrt2>;
    const std::map<int, Nonzeros> full{{2, {{{1, 1}, q("3/8")}, {{3, 3}, q("-3/16")}, {{5, 5}, q("-3/16")}, {{3, 5}, q("-3/16")}}},
                                       {3, {{{1, 3}, q("3/16")}, {{1, 5}, q("3/16")}}}};
    const std::map<int, std::pair<std::pair<int, int>, QSqrt2>> single{{4, {{1, 1}, q("-3/16")}}, {5, {{1, 3}, q("-3/32")}}};
    int failures = 0;
    double worst = 0.0;
    for (Variant v : {Variant::as_printed, Variant::repaired}) {
        for (int k = 2; k <= 5; ++k) {
            const auto ex = eval_derivative_exact(k, g, v);
            const SymMatrix6 fl = eval_derivative(k, gf, v);
            auto at = [&ex](int i, int j) { return ex[static_cast<std::size_t>(upper_index(i - 1, j - 1))]; };
            if (auto it = full.find(k); it != full.end()) {
                for (int i = 1; i <= 6; ++i) {
                    for (int j = i; j <= 6; ++j) {
                        const auto w = it->second.find({i, j});
                        const QSqrt2 want = w == it->second.end() ? QSqrt2(0) : w->second;
                        if (!(at(i, j) == want)) ++failures;
                        worst = std::max(worst, std::abs(fl(i - 1, j - 1) - want.to_double()));
                    }
                }
            } else {
                const auto& [ij, want] = single.at(k);
                if (!(at(ij.first, ij.second) == want)) ++failures;
                worst = std::max(worst, std::abs(fl(ij.first - 1, ij.second - 1) - want.to_double()));
            }
        }
    }
    return {failures == 0 && worst < 1e-14, std::to_string(failures) + " exact mismatches, float max error " + fmt("%.2e", worst)};
}

Verdict symbolic_identities() {
    const MultiPoly N = MultiPoly::norm_squared();
    auto x = [](int i) { return MultiPoly::var(i - 1); };
    const MultiPoly t3 = q("9/8*sqrt2") * (x(1) * x(1) - x(3) * x(3) + x(4) * x(4) - x(6) * x(6)) * (x(1) * x(5) * x(6) + x(3) * x(4) * x(5));
    const bool tr2 = trace_poly(2, Variant::as_printed).is_zero();
    const bool tr3 = trace_poly(3, Variant::as_printed) == t3;
    const bool tr5 = trace_poly(5, Variant::as_printed) == q("-5/8") * N * t3;
    bool j5 = false;
    try {
        const J5Decomposition d = j5_decompose(Variant::as_printed);
        j5 = d.a == q("-5/8");
        for (int i = 0; i < 6; ++i) j5 = j5 && d.B(i, i).is_zero();
    } catch (const std::exception&) {
        j5 = false;
    }
    auto yn = [](bool b) { return b ? "ok" : "FAILED"; };
    return {tr2 && tr3 && tr5 && j5,
            std::string("trace2 ") + yn(tr2) + ", trace3 " + yn(tr3) + ", trace5 " + yn(tr5) + ", j5_decompose " + yn(j5)};
}

Verdict audit_and_repair() {
    const AuditReport printed = audit_go_consistency(Variant::as_printed);
    bool w3 = false;
    bool w4 = false;
    for (const auto& o : printed.orders) {
        for (const auto& w : o.witnesses) {
            if (o.k == 3 && w.x == rpoint({"1", "0", "1", "0", "1", "1"}) && w.exact == q("-9/8*sqrt2")) w3 = true;
            if (o.k == 4 && w.x == rpoint({"0", "1/2*sqrt2", "0", "0", "0", "1/2*sqrt2"}) && w.exact == q("-3/16")) w4 = true;
        }
    }
    const RepairSearch rs = sign_repair_search(1);
    bool flip3 = false;
    bool eval4 = false;
    for (const auto& c : rs.accepted) {
        if (c.k == 3 && c.diagonal == std::vector<int>{2} && c.symbolic_zero) flip3 = true;
    }
    for (const auto& c : rs.evaluated) {
        if (c.k == 4 && c.diagonal == std::vector<int>{3}) eval4 = true;
    }
    const bool repaired = audit_go_consistency(Variant::repaired).all_pass();
    const bool ok = !printed.all_pass() && w3 && w4 && flip3 && eval4 && repaired;
    return {ok, std::string("k=3 witness ") + (w3 ? "-9/(4 sqrt2)" : "missing") + ", k=4 witness " + (w4 ? "-3/16" : "missing") +
                    ", (2,2) flip " + (flip3 ? "accepted" : "missing") + ", (3,3) candidate " + (eval4 ? "evaluated" : "missing") +
                    ", repaired audit " + (repaired ? "clean" : "dirty")};
}

Verdict oracle_calibration(Calibration& out) {
    const auto t0 = Clock::now();
    out = calibrate(CalibrationOptions{});
    const double secs = seconds_since(t0);
    CalibrationOptions printed_opt;
    printed_opt.target = Variant::as_printed;
    const Calibration printed = calibrate(printed_opt);
    std::set<std::tuple<int, int, int>> want;
    for (const auto& e : variant_flips(Variant::repaired).entries) want.insert({e.k, e.i, e.j});
    for (const auto& e : variant_flips(Variant::repaired).summands) want.insert({e.k, e.i, e.j});
    std::set<std::tuple<int, int, int>> got;
    for (const auto& e : printed.worst_entries) got.insert({e.k, e.i, e.j});
    const bool localized = !printed.matched && got == want;
    const bool ok = out.matched && out.residual < 1e-9 && secs < 60.0 && localized;
    return {ok, "max relative error " + fmt("%.2e", out.residual) + " over " + std::to_string(out.samples) + " directions, search " +
                    fmt("%.2f s", secs) + ", printed mismatch on " + std::to_string(got.size()) + " entries" +
                    (localized ? " (the flip set)" : " (not the flip set)")};
}

Verdict recurrence(const Calibration& cal) {
    const Recurrence ref = find_recurrence(RecurrenceOptions{}, cal);
    bool stable = ref.found && ref.heldout_residual < 1e-9;
    double worst_heldout = ref.heldout_residual;
    for (std::uint64_t seed : {1ULL, 7ULL, 42ULL, 1234ULL, 99991ULL}) {
        RecurrenceOptions opt;
        opt.seed = seed;
        const Recurrence r = find_recurrence(opt, cal);
        worst_heldout = std::max(worst_heldout, r.heldout_residual);
        stable = stable && r.found && r.order == ref.order && r.heldout_residual < 1e-9;
        for (std::size_t i = 0; stable && i < r.coefficients.size(); ++i) stable = std::abs(r.coefficients[i] - ref.coefficients[i]) < 1e-9;
    }
    RecurrenceOptions odd;
    odd.odd = true;
    const Recurrence ro = find_recurrence(odd, cal);
    double c3 = std::nan("");
    for (std::size_t i = 0; i < ro.basis.size(); ++i) {
        if (ro.basis[i] == "J3") c3 = ro.coefficients[i];
    }
    const bool odd_ok = ro.found && ro.lhs == "J5" && std::abs(c3 + 0.625) < 1e-8;
    const RecurrenceCheck chk = verify_recurrence(ref, cal, 2718, 300);
    double shifted = 0.0;
    for (double s : chk.shifted_residual) shifted = std::max(shifted, s);
    const bool shift_ok = chk.shifted_residual.size() == 3 && shifted < 1e-9;
    std::string rel = "J5 =";
    for (std::size_t i = 0; i < ref.coefficients.size(); ++i) {
        if (std::abs(ref.coefficients[i]) > 1e-9) rel += " " + rational_approx(ref.coefficients[i]).str() + "*" + ref.basis[i];
    }
    return {stable && odd_ok && shift_ok, rel + ", order " + std::to_string(ref.order) + ", held-out " + fmt("%.2e", worst_heldout) +
                                              " over 6 seeds, odd J3 coefficient " + fmt("%.12f", c3) + ", shifted " +
                                              fmt("%.2e", shifted)};
}

Verdict jacobi_fields(const Calibration& cal) {
    const auto xs = random_unit_vectors(2024, 100);
    const Eigen::MatrixXd y0 = Eigen::MatrixXd::Zero(kDim, kDim);
    const Eigen::MatrixXd v0 = Eigen::MatrixXd::Identity(kDim, kDim);
    double agree = 0.0;
    double drift = 0.0;
    for (const auto& p : xs) {
        const JacobiSystem sys = JacobiSystem::from_calibration(as_vector(p), cal);
        SolveOptions a;
        SolveOptions b;
        b.method = FieldMethod::rk4;
        const auto ta = solve_fields(sys, y0, v0, a);
        const auto tb = solve_fields(sys, y0, v0, b);
        for (std::size_t i = 0; i < ta.t.size(); ++i) agree = std::max(agree, (ta.y[i] - tb.y[i]).cwiseAbs().maxCoeff());
        drift = std::max({drift, wronskian_drift(ta), wronskian_drift(tb)});
    }
    // synthetic lambda I with Y0 = 0, V0 = e1: sin(sqrt(lambda) t)/sqrt(lambda)
    double synth = 0.0;
    for (double lambda : {0.25, 1.0, 2.25}) {
        const JacobiSystem sys = JacobiSystem::constant(lambda * SymMatrix6::Identity());
        for (FieldMethod m : {FieldMethod::constcoef, FieldMethod::rk4}) {
            SolveOptions o;
            o.method = m;
            const auto tr = solve_fields(sys, Eigen::VectorXd::Zero(kDim), Eigen::VectorXd::Unit(kDim, 0), o);
            for (std::size_t i = 0; i < tr.t.size(); ++i) {
                Eigen::VectorXd want = Eigen::VectorXd::Zero(kDim);
                want(0) = std::sin(std::sqrt(lambda) * tr.t[i]) / std::sqrt(lambda);
                synth = std::max(synth, (tr.y[i] - want).cwiseAbs().maxCoeff());
            }
        }
    }
    const auto pts = conjugate_points(JacobiSystem::constant(SymMatrix6::Identity()), ConjugateOptions{});
    const double pi = std::acos(-1.0);
    const double conj_err = pts.empty() ? INFINITY : std::abs(pts.front().t - pi);
    const bool ok = agree < 1e-6 && drift < 1e-8 && synth < 1e-10 && conj_err < 1e-8;
    return {ok, "constcoef vs rk4 " + fmt("%.2e", agree) + " over 100 directions, Wronskian drift " + fmt("%.2e", drift) + ", synthetic " +
                    fmt("%.2e", synth) + ", first conjugate point of I off pi by " + fmt("%.2e", conj_err)};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Verdict end_to_end() {
    const fs::path root = fs::temp_directory_path() / ("flagjac_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(root);
    double longest = 0.0;
    bool green = true;
    std::vector<std::array<std::string, 3>> outputs;
    for (const char* run : {"a", "b"}) {
        const fs::path dir = root / run;
        fs::create_directories(dir);
        const std::string cmd = "cd '" + dir.string() + "' && FLAGJAC_OUTPUT_DIR='" + dir.string() + "' '" FLAGJAC_CLI
                                "' pipeline --seed 42 > summary.txt 2> timings.txt";
        const auto t0 = Clock::now();
        const int status = std::system(cmd.c_str());
        longest = std::max(longest, seconds_since(t0));
        green = green && WIFEXITED(status) && WEXITSTATUS(status) == 0;
        outputs.push_back({slurp(dir / "summary.txt"), slurp(dir / "calibration.json"), slurp(dir / "recurrence.json")});
    }
    const bool same = outputs[0] == outputs[1] && !outputs[0][0].empty() && !outputs[0][1].empty() && !outputs[0][2].empty();
    fs::remove_all(root);
    return {green && same && longest < 300.0, std::string("stages ") + (green ? "green" : "not green") + ", outputs " +
                                                  (same ? "byte-identical" : "differ") + " across two runs, slowest " +
                                                  fmt("%.2f s", longest)};
}

}  // namespace

int main() {
    int failed = 0;
    auto report = [&failed](int n, const Verdict& v) {
        std::printf("criterion %d %s: %s\n", n, v.pass ? "PASS" : "FAIL", v.detail.c_str());
        std::fflush(stdout);
        failed += v.pass ? 0 : 1;
    };
    auto guarded = [](const std::function<Verdict()>& f) {
        try {
            return f();
        } catch (const std::exception& e) {
            return Verdict{false, std::string("threw: ") + e.what()};
        }
    };
    Calibration cal;
    report(1, guarded(transcription));
    report(2, guarded(golden_evaluations));
    report(3, guarded(symbolic_identities));
    report(4, guarded(audit_and_repair));
    report(5, guarded([&cal] { return oracle_calibration(cal); }));
    report(6, guarded([&cal] { return recurrence(cal); }));
    report(7, guarded([&cal] { return jacobi_fields(cal); }));
    report(8, guarded(end_to_end));
    std::printf("%d of 8 criteria passed\n", 8 - failed);
    return failed == 0 ? 0 : 1;
}
