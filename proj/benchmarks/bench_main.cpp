#include "flagjac/jacobi_fields.hpp"
#include "flagjac/osculating_rank.hpp"

#include <benchmark/benchmark.h>

using namespace flagjac;

namespace {

const Calibration& calibration() {
    static const Calibration cal = calibrate(CalibrationOptions{});
    return cal;
}

Vector6 direction() {
    const Point6 p = random_unit_vectors(5, 1).front();
    return Eigen::Map<const Vector6>(p.data());
}

void BM_ExpandAllEntries(benchmark::State& state) {
    for (auto _ : state) {
        for (const auto& e : appendix_entries()) benchmark::DoNotOptimize(Expression::parse(e.text).expand());
    }
}
BENCHMARK(BM_ExpandAllEntries)->Unit(benchmark::kMillisecond);

void BM_ExactEvaluation(benchmark::State& state) {
    RationalPoint x;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = QSqrt2(mpq_class(static_cast<long>(i) - 2, 3));
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eval_derivative_exact(k, x, Variant::repaired));
}
BENCHMARK(BM_ExactEvaluation)->DenseRange(2, 5);

void BM_FloatEvaluation(benchmark::State& state) {
    const Point6 x = random_unit_vectors(9, 1).front();
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eval_derivative(k, x, Variant::repaired));
}
BENCHMARK(BM_FloatEvaluation)->DenseRange(2, 5);

void BM_DerivativeChain(benchmark::State& state) {
    const Vector6 x = direction();
    const Calibration& cal = calibration();
    for (auto _ : state) benchmark::DoNotOptimize(derivative_chain(x, 5, cal));
}
BENCHMARK(BM_DerivativeChain);

void BM_Calibrate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(calibrate(CalibrationOptions{}));
}
BENCHMARK(BM_Calibrate)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_FindRecurrence(benchmark::State& state) {
    const Calibration& cal = calibration();
    for (auto _ : state) benchmark::DoNotOptimize(find_recurrence(RecurrenceOptions{}, cal));
}
BENCHMARK(BM_FindRecurrence)->Unit(benchmark::kMillisecond);

void BM_SolveFields(benchmark::State& state) {
    const JacobiSystem sys = JacobiSystem::from_calibration(direction(), calibration());
    SolveOptions opt;
    opt.method = state.range(0) == 0 ? FieldMethod::constcoef : FieldMethod::rk4;
    const Eigen::MatrixXd y0 = Eigen::MatrixXd::Zero(kDim, kDim);
    const Eigen::MatrixXd v0 = Eigen::MatrixXd::Identity(kDim, kDim);
    for (auto _ : state) benchmark::DoNotOptimize(solve_fields(sys, y0, v0, opt));
    state.SetLabel(std::string(method_name(opt.method)));
}
BENCHMARK(BM_SolveFields)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ConjugatePoints(benchmark::State& state) {
    const JacobiSystem sys = JacobiSystem::from_calibration(direction(), calibration());
    for (auto _ : state) benchmark::DoNotOptimize(conjugate_points(sys, ConjugateOptions{}));
}
BENCHMARK(BM_ConjugatePoints)->Unit(benchmark::kMillisecond);

}  // namespace

// the distro's benchmark_main archive carries LTO bytecode from another compiler build
BENCHMARK_MAIN();
