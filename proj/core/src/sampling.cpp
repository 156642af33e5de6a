#include "flagjac/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace flagjac {

double Rng::uniform() { return static_cast<double>(gen_() >> 11U) * 0x1.0p-53; }

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u = 0.0;
    while (u == 0.0) u = uniform();
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double th = 2.0 * std::numbers::pi * v;
    spare_ = r * std::sin(th);
    has_spare_ = true;
    return r * std::cos(th);
}

std::vector<Point6> random_unit_vectors(std::uint64_t seed, int n) {
    Rng rng(seed);
    std::vector<Point6> out;
    out.reserve(static_cast<std::size_t>(std::max(n, 0)));
    while (static_cast<int>(out.size()) < n) {
        Point6 p;
        double s = 0.0;
        for (auto& c : p) {
            c = rng.normal();
            s += c * c;
        }
        if (s < 1e-20) continue;
        s = std::sqrt(s);
        for (auto& c : p) c /= s;
        out.push_back(p);
    }
    return out;
}

std::vector<RationalPoint> rational_sphere_points(int n) {
    std::vector<RationalPoint> out;
    for (int m = 0; static_cast<int>(out.size()) < n; ++m) {
        std::array<mpq_class, 5> y;
        mpq_class y2 = 0;
        for (int i = 0; i < 5; ++i) {
            const long num = ((m + 1) * (i + 2) * 37 + 11 * m) % 9 - 4;
            y[static_cast<std::size_t>(i)] = mpq_class(num, 1 + m % 3);
            y[static_cast<std::size_t>(i)].canonicalize();
            y2 += y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
        }
        const mpq_class den = y2 + 1;
        RationalPoint p;
        for (int i = 0; i < 5; ++i) p[static_cast<std::size_t>(i)] = QSqrt2(mpq_class(2 * y[static_cast<std::size_t>(i)] / den));
        p[5] = QSqrt2(mpq_class((y2 - 1) / den));
        out.push_back(p);
    }
    return out;
}

Point6 to_point(const RationalPoint& x) {
    Point6 p;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = x[i].to_double();
    return p;
}

std::vector<Point6> sphere_sample(std::uint64_t seed, int total, int rational) {
    rational = std::clamp(rational, 0, std::max(total, 0));
    std::vector<Point6> out;
    for (const auto& r : rational_sphere_points(rational)) out.push_back(to_point(r));
    for (const auto& p : random_unit_vectors(seed, total - rational)) out.push_back(p);
    return out;
}

}  // namespace flagjac
