#include "trademood/simulator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trademood {

TrueStrengthPath TrueStrengthPath::from_segments(std::span<const StrengthSegment> segments,
                                                 int days) {
    if (days < 1) throw std::invalid_argument("strength path: days must be >= 1");
    if (segments.empty()) throw std::invalid_argument("strength path: no segments");
    TrueStrengthPath path;
    path.a6.assign(static_cast<std::size_t>(days), 0.0);
    path.a7.assign(static_cast<std::size_t>(days), 0.0);
    int prev_start = 0;
    for (std::size_t s = 0; s < segments.size(); ++s) {
        const StrengthSegment& seg = segments[s];
        if (seg.start_day < 1 || seg.start_day <= prev_start)
            throw std::invalid_argument("strength path: start days must be increasing and >= 1");
        prev_start = seg.start_day;
        int end = (s + 1 < segments.size()) ? segments[s + 1].start_day - 1 : days;
        for (int t = seg.start_day; t <= end && t <= days; ++t) {
            path.a6[static_cast<std::size_t>(t - 1)] = seg.a6;
            path.a7[static_cast<std::size_t>(t - 1)] = seg.a7;
        }
    }
    return path;
}

TrueStrengthPath TrueStrengthPath::constant(double a6, double a7, int days) {
    return from_segments(std::vector<StrengthSegment>{{1, a6, a7}}, days);
}

double GaussianRng::next() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // u1 in (0, 1], u2 in [0, 1)
    double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
    double u2 = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

SimulatedSeries simulate(const ModelParams& params, const TrueStrengthPath& path,
                         const NoiseSpec& noise, int days,
                         std::span<const double> initial_prices) {
    params.validate();
    if (days < 1) throw std::invalid_argument("simulate: days must be >= 1");
    if (static_cast<int>(initial_prices.size()) != params.n)
        throw std::invalid_argument("simulate: need exactly n initial prices");
    for (double p : initial_prices)
        if (!(p > 0.0)) throw std::domain_error("simulate: initial prices must be positive");
    if (static_cast<int>(path.a6.size()) < days || static_cast<int>(path.a7.size()) < days)
        throw std::invalid_argument("simulate: strength path shorter than the run");
    if (!(noise.sigma >= 0.0)) throw std::invalid_argument("simulate: sigma must be >= 0");

    SimulatedSeries out;
    out.n = params.n;
    out.prices.assign(initial_prices.begin(), initial_prices.end());
    out.prices.reserve(initial_prices.size() + static_cast<std::size_t>(days));
    out.signal.reserve(static_cast<std::size_t>(days));
    out.noise.reserve(static_cast<std::size_t>(days));

    GaussianRng rng(noise.seed);
    for (int t = 1; t <= days; ++t) {
        std::size_t last = out.prices.size() - 1;
        std::span<const double> window(out.prices.data() + last - (params.n - 1),
                                       static_cast<std::size_t>(params.n));
        double x = mood_index(window, params);
        ExcessDemandPair ed = excess_demand(x, params.w);
        double s = path.a6[static_cast<std::size_t>(t - 1)] * ed.ed6 +
                   path.a7[static_cast<std::size_t>(t - 1)] * ed.ed7;
        double e = noise.sigma * rng.next();
        out.prices.push_back(out.prices.back() * std::exp(s + e));
        out.signal.push_back(s);
        out.noise.push_back(e);
    }
    return out;
}

double signal_noise_ratio(const SimulatedSeries& series) {
    if (series.signal.empty())
        throw std::invalid_argument("signal_noise_ratio: empty series");
    double s2 = 0.0, e2 = 0.0;
    for (double s : series.signal) s2 += s * s;
    for (double e : series.noise) e2 += e * e;
    if (e2 == 0.0)
        throw std::domain_error("signal_noise_ratio: zero noise, ratio undefined");
    return std::sqrt(s2 / static_cast<double>(series.signal.size())) /
           std::sqrt(e2 / static_cast<double>(series.noise.size()));
}

}  // namespace trademood
