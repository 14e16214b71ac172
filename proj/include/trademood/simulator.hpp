#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "trademood/excess_demand.hpp"

namespace trademood {

/// Piecewise-constant schedule record: from start_day (1-based simulation
/// day) onward the true strengths are (a6, a7) until the next segment.
struct StrengthSegment {
    int start_day = 1;
    double a6 = 0.0;
    double a7 = 0.0;
};

/// Per-day true strengths a6(t), a7(t) for t = 1..T (index 0 holds day 1).
struct TrueStrengthPath {
    std::vector<double> a6, a7;

    static TrueStrengthPath from_segments(std::span<const StrengthSegment> segments,
                                          int days);
    static TrueStrengthPath constant(double a6, double a7, int days);
};

struct NoiseSpec {
    double sigma = 0.0;       // stddev of the daily log-return noise, >= 0
    std::uint64_t seed = 0;
};

/// Output of one simulation run. prices[0..n-1] are the initial prices;
/// prices[n-1+t] is the day-t close, and for every t = 1..T
///   ln(prices[n-1+t]) - ln(prices[n-2+t]) = signal[t-1] + noise[t-1].
struct SimulatedSeries {
    int n = 0;
    std::vector<double> prices;
    std::vector<double> signal;
    std::vector<double> noise;
};

/// Deterministic standard-normal stream: mt19937_64, 53-bit uniforms,
/// Box-Muller transform (both outputs used). Fixed here so that identical
/// seeds give identical series on every build.
class GaussianRng {
  public:
    explicit GaussianRng(std::uint64_t seed) : gen_(seed) {}
    double next();

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Iterate the price recursion forward for `days` steps from the given
/// initial prices (length n, all positive). The noise draw is sigma * z with
/// z from GaussianRng(seed), so the draw sequence does not depend on sigma
/// or on the strength path.
SimulatedSeries simulate(const ModelParams& params, const TrueStrengthPath& path,
                         const NoiseSpec& noise, int days,
                         std::span<const double> initial_prices);

/// RMS(signal) / RMS(noise) over the simulated days. Throws if the noise RMS
/// is zero (degenerate ratio).
double signal_noise_ratio(const SimulatedSeries& series);

}  // namespace trademood
