#pragma once

#include <span>
#include <stdexcept>

namespace trademood {

/// Model constants: n is the averaging window length in trading days, w the
/// width of one membership band in log-price units.
struct ModelParams {
    int n = 3;
    double w = 0.01;

    void validate() const {
        if (n < 1) throw std::invalid_argument("ModelParams: n must be >= 1");
        if (!(w > 0.0)) throw std::invalid_argument("ModelParams: w must be > 0");
    }
};

/// Excess demands of the two big-trader classes at one mood value. At most
/// one of the two is nonzero.
struct ExcessDemandPair {
    double ed6 = 0.0;  // big seller, in [-0.4, 0]
    double ed7 = 0.0;  // big buyer, in [0, 0.4]
};

/// Mood index: ln(p_t / mean(window)). The window holds the n most recent
/// closes ending at p_t; the mean includes p_t itself.
double mood_index(std::span<const double> window, const ModelParams& params);

/// Big-seller excess demand. Zero for x <= 0, piecewise linear in between,
/// saturates at -0.4 for x >= 3w.
double ed6(double x, double w);

/// Big-buyer excess demand. Saturates at 0.4 for x <= -3w, piecewise linear
/// in between, zero for x >= 0.
double ed7(double x, double w);

ExcessDemandPair excess_demand(double x, double w);

}  // namespace trademood
