#include "trademood/excess_demand.hpp"

#include <cmath>

namespace trademood {

double mood_index(std::span<const double> window, const ModelParams& params) {
    params.validate();
    if (static_cast<int>(window.size()) != params.n)
        throw std::invalid_argument("mood_index: window must hold exactly n prices");
    double sum = 0.0;
    for (double p : window) {
        if (!(p > 0.0)) throw std::domain_error("mood_index: prices must be positive");
        sum += p;
    }
    double x = std::log(window.back() / (sum / params.n));
    if (!std::isfinite(x)) throw std::domain_error("mood_index: non-finite result");
    return x;
}

// Branches are half-open [lo, hi) with a closed top branch; the adjacent
// linear pieces agree at every breakpoint, so the tie-break has no numerical
// effect.
double ed6(double x, double w) {
    if (!(w > 0.0)) throw std::invalid_argument("ed6: w must be > 0");
    if (!std::isfinite(x)) throw std::invalid_argument("ed6: x must be finite");
    if (x <= 0.0) return 0.0;
    if (x < 2.0 * w) return -0.1 * x / w;
    if (x < 3.0 * w) return -0.2 * x / w + 0.2;
    return -0.4;
}

double ed7(double x, double w) {
    if (!(w > 0.0)) throw std::invalid_argument("ed7: w must be > 0");
    if (!std::isfinite(x)) throw std::invalid_argument("ed7: x must be finite");
    if (x >= 0.0) return 0.0;
    if (x > -2.0 * w) return -0.1 * x / w;
    if (x > -3.0 * w) return -0.2 * x / w - 0.2;
    return 0.4;
}

ExcessDemandPair excess_demand(double x, double w) {
    return {ed6(x, w), ed7(x, w)};
}

}  // namespace trademood
