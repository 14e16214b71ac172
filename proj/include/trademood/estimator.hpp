#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "trademood/excess_demand.hpp"
#include "trademood/series.hpp"

namespace trademood {

struct Vec2 {
    double x6 = 0.0;  // big-seller component
    double x7 = 0.0;  // big-buyer component
};

/// Row-major symmetric 2x2 matrix.
struct Mat2 {
    double m00 = 0.0, m01 = 0.0, m10 = 0.0, m11 = 0.0;
};

struct EstimatorConfig {
    double lambda = 0.95;  // forgetting factor, open interval (0, 1)
    double gamma = 10.0;   // initial covariance scale, > 0

    void validate() const {
        if (!(lambda > 0.0 && lambda < 1.0))
            throw std::invalid_argument("EstimatorConfig: lambda must be in (0, 1)");
        if (!(gamma > 0.0))
            throw std::invalid_argument("EstimatorConfig: gamma must be > 0");
    }
};

struct EstimatorState {
    Vec2 a_hat;  // (a6_hat, a7_hat)
    Mat2 P;      // symmetric positive definite
};

/// a_hat = 0, P = gamma * I.
EstimatorState init(const EstimatorConfig& config);

/// One recursion with regressor ed and the next-day log return:
///   K  = P ed / (ed' P ed + lambda)
///   a' = a + K (r_next - ed' a)
///   P' = (I - K ed') P / lambda, re-symmetrized.
EstimatorState step(const EstimatorState& state, const Vec2& ed, double r_next,
                    double lambda);

/// Per-day strength estimates for one price series. The estimate indexed t
/// consumed the return r_{t+1} = ln(p_{t+1}/p_t); dates[i] is the day of the
/// regressor and first_index its offset into the source price series, so the
/// estimate at dates[i] becomes actionable at the close of the following
/// trading day.
struct StrengthSeries {
    std::size_t first_index = 0;
    std::vector<std::string> dates;
    std::vector<double> a6_hat, a7_hat;
    int smooth_days = 0;  // k of the attached moving averages, 0 if none
    std::vector<double> a6_bar, a7_bar;  // NaN for the first k-1 entries
};

/// Run the recursion over a full price series: for every day t with a full
/// n-window and a next-day close, form the mood index, the excess-demand
/// regressor and r_{t+1}, and take one step.
StrengthSeries estimate_series(const PriceSeries& prices, const ModelParams& params,
                               const EstimatorConfig& config, int smooth_days = 0);

/// Trailing k-day mean; the first k-1 outputs are NaN (undefined).
std::vector<double> moving_average(std::span<const double> values, int k);

/// Direct minimizer of
///   sum_i lambda^(t-i) (r_{i+1} - ed_i' a)^2 + (lambda^t / gamma) |a|^2
/// over the full history (t = number of observations). The ridge term is the
/// P_0 = gamma I prior, so this equals the recursive estimate exactly.
Vec2 batch_weighted_ls(std::span<const Vec2> eds, std::span<const double> returns,
                       double lambda, double gamma);

}  // namespace trademood
