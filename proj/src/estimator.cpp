#include "trademood/estimator.hpp"

#include <cmath>
#include <limits>

namespace trademood {

namespace {

Vec2 mat_vec(const Mat2& m, const Vec2& v) {
    return {m.m00 * v.x6 + m.m01 * v.x7, m.m10 * v.x6 + m.m11 * v.x7};
}

double dot(const Vec2& a, const Vec2& b) { return a.x6 * b.x6 + a.x7 * b.x7; }

}  // namespace

EstimatorState init(const EstimatorConfig& config) {
    config.validate();
    EstimatorState state;
    state.a_hat = {0.0, 0.0};
    state.P = {config.gamma, 0.0, 0.0, config.gamma};
    return state;
}

EstimatorState step(const EstimatorState& state, const Vec2& ed, double r_next,
                    double lambda) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("step: lambda must be > 0");
    if (!std::isfinite(ed.x6) || !std::isfinite(ed.x7) || !std::isfinite(r_next))
        throw std::invalid_argument("step: non-finite input");

    const Mat2& P = state.P;
    Vec2 Ped = mat_vec(P, ed);
    double denom = dot(ed, Ped) + lambda;  // >= lambda > 0 since P is SPD
    Vec2 gain{Ped.x6 / denom, Ped.x7 / denom};

    double innovation = r_next - dot(ed, state.a_hat);
    EstimatorState next;
    next.a_hat = {state.a_hat.x6 + gain.x6 * innovation,
                  state.a_hat.x7 + gain.x7 * innovation};

    // P' = (I - K ed') P / lambda
    Mat2 Q{1.0 - gain.x6 * ed.x6, -gain.x6 * ed.x7,
           -gain.x7 * ed.x6, 1.0 - gain.x7 * ed.x7};
    Mat2 Pn{(Q.m00 * P.m00 + Q.m01 * P.m10) / lambda,
            (Q.m00 * P.m01 + Q.m01 * P.m11) / lambda,
            (Q.m10 * P.m00 + Q.m11 * P.m10) / lambda,
            (Q.m10 * P.m01 + Q.m11 * P.m11) / lambda};
    double off = 0.5 * (Pn.m01 + Pn.m10);  // drift control
    next.P = {Pn.m00, off, off, Pn.m11};
    return next;
}

StrengthSeries estimate_series(const PriceSeries& prices, const ModelParams& params,
                               const EstimatorConfig& config, int smooth_days) {
    params.validate();
    config.validate();
    const std::size_t n = static_cast<std::size_t>(params.n);
    if (prices.size() < n + 1)
        throw std::invalid_argument("estimate_series: series shorter than n + 1 days");
    if (smooth_days < 0)
        throw std::invalid_argument("estimate_series: smooth_days must be >= 0");

    StrengthSeries out;
    out.first_index = n - 1;
    EstimatorState state = init(config);
    for (std::size_t t = n - 1; t + 1 < prices.size(); ++t) {
        std::span<const double> window(prices.closes.data() + (t - (n - 1)), n);
        double x = mood_index(window, params);
        ExcessDemandPair ed = excess_demand(x, params.w);
        double r_next = std::log(prices.closes[t + 1] / prices.closes[t]);
        state = step(state, {ed.ed6, ed.ed7}, r_next, config.lambda);
        out.dates.push_back(prices.dates.empty() ? std::string{} : prices.dates[t]);
        out.a6_hat.push_back(state.a_hat.x6);
        out.a7_hat.push_back(state.a_hat.x7);
    }
    if (smooth_days > 0) {
        out.smooth_days = smooth_days;
        out.a6_bar = moving_average(out.a6_hat, smooth_days);
        out.a7_bar = moving_average(out.a7_hat, smooth_days);
    }
    return out;
}

std::vector<double> moving_average(std::span<const double> values, int k) {
    if (k < 1) throw std::invalid_argument("moving_average: k must be >= 1");
    std::vector<double> out(values.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t t = static_cast<std::size_t>(k) - 1; t < values.size(); ++t) {
        double sum = 0.0;
        for (int i = 0; i < k; ++i) sum += values[t - static_cast<std::size_t>(i)];
        out[t] = sum / k;
    }
    return out;
}

Vec2 batch_weighted_ls(std::span<const Vec2> eds, std::span<const double> returns,
                       double lambda, double gamma) {
    if (eds.empty() || eds.size() != returns.size())
        throw std::invalid_argument("batch_weighted_ls: history empty or misaligned");
    if (!(lambda > 0.0) || !(gamma > 0.0))
        throw std::invalid_argument("batch_weighted_ls: lambda, gamma must be > 0");

    const std::size_t t = eds.size();
    double a00 = 0.0, a01 = 0.0, a11 = 0.0, b0 = 0.0, b1 = 0.0;
    for (std::size_t i = 0; i < t; ++i) {
        double wgt = std::pow(lambda, static_cast<double>(t - 1 - i));
        a00 += wgt * eds[i].x6 * eds[i].x6;
        a01 += wgt * eds[i].x6 * eds[i].x7;
        a11 += wgt * eds[i].x7 * eds[i].x7;
        b0 += wgt * eds[i].x6 * returns[i];
        b1 += wgt * eds[i].x7 * returns[i];
    }
    double ridge = std::pow(lambda, static_cast<double>(t)) / gamma;
    a00 += ridge;
    a11 += ridge;

    double det = a00 * a11 - a01 * a01;  // > 0: ridge keeps the system SPD
    return {(a11 * b0 - a01 * b1) / det, (a00 * b1 - a01 * b0) / det};
}

}  // namespace trademood
