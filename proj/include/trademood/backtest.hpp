#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trademood/estimator.hpp"
#include "trademood/series.hpp"
#include "trademood/strategy.hpp"

namespace trademood {

/// Rolling test windows: starts 0, stride, 2*stride, ... each spanning
/// `length` trading days (inclusive index pairs).
struct IntervalPlan {
    int length = 492;
    int stride = 5;
    std::vector<std::pair<int, int>> intervals;
};

IntervalPlan make_intervals(int total_days, int length, int stride);

/// Per-transaction cost rates as fractions of the transaction amount.
struct CostModel {
    double buy_rate = 0.00108;
    double sell_rate = 0.00288;

    double per_cycle_cost() const { return buy_rate + sell_rate; }
};

/// (cash_out - cash_in) / (2 * cash_in); the 2 is the interval length in
/// years, fixed by the two-year test-interval convention.
double annual_return(double cash_in, double cash_out);

struct MeanSdv {
    double mean = 0.0;
    double sdv = 0.0;  // population normalization (divide by count)
};

MeanSdv aggregate_stats(std::span<const double> values);

/// Weighted mean sum(w_i r_i) / sum(w_i); weights need not sum to 1.
double portfolio_return(std::span<const double> stock_returns,
                        std::span<const double> weights);

/// Daily cost-adjusted market values, one column per stock plus their sum.
/// dates is the union calendar of all stocks; a stock without a quote on a
/// date carries its latest earlier value forward.
struct ValuationSeries {
    std::vector<std::string> dates;
    std::vector<std::vector<double>> per_stock;  // [stock][day]
    std::vector<double> portfolio;               // [day]
};

/// Value each stock's sub-account from its trade log: in cash, the initial
/// share times prod(sell_k/buy_k) times (1-buy_rate)^N (1-sell_rate)^N over
/// the N completed cycles; in stock, additionally times p_t / p_buy of the
/// open cycle. Values are taken at the close, after that day's trades.
ValuationSeries market_value_series(const std::vector<PriceSeries>& prices,
                                    const std::vector<std::vector<TradeCycle>>& logs,
                                    std::span<const double> weights,
                                    double initial_money, const CostModel& costs);

MeanSdv average_portfolio_value(const ValuationSeries& series);

/// Everything needed for one full evaluation run.
struct RunSettings {
    ModelParams model;
    EstimatorConfig estimator;
    int interval_length = 492;
    int interval_stride = 5;
    CostModel costs;
    double initial_money = 100.0;
};

struct PerStockStats {
    double aar = 0.0;
    double sdv = 0.0;
    double cycles_per_year = 0.0;
    double net_per_year = 0.0;  // aar - cycles_per_year * per-cycle cost
};

struct PortfolioStats {
    double aar = 0.0;
    double sdv = 0.0;
    double cycles_per_year = 0.0;
    double cost_per_year = 0.0;
    double net_per_year = 0.0;
};

struct BacktestReport {
    std::vector<std::string> symbols;
    std::vector<double> weights;
    std::vector<StrategyKind> strategies;
    CostModel costs;
    double initial_money = 100.0;
    int interval_length = 0;
    int interval_stride = 0;

    // Interval labels from the first stock's calendar.
    std::vector<std::string> interval_start, interval_end;

    // Indexed [strategy][stock][interval].
    std::vector<std::vector<std::vector<double>>> annual_returns;
    std::vector<std::vector<std::vector<int>>> cycle_counts;

    std::vector<std::vector<PerStockStats>> per_stock;        // [strategy][stock]
    std::vector<std::vector<double>> portfolio_returns;       // [strategy][interval]
    std::vector<PortfolioStats> portfolio;                    // [strategy]

    // Net-return gain of switching from BuyHold, when all inputs are present;
    // NaN otherwise.
    double switch_gain_followbb = 0.0;
    double switch_gain_ridemood = 0.0;

    // Whole-span runs: per-strategy trade logs and daily valuations.
    std::vector<std::vector<std::vector<TradeCycle>>> full_span_logs;  // [strategy][stock]
    std::vector<ValuationSeries> valuation;                           // [strategy]

    // Trade logs of the last test interval, [strategy][stock].
    std::vector<std::vector<std::vector<TradeCycle>>> last_interval_logs;
};

/// Run every strategy over every stock: per-interval annual returns and
/// cycle counts (estimator restarted at each interval start), per-stock and
/// portfolio statistics, and whole-span trade logs with daily cost-adjusted
/// valuations.
BacktestReport run_full_backtest(const std::vector<PriceSeries>& prices,
                                 std::span<const double> weights,
                                 const std::vector<StrategyKind>& strategies,
                                 const RunSettings& settings);

}  // namespace trademood
