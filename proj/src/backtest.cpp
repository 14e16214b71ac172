#include "trademood/backtest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace trademood {

IntervalPlan make_intervals(int total_days, int length, int stride) {
    if (length < 1 || stride < 1)
        throw std::invalid_argument("make_intervals: length and stride must be >= 1");
    if (total_days < length)
        throw std::invalid_argument("make_intervals: not enough data for one interval");
    IntervalPlan plan;
    plan.length = length;
    plan.stride = stride;
    for (int start = 0; start + length <= total_days; start += stride)
        plan.intervals.emplace_back(start, start + length - 1);
    return plan;
}

double annual_return(double cash_in, double cash_out) {
    if (!(cash_in > 0.0)) throw std::domain_error("annual_return: cash_in must be > 0");
    return (cash_out - cash_in) / (2.0 * cash_in);
}

MeanSdv aggregate_stats(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("aggregate_stats: empty input");
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    return {mean, std::sqrt(var)};
}

double portfolio_return(std::span<const double> stock_returns,
                        std::span<const double> weights) {
    if (stock_returns.size() != weights.size() || weights.empty())
        throw std::invalid_argument("portfolio_return: misaligned inputs");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] > 0.0))
            throw std::invalid_argument("portfolio_return: weights must be > 0");
        num += weights[i] * stock_returns[i];
        den += weights[i];
    }
    return num / den;
}

ValuationSeries market_value_series(const std::vector<PriceSeries>& prices,
                                    const std::vector<std::vector<TradeCycle>>& logs,
                                    std::span<const double> weights,
                                    double initial_money, const CostModel& costs) {
    if (prices.empty() || prices.size() != logs.size() || prices.size() != weights.size())
        throw std::invalid_argument("market_value_series: misaligned inputs");
    if (!(initial_money > 0.0))
        throw std::invalid_argument("market_value_series: initial money must be > 0");

    double weight_sum = 0.0;
    for (double w : weights) {
        if (!(w > 0.0))
            throw std::invalid_argument("market_value_series: weights must be > 0");
        weight_sum += w;
    }

    std::set<std::string> all_dates;
    for (const PriceSeries& p : prices) all_dates.insert(p.dates.begin(), p.dates.end());

    ValuationSeries out;
    out.dates.assign(all_dates.begin(), all_dates.end());
    out.per_stock.resize(prices.size());
    const double cycle_factor = (1.0 - costs.buy_rate) * (1.0 - costs.sell_rate);

    for (std::size_t i = 0; i < prices.size(); ++i) {
        const PriceSeries& p = prices[i];
        const std::vector<TradeCycle>& cycles = logs[i];
        for (const TradeCycle& c : cycles) {
            if (!std::binary_search(p.dates.begin(), p.dates.end(), c.buy_date) ||
                !std::binary_search(p.dates.begin(), p.dates.end(), c.sell_date))
                throw std::invalid_argument("market_value_series: cycle date " + c.buy_date +
                                            ".." + c.sell_date + " missing from " + p.symbol);
        }

        const double share = initial_money * weights[i] / weight_sum;
        // Value on the stock's own calendar, at the close after that day's
        // trades, then carry forward onto the union calendar.
        std::map<std::string, double> own_value;
        double cash_value = share;
        std::size_t next_cycle = 0;
        const TradeCycle* open_cycle = nullptr;
        for (std::size_t d = 0; d < p.size(); ++d) {
            const std::string& date = p.dates[d];
            while (next_cycle < cycles.size() && cycles[next_cycle].sell_date <= date) {
                const TradeCycle& c = cycles[next_cycle];
                cash_value *= (c.sell_price / c.buy_price) * cycle_factor;
                ++next_cycle;
            }
            open_cycle = (next_cycle < cycles.size() && cycles[next_cycle].buy_date <= date)
                             ? &cycles[next_cycle]
                             : nullptr;
            own_value[date] =
                open_cycle ? cash_value * (p.closes[d] / open_cycle->buy_price) : cash_value;
        }

        std::vector<double>& column = out.per_stock[i];
        column.reserve(out.dates.size());
        double carried = share;
        auto it = own_value.begin();
        for (const std::string& date : out.dates) {
            while (it != own_value.end() && it->first <= date) {
                carried = it->second;
                ++it;
            }
            column.push_back(carried);
        }
    }

    out.portfolio.assign(out.dates.size(), 0.0);
    for (std::size_t i = 0; i < out.per_stock.size(); ++i)
        for (std::size_t d = 0; d < out.dates.size(); ++d)
            out.portfolio[d] += out.per_stock[i][d];
    return out;
}

MeanSdv average_portfolio_value(const ValuationSeries& series) {
    return aggregate_stats(series.portfolio);
}

namespace {

PriceSeries slice(const PriceSeries& prices, int start, int end) {
    PriceSeries sub;
    sub.symbol = prices.symbol;
    sub.dates.assign(prices.dates.begin() + start, prices.dates.begin() + end + 1);
    sub.closes.assign(prices.closes.begin() + start, prices.closes.begin() + end + 1);
    return sub;
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

BacktestReport run_full_backtest(const std::vector<PriceSeries>& prices,
                                 std::span<const double> weights,
                                 const std::vector<StrategyKind>& strategies,
                                 const RunSettings& settings) {
    if (prices.empty() || prices.size() != weights.size())
        throw std::invalid_argument("run_full_backtest: misaligned inputs");
    if (strategies.empty())
        throw std::invalid_argument("run_full_backtest: no strategies selected");
    settings.model.validate();
    settings.estimator.validate();

    const std::size_t n_stocks = prices.size();
    const std::size_t n_strats = strategies.size();
    const double per_cycle_cost = settings.costs.per_cycle_cost();

    BacktestReport report;
    report.weights.assign(weights.begin(), weights.end());
    report.strategies = strategies;
    report.costs = settings.costs;
    report.initial_money = settings.initial_money;
    report.interval_length = settings.interval_length;
    report.interval_stride = settings.interval_stride;
    for (const PriceSeries& p : prices) report.symbols.push_back(p.symbol);

    std::vector<IntervalPlan> plans;
    plans.reserve(n_stocks);
    for (const PriceSeries& p : prices)
        plans.push_back(make_intervals(static_cast<int>(p.size()), settings.interval_length,
                                       settings.interval_stride));
    std::size_t common_intervals = plans.front().intervals.size();
    for (const IntervalPlan& plan : plans)
        common_intervals = std::min(common_intervals, plan.intervals.size());
    for (const auto& [start, end] : plans.front().intervals) {
        report.interval_start.push_back(prices.front().dates[static_cast<std::size_t>(start)]);
        report.interval_end.push_back(prices.front().dates[static_cast<std::size_t>(end)]);
    }

    report.annual_returns.assign(n_strats, {});
    report.cycle_counts.assign(n_strats, {});
    report.full_span_logs.assign(n_strats, {});
    report.last_interval_logs.assign(n_strats, {});
    for (std::size_t s = 0; s < n_strats; ++s) {
        report.annual_returns[s].assign(n_stocks, {});
        report.cycle_counts[s].assign(n_stocks, {});
        report.full_span_logs[s].resize(n_stocks);
        report.last_interval_logs[s].resize(n_stocks);
    }

    for (std::size_t i = 0; i < n_stocks; ++i) {
        const IntervalPlan& plan = plans[i];
        StrengthSeries full_est =
            estimate_series(prices[i], settings.model, settings.estimator);
        for (std::size_t s = 0; s < n_strats; ++s)
            report.full_span_logs[s][i] =
                run_strategy(prices[i], full_est, strategies[s]).cycles;

        for (std::size_t j = 0; j < plan.intervals.size(); ++j) {
            const auto& [start, end] = plan.intervals[j];
            PriceSeries sub = slice(prices[i], start, end);
            StrengthSeries est = estimate_series(sub, settings.model, settings.estimator);
            for (std::size_t s = 0; s < n_strats; ++s) {
                StrategyRun run = run_strategy(sub, est, strategies[s]);
                report.annual_returns[s][i].push_back(
                    annual_return(1.0, 1.0 + run.accumulated_return));
                report.cycle_counts[s][i].push_back(static_cast<int>(run.cycles.size()));
                if (j + 1 == plan.intervals.size())
                    report.last_interval_logs[s][i] = run.cycles;
            }
        }
    }

    report.per_stock.assign(n_strats, std::vector<PerStockStats>(n_stocks));
    report.portfolio_returns.assign(n_strats, {});
    report.portfolio.assign(n_strats, PortfolioStats{});
    for (std::size_t s = 0; s < n_strats; ++s) {
        std::vector<double> stock_cpy(n_stocks, 0.0);
        for (std::size_t i = 0; i < n_stocks; ++i) {
            MeanSdv stats = aggregate_stats(report.annual_returns[s][i]);
            double cycles = 0.0;
            for (int c : report.cycle_counts[s][i]) cycles += c;
            cycles /= 2.0 * static_cast<double>(report.cycle_counts[s][i].size());
            report.per_stock[s][i] = {stats.mean, stats.sdv, cycles,
                                      stats.mean - cycles * per_cycle_cost};
            stock_cpy[i] = cycles;
        }
        for (std::size_t j = 0; j < common_intervals; ++j) {
            std::vector<double> cell(n_stocks);
            for (std::size_t i = 0; i < n_stocks; ++i)
                cell[i] = report.annual_returns[s][i][j];
            report.portfolio_returns[s].push_back(
                portfolio_return(cell, std::span<const double>(report.weights)));
        }
        MeanSdv port_stats = aggregate_stats(report.portfolio_returns[s]);
        double port_cpy =
            portfolio_return(stock_cpy, std::span<const double>(report.weights));
        PortfolioStats& port = report.portfolio[s];
        port.aar = port_stats.mean;
        port.sdv = port_stats.sdv;
        port.cycles_per_year = port_cpy;
        port.cost_per_year = port_cpy * per_cycle_cost;
        port.net_per_year = port.aar - port.cost_per_year;

        report.valuation.push_back(market_value_series(
            prices, report.full_span_logs[s], weights, settings.initial_money,
            settings.costs));
    }

    report.switch_gain_followbb = kNaN;
    report.switch_gain_ridemood = kNaN;
    auto find_strategy = [&](StrategyKind kind) -> const PortfolioStats* {
        for (std::size_t s = 0; s < n_strats; ++s)
            if (strategies[s] == kind) return &report.portfolio[s];
        return nullptr;
    };
    if (const PortfolioStats* hold = find_strategy(StrategyKind::BuyHold);
        hold && hold->net_per_year != 0.0) {
        if (const PortfolioStats* fb = find_strategy(StrategyKind::FollowBB))
            report.switch_gain_followbb =
                (fb->net_per_year - hold->net_per_year) / hold->net_per_year;
        if (const PortfolioStats* rm = find_strategy(StrategyKind::RideMood))
            report.switch_gain_ridemood =
                (rm->net_per_year - hold->net_per_year) / hold->net_per_year;
    }
    return report;
}

}  // namespace trademood
