#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "trademood/backtest.hpp"
#include "trademood/cli.hpp"
#include "trademood/estimator.hpp"
#include "trademood/excess_demand.hpp"
#include "trademood/io.hpp"
#include "trademood/series.hpp"
#include "trademood/simulator.hpp"
#include "trademood/strategy.hpp"

namespace py = pybind11;

using namespace trademood;

namespace {

Vec2 to_vec2(std::pair<double, double> p) { return {p.first, p.second}; }
std::pair<double, double> from_vec2(const Vec2& v) { return {v.x6, v.x7}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Big-trader strength estimation, trading strategies and backtesting";

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init([](int n, double w) {
                 ModelParams p{n, w};
                 p.validate();
                 return p;
             }),
             py::arg("n") = 3, py::arg("w") = 0.01)
        .def_readonly("n", &ModelParams::n)
        .def_readonly("w", &ModelParams::w);

    m.def("mood_index",
          [](const std::vector<double>& window, const ModelParams& params) {
              return mood_index(window, params);
          },
          py::arg("window"), py::arg("params"));
    m.def("ed6", &ed6, py::arg("x"), py::arg("w"));
    m.def("ed7", &ed7, py::arg("x"), py::arg("w"));
    m.def("excess_demand",
          [](double x, double w) {
              ExcessDemandPair p = excess_demand(x, w);
              return std::make_pair(p.ed6, p.ed7);
          },
          py::arg("x"), py::arg("w"));

    py::class_<EstimatorConfig>(m, "EstimatorConfig")
        .def(py::init([](double lambda, double gamma) {
                 EstimatorConfig c{lambda, gamma};
                 c.validate();
                 return c;
             }),
             py::arg("lam") = 0.95, py::arg("gamma") = 10.0)
        .def_readonly("lam", &EstimatorConfig::lambda)
        .def_readonly("gamma", &EstimatorConfig::gamma);

    py::class_<EstimatorState>(m, "EstimatorState")
        .def_property_readonly("a_hat",
                               [](const EstimatorState& s) { return from_vec2(s.a_hat); })
        .def_property_readonly("P", [](const EstimatorState& s) {
            return std::make_pair(std::make_pair(s.P.m00, s.P.m01),
                                  std::make_pair(s.P.m10, s.P.m11));
        });

    m.def("rls_init", &init, py::arg("config"));
    m.def("rls_step",
          [](const EstimatorState& state, std::pair<double, double> ed, double r_next,
             double lambda) { return step(state, to_vec2(ed), r_next, lambda); },
          py::arg("state"), py::arg("ed"), py::arg("r_next"), py::arg("lam"));
    m.def("batch_weighted_ls",
          [](const std::vector<std::pair<double, double>>& eds,
             const std::vector<double>& returns, double lambda, double gamma) {
              std::vector<Vec2> e;
              e.reserve(eds.size());
              for (auto& p : eds) e.push_back(to_vec2(p));
              return from_vec2(batch_weighted_ls(e, returns, lambda, gamma));
          },
          py::arg("eds"), py::arg("returns"), py::arg("lam"), py::arg("gamma"));
    m.def("moving_average",
          [](const std::vector<double>& values, int k) {
              return moving_average(values, k);
          },
          py::arg("values"), py::arg("k"));

    py::class_<PriceSeries>(m, "PriceSeries")
        .def(py::init([](std::string symbol, std::vector<std::string> dates,
                         std::vector<double> closes) {
                 PriceSeries p;
                 p.symbol = std::move(symbol);
                 p.dates = std::move(dates);
                 p.closes = std::move(closes);
                 return p;
             }),
             py::arg("symbol"), py::arg("dates"), py::arg("closes"))
        .def_readonly("symbol", &PriceSeries::symbol)
        .def_readonly("dates", &PriceSeries::dates)
        .def_readonly("closes", &PriceSeries::closes)
        .def("__len__", &PriceSeries::size);

    py::class_<StrengthSeries>(m, "StrengthSeries")
        .def_readonly("first_index", &StrengthSeries::first_index)
        .def_readonly("dates", &StrengthSeries::dates)
        .def_readonly("a6_hat", &StrengthSeries::a6_hat)
        .def_readonly("a7_hat", &StrengthSeries::a7_hat)
        .def_readonly("smooth_days", &StrengthSeries::smooth_days)
        .def_readonly("a6_bar", &StrengthSeries::a6_bar)
        .def_readonly("a7_bar", &StrengthSeries::a7_bar);

    m.def("estimate_series", &estimate_series, py::arg("prices"), py::arg("params"),
          py::arg("config"), py::arg("smooth_days") = 0);

    py::class_<StrengthSegment>(m, "StrengthSegment")
        .def(py::init([](int start_day, double a6, double a7) {
                 return StrengthSegment{start_day, a6, a7};
             }),
             py::arg("start_day"), py::arg("a6"), py::arg("a7"))
        .def_readonly("start_day", &StrengthSegment::start_day)
        .def_readonly("a6", &StrengthSegment::a6)
        .def_readonly("a7", &StrengthSegment::a7);

    py::class_<TrueStrengthPath>(m, "TrueStrengthPath")
        .def_static("from_segments",
                    [](const std::vector<StrengthSegment>& segments, int days) {
                        return TrueStrengthPath::from_segments(segments, days);
                    },
                    py::arg("segments"), py::arg("days"))
        .def_static("constant", &TrueStrengthPath::constant, py::arg("a6"), py::arg("a7"),
                    py::arg("days"))
        .def_readonly("a6", &TrueStrengthPath::a6)
        .def_readonly("a7", &TrueStrengthPath::a7);

    py::class_<SimulatedSeries>(m, "SimulatedSeries")
        .def_readonly("n", &SimulatedSeries::n)
        .def_readonly("prices", &SimulatedSeries::prices)
        .def_readonly("signal", &SimulatedSeries::signal)
        .def_readonly("noise", &SimulatedSeries::noise);

    m.def("simulate",
          [](const ModelParams& params, const TrueStrengthPath& path, double sigma,
             std::uint64_t seed, int days, const std::vector<double>& initial_prices) {
              return simulate(params, path, {sigma, seed}, days, initial_prices);
          },
          py::arg("params"), py::arg("path"), py::arg("sigma"), py::arg("seed"),
          py::arg("days"), py::arg("initial_prices"));
    m.def("signal_noise_ratio", &signal_noise_ratio, py::arg("series"));

    py::enum_<StrategyKind>(m, "StrategyKind")
        .value("FollowBB", StrategyKind::FollowBB)
        .value("RideMood", StrategyKind::RideMood)
        .value("BuyHold", StrategyKind::BuyHold);

    py::class_<TradeCycle>(m, "TradeCycle")
        .def_readonly("buy_date", &TradeCycle::buy_date)
        .def_readonly("buy_price", &TradeCycle::buy_price)
        .def_readonly("sell_date", &TradeCycle::sell_date)
        .def_readonly("sell_price", &TradeCycle::sell_price)
        .def_readonly("cycle_return", &TradeCycle::cycle_return);

    py::class_<StrategyRun>(m, "StrategyRun")
        .def_readonly("cycles", &StrategyRun::cycles)
        .def_readonly("accumulated_return", &StrategyRun::accumulated_return);

    m.def("run_strategy", &run_strategy, py::arg("prices"), py::arg("strengths"),
          py::arg("kind"));

    py::class_<IntervalPlan>(m, "IntervalPlan")
        .def_readonly("length", &IntervalPlan::length)
        .def_readonly("stride", &IntervalPlan::stride)
        .def_readonly("intervals", &IntervalPlan::intervals);

    m.def("make_intervals", &make_intervals, py::arg("total_days"), py::arg("length"),
          py::arg("stride"));
    m.def("annual_return", &annual_return, py::arg("cash_in"), py::arg("cash_out"));
    m.def("aggregate_stats",
          [](const std::vector<double>& values) {
              MeanSdv s = aggregate_stats(values);
              return std::make_pair(s.mean, s.sdv);
          },
          py::arg("values"));
    m.def("portfolio_return",
          [](const std::vector<double>& returns, const std::vector<double>& weights) {
              return portfolio_return(returns, weights);
          },
          py::arg("returns"), py::arg("weights"));

    py::class_<CostModel>(m, "CostModel")
        .def(py::init([](double buy_rate, double sell_rate) {
                 return CostModel{buy_rate, sell_rate};
             }),
             py::arg("buy_rate") = 0.00108, py::arg("sell_rate") = 0.00288)
        .def_readonly("buy_rate", &CostModel::buy_rate)
        .def_readonly("sell_rate", &CostModel::sell_rate)
        .def("per_cycle_cost", &CostModel::per_cycle_cost);

    py::class_<ValuationSeries>(m, "ValuationSeries")
        .def_readonly("dates", &ValuationSeries::dates)
        .def_readonly("per_stock", &ValuationSeries::per_stock)
        .def_readonly("portfolio", &ValuationSeries::portfolio);

    m.def("market_value_series",
          [](const std::vector<PriceSeries>& prices,
             const std::vector<std::vector<TradeCycle>>& logs,
             const std::vector<double>& weights, double initial_money,
             const CostModel& costs) {
              return market_value_series(prices, logs, weights, initial_money, costs);
          },
          py::arg("prices"), py::arg("logs"), py::arg("weights"), py::arg("initial_money"),
          py::arg("costs"));
    m.def("average_portfolio_value",
          [](const ValuationSeries& series) {
              MeanSdv s = average_portfolio_value(series);
              return std::make_pair(s.mean, s.sdv);
          },
          py::arg("series"));

    py::class_<RunSettings>(m, "RunSettings")
        .def(py::init([](const ModelParams& model, const EstimatorConfig& estimator,
                         int interval_length, int interval_stride, const CostModel& costs,
                         double initial_money) {
                 RunSettings s;
                 s.model = model;
                 s.estimator = estimator;
                 s.interval_length = interval_length;
                 s.interval_stride = interval_stride;
                 s.costs = costs;
                 s.initial_money = initial_money;
                 return s;
             }),
             py::arg("model") = ModelParams{}, py::arg("estimator") = EstimatorConfig{},
             py::arg("interval_length") = 492, py::arg("interval_stride") = 5,
             py::arg("costs") = CostModel{}, py::arg("initial_money") = 100.0);

    py::class_<PerStockStats>(m, "PerStockStats")
        .def_readonly("aar", &PerStockStats::aar)
        .def_readonly("sdv", &PerStockStats::sdv)
        .def_readonly("cycles_per_year", &PerStockStats::cycles_per_year)
        .def_readonly("net_per_year", &PerStockStats::net_per_year);

    py::class_<PortfolioStats>(m, "PortfolioStats")
        .def_readonly("aar", &PortfolioStats::aar)
        .def_readonly("sdv", &PortfolioStats::sdv)
        .def_readonly("cycles_per_year", &PortfolioStats::cycles_per_year)
        .def_readonly("cost_per_year", &PortfolioStats::cost_per_year)
        .def_readonly("net_per_year", &PortfolioStats::net_per_year);

    py::class_<BacktestReport>(m, "BacktestReport")
        .def_readonly("symbols", &BacktestReport::symbols)
        .def_readonly("weights", &BacktestReport::weights)
        .def_readonly("strategies", &BacktestReport::strategies)
        .def_readonly("interval_start", &BacktestReport::interval_start)
        .def_readonly("interval_end", &BacktestReport::interval_end)
        .def_readonly("annual_returns", &BacktestReport::annual_returns)
        .def_readonly("cycle_counts", &BacktestReport::cycle_counts)
        .def_readonly("per_stock", &BacktestReport::per_stock)
        .def_readonly("portfolio_returns", &BacktestReport::portfolio_returns)
        .def_readonly("portfolio", &BacktestReport::portfolio)
        .def_readonly("switch_gain_followbb", &BacktestReport::switch_gain_followbb)
        .def_readonly("switch_gain_ridemood", &BacktestReport::switch_gain_ridemood)
        .def_readonly("valuation", &BacktestReport::valuation);

    m.def("run_full_backtest",
          [](const std::vector<PriceSeries>& prices, const std::vector<double>& weights,
             const std::vector<StrategyKind>& strategies, const RunSettings& settings) {
              return run_full_backtest(prices, weights, strategies, settings);
          },
          py::arg("prices"), py::arg("weights"), py::arg("strategies"),
          py::arg("settings") = RunSettings{});

    m.def("load_prices", &load_prices, py::arg("path"));
    m.def("write_prices", &write_prices, py::arg("series"), py::arg("path"));
    m.def("emit_report", &emit_report, py::arg("report"), py::arg("out_dir"));
    m.def("cli_main", &cli_main, py::arg("args"));
}
