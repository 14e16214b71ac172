#include "trademood/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "trademood/backtest.hpp"
#include "trademood/estimator.hpp"
#include "trademood/io.hpp"
#include "trademood/simulator.hpp"

namespace trademood {

namespace {

namespace fs = std::filesystem;

struct ModelFlags {
    int n = 3;
    double w = 0.01;
    double lambda = 0.95;
    double gamma = 10.0;
};

void add_model_flags(CLI::App* cmd, ModelFlags& flags) {
    cmd->add_option("-n,--window", flags.n, "mood-index averaging window (trading days)")
        ->capture_default_str();
    cmd->add_option("-w,--width", flags.w, "excess-demand band width (log-price units)")
        ->capture_default_str();
    cmd->add_option("--lambda", flags.lambda, "forgetting factor, in (0,1)")
        ->capture_default_str();
    cmd->add_option("--gamma", flags.gamma, "initial covariance scale")
        ->capture_default_str();
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> items;
    std::string item;
    std::stringstream ss(csv);
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

int run_simulate(const ModelFlags& model, const std::string& path_file, double sigma,
                 int days, std::uint64_t seed, double p0, int smooth_days,
                 const std::string& out_dir) {
    ModelParams params{model.n, model.w};
    params.validate();
    TrueStrengthPath path =
        TrueStrengthPath::from_segments(load_strength_path(path_file), days);
    std::vector<double> initial(static_cast<std::size_t>(params.n), p0);
    SimulatedSeries series = simulate(params, path, {sigma, seed}, days, initial);

    fs::path out(out_dir);
    fs::create_directories(out);
    write_simulated_series(series, out / "simulated.csv");

    PriceSeries prices;
    prices.symbol = "simulated";
    prices.closes = series.prices;
    char date_buf[16];
    for (std::size_t i = 0; i < prices.closes.size(); ++i) {
        // Synthetic day labels only; the estimator ignores them.
        std::snprintf(date_buf, sizeof(date_buf), "%+06ld",
                      static_cast<long>(i) - (params.n - 1));
        prices.dates.emplace_back(date_buf);
    }
    EstimatorConfig config{model.lambda, model.gamma};
    StrengthSeries est = estimate_series(prices, params, config, smooth_days);

    std::ofstream overlay(out / "estimates.csv");
    if (!overlay) throw std::runtime_error("cannot write " + (out / "estimates.csv").string());
    overlay << "day,a6_true,a7_true,a6_hat,a7_hat,a6_bar,a7_bar\n";
    for (std::size_t i = 0; i < est.a6_hat.size(); ++i) {
        std::size_t d = est.first_index + i - (static_cast<std::size_t>(params.n) - 1);
        overlay << (d + 1) << ',' << format_double(path.a6[d]) << ','
                << format_double(path.a7[d]) << ',' << format_double(est.a6_hat[i]) << ','
                << format_double(est.a7_hat[i]) << ',';
        if (est.smooth_days > 0 && !std::isnan(est.a6_bar[i]))
            overlay << format_double(est.a6_bar[i]) << ',' << format_double(est.a7_bar[i]);
        else
            overlay << ',';
        overlay << '\n';
    }
    overlay.flush();
    if (!overlay) throw std::runtime_error("write failed for estimates.csv");

    double ratio = signal_noise_ratio(series);
    nlohmann::json summary;
    summary["days"] = days;
    summary["sigma"] = sigma;
    summary["seed"] = seed;
    summary["signal_noise_ratio"] = ratio;
    std::ofstream sout(out / "summary.json");
    sout << summary.dump(2) << '\n';
    sout.flush();
    if (!sout) throw std::runtime_error("write failed for summary.json");

    std::cout << "simulated " << days << " days, signal/noise = " << format_double(ratio)
              << ", output in " << out_dir << "\n";
    return 0;
}

int run_estimate(const ModelFlags& model, const std::string& prices_file, int smooth_days,
                 const std::string& out_file) {
    ModelParams params{model.n, model.w};
    EstimatorConfig config{model.lambda, model.gamma};
    PriceSeries prices = load_prices(prices_file);
    StrengthSeries est = estimate_series(prices, params, config, smooth_days);
    write_strength_series(est, out_file);
    std::cout << "estimated " << est.a6_hat.size() << " days for " << prices.symbol
              << " -> " << out_file << "\n";
    return 0;
}

int run_backtest(const ModelFlags& model, const std::string& universe_file,
                 const std::string& prices_dir, const std::string& strategy_list,
                 int interval_length, int interval_stride, double buy_rate,
                 double sell_rate, double initial_money, const std::string& out_dir) {
    std::vector<UniverseEntry> universe = load_universe(universe_file);
    std::vector<PriceSeries> prices;
    std::vector<double> weights;
    for (const UniverseEntry& entry : universe) {
        fs::path file = fs::path(prices_dir) / (entry.symbol + ".csv");
        if (!fs::exists(file))
            throw std::runtime_error("no price file for " + entry.symbol + ": " +
                                     file.string());
        PriceSeries series = load_prices(file);
        series.symbol = entry.symbol;
        prices.push_back(std::move(series));
        weights.push_back(entry.weight);
    }

    std::vector<StrategyKind> strategies;
    for (const std::string& name : split_list(strategy_list))
        strategies.push_back(strategy_from_name(name));

    RunSettings settings;
    settings.model = {model.n, model.w};
    settings.estimator = {model.lambda, model.gamma};
    settings.interval_length = interval_length;
    settings.interval_stride = interval_stride;
    settings.costs = {buy_rate, sell_rate};
    settings.initial_money = initial_money;

    BacktestReport report = run_full_backtest(prices, weights, strategies, settings);
    emit_report(report, out_dir);

    std::cout << "backtested " << report.symbols.size() << " stocks over "
              << report.interval_start.size() << " intervals\n";
    for (std::size_t s = 0; s < report.strategies.size(); ++s) {
        const PortfolioStats& p = report.portfolio[s];
        std::cout << "  " << strategy_name(report.strategies[s])
                  << ": aar = " << format_double(p.aar)
                  << ", sdv = " << format_double(p.sdv)
                  << ", net/yr = " << format_double(p.net_per_year) << "\n";
    }
    if (!std::isnan(report.switch_gain_followbb))
        std::cout << "  switch gain buyhold -> followbb: "
                  << format_double(report.switch_gain_followbb) << "\n";
    if (!std::isnan(report.switch_gain_ridemood))
        std::cout << "  switch gain buyhold -> ridemood: "
                  << format_double(report.switch_gain_ridemood) << "\n";
    std::cout << "report written to " << out_dir << "\n";
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"big-trader strength estimation and trading-strategy evaluation"};
    app.require_subcommand(1);

    ModelFlags sim_model;
    double sigma = 0.02;
    int days = 600;
    std::uint64_t seed = 1;
    double p0 = 10.0;
    int sim_smooth = 3;
    std::string path_file;
    std::string sim_out = "sim_out";
    bool sim_defaults = false;
    CLI::App* sim = app.add_subcommand(
        "simulate", "generate a synthetic price series and estimate its strengths");
    add_model_flags(sim, sim_model);
    sim->add_option("--sigma", sigma, "noise standard deviation")->capture_default_str();
    sim->add_option("--days", days, "number of simulated days")->capture_default_str();
    sim->add_option("--seed", seed, "random seed")->capture_default_str();
    sim->add_option("--p0", p0, "initial price")->capture_default_str();
    sim->add_option("--smooth-days", sim_smooth, "moving-average window for estimates")
        ->capture_default_str();
    sim->add_option("--path", path_file, "strength-path CSV (start_day,a6,a7)")->required();
    sim->add_option("-o,--out", sim_out, "output directory")->capture_default_str();
    sim->add_flag("--paper-defaults", sim_defaults,
                  "ignore model overrides and use the built-in defaults");

    ModelFlags est_model;
    std::string est_prices, est_out = "strengths.csv";
    int est_smooth = 3;
    bool est_defaults = false;
    CLI::App* est = app.add_subcommand("estimate",
                                       "estimate daily strengths from a price CSV");
    add_model_flags(est, est_model);
    est->add_option("--prices", est_prices, "price CSV (date,adj_close)")->required();
    est->add_option("--smooth-days", est_smooth, "moving-average window")
        ->capture_default_str();
    est->add_option("-o,--out", est_out, "output CSV")->capture_default_str();
    est->add_flag("--paper-defaults", est_defaults,
                  "ignore model overrides and use the built-in defaults");

    ModelFlags bt_model;
    std::string universe_file, prices_dir, bt_out = "backtest_out";
    std::string strategy_list = "followbb,ridemood,buyhold";
    int interval_length = 492, interval_stride = 5;
    double buy_rate = 0.00108, sell_rate = 0.00288, initial_money = 100.0;
    bool bt_defaults = false;
    CLI::App* bt = app.add_subcommand(
        "backtest", "run the rolling-interval evaluation over a stock universe");
    add_model_flags(bt, bt_model);
    bt->add_option("--universe", universe_file, "universe CSV (symbol,name,weight)")
        ->required();
    bt->add_option("--prices", prices_dir, "directory with <symbol>.csv price files")
        ->required();
    bt->add_option("--strategy", strategy_list,
                   "comma-separated strategies: followbb,ridemood,buyhold")
        ->capture_default_str();
    bt->add_option("--interval-length", interval_length, "test-interval length (days)")
        ->capture_default_str();
    bt->add_option("--interval-stride", interval_stride, "days between interval starts")
        ->capture_default_str();
    bt->add_option("--buy-rate", buy_rate, "buy-side cost rate")->capture_default_str();
    bt->add_option("--sell-rate", sell_rate, "sell-side cost rate")->capture_default_str();
    bt->add_option("--im", initial_money, "initial portfolio money")->capture_default_str();
    bt->add_option("-o,--out", bt_out, "output directory")->capture_default_str();
    bt->add_flag("--paper-defaults", bt_defaults,
                 "ignore model/plan/cost overrides and use the built-in defaults");

    std::string rep_in, rep_out;
    CLI::App* rep = app.add_subcommand("report",
                                       "re-render statistics tables from saved outputs");
    rep->add_option("--in", rep_in, "directory written by `backtest`")->required();
    rep->add_option("-o,--out", rep_out, "output directory")->required();

    std::vector<const char*> argv;
    argv.push_back("trademood");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*sim) {
            if (sim_defaults) sim_model = ModelFlags{};
            return run_simulate(sim_model, path_file, sigma, days, seed, p0, sim_smooth,
                                sim_out);
        }
        if (*est) {
            if (est_defaults) est_model = ModelFlags{};
            return run_estimate(est_model, est_prices, est_smooth, est_out);
        }
        if (*bt) {
            if (bt_defaults) {
                bt_model = ModelFlags{};
                interval_length = 492;
                interval_stride = 5;
                buy_rate = 0.00108;
                sell_rate = 0.00288;
                initial_money = 100.0;
            }
            return run_backtest(bt_model, universe_file, prices_dir, strategy_list,
                                interval_length, interval_stride, buy_rate, sell_rate,
                                initial_money, bt_out);
        }
        if (*rep) {
            rerender_report(rep_in, rep_out);
            std::cout << "report re-rendered to " << rep_out << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace trademood
