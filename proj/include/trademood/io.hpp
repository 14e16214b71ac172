#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "trademood/backtest.hpp"
#include "trademood/estimator.hpp"
#include "trademood/series.hpp"
#include "trademood/simulator.hpp"
#include "trademood/strategy.hpp"

namespace trademood {

struct UniverseEntry {
    std::string symbol;
    std::string name;
    double weight = 0.0;  // index weight in percent, > 0
};

/// `date,adj_close` with ISO dates, strictly increasing, prices > 0.
/// Malformed input reports the offending file line number.
PriceSeries load_prices(const std::filesystem::path& path);

/// `symbol,name,weight` with unique symbols and positive weights.
std::vector<UniverseEntry> load_universe(const std::filesystem::path& path);

/// `start_day,a6,a7` segment records, expanded to per-day values elsewhere.
std::vector<StrengthSegment> load_strength_path(const std::filesystem::path& path);

void write_prices(const PriceSeries& series, const std::filesystem::path& path);

/// `day,price,signal,noise`; initial days (day <= 0) carry zero signal/noise.
void write_simulated_series(const SimulatedSeries& series,
                            const std::filesystem::path& path);

/// `date,a6_hat,a7_hat,a6_bar_k,a7_bar_k`; undefined moving averages are
/// empty fields.
void write_strength_series(const StrengthSeries& series,
                           const std::filesystem::path& path);
StrengthSeries read_strength_series(const std::filesystem::path& path);

/// `buy_date,buy_price,sell_date,sell_price,return`.
void write_trade_log(const std::vector<TradeCycle>& cycles,
                     const std::filesystem::path& path);
std::vector<TradeCycle> read_trade_log(const std::filesystem::path& path);

void write_valuation(const ValuationSeries& series, const std::vector<std::string>& symbols,
                     const std::filesystem::path& path);
ValuationSeries read_valuation(const std::filesystem::path& path,
                               std::vector<std::string>* symbols = nullptr);

/// Write the full report tree into out_dir: per-interval annual returns,
/// per-stock and portfolio statistics (CSV and JSON), daily portfolio
/// valuations, and per-cycle trade logs. Output is deterministic for
/// identical inputs.
void emit_report(const BacktestReport& report, const std::filesystem::path& out_dir);

/// Rebuild the statistics tables from the raw files emit_report saved
/// (annual_returns.csv, cycle trade logs, run_meta.json) and write them to
/// out_dir.
void rerender_report(const std::filesystem::path& in_dir,
                     const std::filesystem::path& out_dir);

/// Fixed-format numeric output (12 significant digits) used by every writer,
/// wide enough for 1e-9 round trips.
std::string format_double(double value);

}  // namespace trademood
