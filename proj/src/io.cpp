#include "trademood/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace trademood {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::filesystem::path& path, std::size_t line,
                       const std::string& what) {
    throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

double parse_double(const std::string& field, const std::filesystem::path& path,
                    std::size_t line) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value))
        fail(path, line, "bad number '" + field + "'");
    return value;
}

long parse_int(const std::string& field, const std::filesystem::path& path,
               std::size_t line) {
    long value = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) fail(path, line, "bad integer '" + field + "'");
    return value;
}

bool is_iso_date(const std::string& s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
        if (s[i] < '0' || s[i] > '9') return false;
    int month = (s[5] - '0') * 10 + (s[6] - '0');
    int day = (s[8] - '0') * 10 + (s[9] - '0');
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string fmt_or_empty(double value) {
    return std::isnan(value) ? std::string{} : format_double(value);
}

}  // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

PriceSeries load_prices(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    PriceSeries series;
    series.symbol = path.stem().string();
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty()) continue;
        if (lineno == 1) {
            if (line != "date,adj_close") fail(path, 1, "expected header 'date,adj_close'");
            continue;
        }
        std::vector<std::string> fields = split(line);
        if (fields.size() != 2) fail(path, lineno, "expected 2 fields");
        if (!is_iso_date(fields[0])) fail(path, lineno, "bad date '" + fields[0] + "'");
        if (!series.dates.empty() && fields[0] <= series.dates.back())
            fail(path, lineno, "dates must be strictly increasing");
        double price = parse_double(fields[1], path, lineno);
        if (!(price > 0.0)) fail(path, lineno, "price must be positive");
        series.dates.push_back(fields[0]);
        series.closes.push_back(price);
    }
    return series;
}

std::vector<UniverseEntry> load_universe(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    std::vector<UniverseEntry> entries;
    std::set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty()) continue;
        if (lineno == 1) {
            if (line != "symbol,name,weight") fail(path, 1, "expected header 'symbol,name,weight'");
            continue;
        }
        std::vector<std::string> fields = split(line);
        if (fields.size() != 3) fail(path, lineno, "expected 3 fields");
        if (fields[0].empty()) fail(path, lineno, "empty symbol");
        if (!seen.insert(fields[0]).second) fail(path, lineno, "duplicate symbol " + fields[0]);
        double weight = parse_double(fields[2], path, lineno);
        if (!(weight > 0.0)) fail(path, lineno, "weight must be positive");
        entries.push_back({fields[0], fields[1], weight});
    }
    if (entries.empty()) throw std::runtime_error(path.string() + ": empty universe");
    return entries;
}

std::vector<StrengthSegment> load_strength_path(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    std::vector<StrengthSegment> segments;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty()) continue;
        if (lineno == 1) {
            if (line != "start_day,a6,a7") fail(path, 1, "expected header 'start_day,a6,a7'");
            continue;
        }
        std::vector<std::string> fields = split(line);
        if (fields.size() != 3) fail(path, lineno, "expected 3 fields");
        StrengthSegment seg;
        seg.start_day = static_cast<int>(parse_int(fields[0], path, lineno));
        seg.a6 = parse_double(fields[1], path, lineno);
        seg.a7 = parse_double(fields[2], path, lineno);
        if (!segments.empty() && seg.start_day <= segments.back().start_day)
            fail(path, lineno, "start days must be increasing");
        segments.push_back(seg);
    }
    if (segments.empty()) throw std::runtime_error(path.string() + ": empty strength path");
    return segments;
}

void write_prices(const PriceSeries& series, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "date,adj_close\n";
    for (std::size_t i = 0; i < series.size(); ++i)
        out << series.dates[i] << ',' << format_double(series.closes[i]) << '\n';
    finish(out, path);
}

void write_simulated_series(const SimulatedSeries& series,
                            const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "day,price,signal,noise\n";
    for (std::size_t i = 0; i < series.prices.size(); ++i) {
        long day = static_cast<long>(i) - (series.n - 1);
        out << day << ',' << format_double(series.prices[i]);
        if (day >= 1) {
            out << ',' << format_double(series.signal[static_cast<std::size_t>(day - 1)])
                << ',' << format_double(series.noise[static_cast<std::size_t>(day - 1)]);
        } else {
            out << ",0,0";
        }
        out << '\n';
    }
    finish(out, path);
}

void write_strength_series(const StrengthSeries& series,
                           const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    int k = series.smooth_days;
    out << "date,a6_hat,a7_hat,a6_bar_" << k << ",a7_bar_" << k << "\n";
    for (std::size_t i = 0; i < series.a6_hat.size(); ++i) {
        out << series.dates[i] << ',' << format_double(series.a6_hat[i]) << ','
            << format_double(series.a7_hat[i]) << ',';
        if (k > 0)
            out << fmt_or_empty(series.a6_bar[i]) << ',' << fmt_or_empty(series.a7_bar[i]);
        else
            out << ',';
        out << '\n';
    }
    finish(out, path);
}

StrengthSeries read_strength_series(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    StrengthSeries series;
    std::string line;
    std::size_t lineno = 0;
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty()) continue;
        std::vector<std::string> fields = split(line);
        if (fields.size() != 5) fail(path, lineno, "expected 5 fields");
        if (lineno == 1) {
            const std::string& bar = fields[3];
            if (bar.rfind("a6_bar_", 0) != 0) fail(path, 1, "unexpected header");
            series.smooth_days =
                static_cast<int>(parse_int(bar.substr(7), path, 1));
            continue;
        }
        series.dates.push_back(fields[0]);
        series.a6_hat.push_back(parse_double(fields[1], path, lineno));
        series.a7_hat.push_back(parse_double(fields[2], path, lineno));
        series.a6_bar.push_back(fields[3].empty() ? nan : parse_double(fields[3], path, lineno));
        series.a7_bar.push_back(fields[4].empty() ? nan : parse_double(fields[4], path, lineno));
    }
    return series;
}

void write_trade_log(const std::vector<TradeCycle>& cycles,
                     const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "buy_date,buy_price,sell_date,sell_price,return\n";
    for (const TradeCycle& c : cycles) {
        out << c.buy_date << ',' << format_double(c.buy_price) << ',' << c.sell_date << ','
            << format_double(c.sell_price) << ',' << format_double(c.cycle_return) << '\n';
    }
    finish(out, path);
}

std::vector<TradeCycle> read_trade_log(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    std::vector<TradeCycle> cycles;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty() || lineno == 1) continue;
        std::vector<std::string> fields = split(line);
        if (fields.size() != 5) fail(path, lineno, "expected 5 fields");
        TradeCycle c;
        c.buy_date = fields[0];
        c.buy_price = parse_double(fields[1], path, lineno);
        c.sell_date = fields[2];
        c.sell_price = parse_double(fields[3], path, lineno);
        c.cycle_return = parse_double(fields[4], path, lineno);
        cycles.push_back(c);
    }
    return cycles;
}

void write_valuation(const ValuationSeries& series, const std::vector<std::string>& symbols,
                     const std::filesystem::path& path) {
    if (symbols.size() != series.per_stock.size())
        throw std::invalid_argument("write_valuation: symbol count mismatch");
    std::ofstream out = open_out(path);
    out << "date,portfolio";
    for (const std::string& s : symbols) out << ',' << s;
    out << '\n';
    for (std::size_t d = 0; d < series.dates.size(); ++d) {
        out << series.dates[d] << ',' << format_double(series.portfolio[d]);
        for (const std::vector<double>& column : series.per_stock)
            out << ',' << format_double(column[d]);
        out << '\n';
    }
    finish(out, path);
}

ValuationSeries read_valuation(const std::filesystem::path& path,
                               std::vector<std::string>* symbols) {
    std::ifstream in = open_in(path);
    ValuationSeries series;
    std::string line;
    std::size_t lineno = 0;
    std::size_t n_stocks = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty()) continue;
        std::vector<std::string> fields = split(line);
        if (lineno == 1) {
            if (fields.size() < 2) fail(path, 1, "unexpected header");
            n_stocks = fields.size() - 2;
            series.per_stock.resize(n_stocks);
            if (symbols) symbols->assign(fields.begin() + 2, fields.end());
            continue;
        }
        if (fields.size() != n_stocks + 2) fail(path, lineno, "field count mismatch");
        series.dates.push_back(fields[0]);
        series.portfolio.push_back(parse_double(fields[1], path, lineno));
        for (std::size_t i = 0; i < n_stocks; ++i)
            series.per_stock[i].push_back(parse_double(fields[2 + i], path, lineno));
    }
    return series;
}

namespace {

void write_annual_returns(const BacktestReport& report, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "symbol,strategy,interval,start_date,end_date,annual_return,cycles\n";
    for (std::size_t s = 0; s < report.strategies.size(); ++s) {
        for (std::size_t i = 0; i < report.symbols.size(); ++i) {
            const std::vector<double>& ar = report.annual_returns[s][i];
            for (std::size_t j = 0; j < ar.size(); ++j) {
                const bool labeled = j < report.interval_start.size();
                out << report.symbols[i] << ',' << strategy_name(report.strategies[s]) << ','
                    << j << ',' << (labeled ? report.interval_start[j] : "") << ','
                    << (labeled ? report.interval_end[j] : "") << ',' << format_double(ar[j])
                    << ',' << report.cycle_counts[s][i][j] << '\n';
            }
        }
    }
    finish(out, path);
}

void write_per_stock_stats(const std::vector<std::string>& symbols,
                           const std::vector<std::string>& strategy_names,
                           const std::vector<std::vector<PerStockStats>>& stats,
                           const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "symbol,strategy,aar,sdv,cycles_per_year,net_per_year\n";
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        for (std::size_t s = 0; s < strategy_names.size(); ++s) {
            const PerStockStats& row = stats[s][i];
            out << symbols[i] << ',' << strategy_names[s] << ',' << format_double(row.aar)
                << ',' << format_double(row.sdv) << ',' << format_double(row.cycles_per_year)
                << ',' << format_double(row.net_per_year) << '\n';
        }
    }
    finish(out, path);
}

void write_portfolio_returns(const std::vector<std::string>& strategy_names,
                             const std::vector<std::string>& starts,
                             const std::vector<std::string>& ends,
                             const std::vector<std::vector<double>>& returns,
                             const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "interval,start_date,end_date";
    for (const std::string& name : strategy_names) out << ',' << name;
    out << '\n';
    std::size_t count = returns.empty() ? 0 : returns.front().size();
    for (std::size_t j = 0; j < count; ++j) {
        const bool labeled = j < starts.size();
        out << j << ',' << (labeled ? starts[j] : "") << ',' << (labeled ? ends[j] : "");
        for (const std::vector<double>& column : returns) out << ',' << format_double(column[j]);
        out << '\n';
    }
    finish(out, path);
}

void write_portfolio_stats(const std::vector<std::string>& strategy_names,
                           const std::vector<PortfolioStats>& stats,
                           double gain_followbb, double gain_ridemood,
                           const std::filesystem::path& csv_path,
                           const std::filesystem::path& json_path) {
    std::ofstream out = open_out(csv_path);
    out << "strategy,aar,sdv,cycles_per_year,cost_per_year,net_per_year\n";
    for (std::size_t s = 0; s < strategy_names.size(); ++s) {
        const PortfolioStats& p = stats[s];
        out << strategy_names[s] << ',' << format_double(p.aar) << ',' << format_double(p.sdv)
            << ',' << format_double(p.cycles_per_year) << ',' << format_double(p.cost_per_year)
            << ',' << format_double(p.net_per_year) << '\n';
    }
    out << "switch_gain_followbb," << fmt_or_empty(gain_followbb) << ",,,,\n";
    out << "switch_gain_ridemood," << fmt_or_empty(gain_ridemood) << ",,,,\n";
    finish(out, csv_path);

    json doc;
    for (std::size_t s = 0; s < strategy_names.size(); ++s) {
        const PortfolioStats& p = stats[s];
        doc["strategies"][strategy_names[s]] = {{"aar", p.aar},
                                                {"sdv", p.sdv},
                                                {"cycles_per_year", p.cycles_per_year},
                                                {"cost_per_year", p.cost_per_year},
                                                {"net_per_year", p.net_per_year}};
    }
    doc["switch_gain_followbb"] =
        std::isnan(gain_followbb) ? json() : json(gain_followbb);
    doc["switch_gain_ridemood"] =
        std::isnan(gain_ridemood) ? json() : json(gain_ridemood);
    std::ofstream jout = open_out(json_path);
    jout << doc.dump(2) << '\n';
    finish(jout, json_path);
}

void write_portfolio_value(const std::vector<std::string>& strategy_names,
                           const std::vector<ValuationSeries>& valuations,
                           const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "date";
    for (const std::string& name : strategy_names) out << ',' << name;
    out << '\n';
    std::size_t days = valuations.empty() ? 0 : valuations.front().dates.size();
    for (std::size_t d = 0; d < days; ++d) {
        out << valuations.front().dates[d];
        for (const ValuationSeries& v : valuations) out << ',' << format_double(v.portfolio[d]);
        out << '\n';
    }
    finish(out, path);
}

void write_symbol_trade_logs(const std::vector<std::string>& symbols,
                             const std::vector<std::vector<TradeCycle>>& logs,
                             const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "symbol,buy_date,buy_price,sell_date,sell_price,return\n";
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        for (const TradeCycle& c : logs[i]) {
            out << symbols[i] << ',' << c.buy_date << ',' << format_double(c.buy_price) << ','
                << c.sell_date << ',' << format_double(c.sell_price) << ','
                << format_double(c.cycle_return) << '\n';
        }
    }
    finish(out, path);
}

std::vector<std::string> names_of(const std::vector<StrategyKind>& strategies) {
    std::vector<std::string> names;
    for (StrategyKind kind : strategies) names.emplace_back(strategy_name(kind));
    return names;
}

}  // namespace

void emit_report(const BacktestReport& report, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::string> strategy_names = names_of(report.strategies);

    json meta;
    meta["symbols"] = report.symbols;
    meta["weights"] = report.weights;
    meta["strategies"] = strategy_names;
    meta["buy_rate"] = report.costs.buy_rate;
    meta["sell_rate"] = report.costs.sell_rate;
    meta["initial_money"] = report.initial_money;
    meta["interval_length"] = report.interval_length;
    meta["interval_stride"] = report.interval_stride;
    meta["interval_count"] = report.interval_start.size();
    std::ofstream mout = open_out(out_dir / "run_meta.json");
    mout << meta.dump(2) << '\n';
    finish(mout, out_dir / "run_meta.json");

    write_annual_returns(report, out_dir / "annual_returns.csv");
    write_per_stock_stats(report.symbols, strategy_names, report.per_stock,
                          out_dir / "per_stock_stats.csv");
    write_portfolio_returns(strategy_names, report.interval_start, report.interval_end,
                            report.portfolio_returns, out_dir / "portfolio_returns.csv");
    write_portfolio_stats(strategy_names, report.portfolio, report.switch_gain_followbb,
                          report.switch_gain_ridemood, out_dir / "portfolio_stats.csv",
                          out_dir / "portfolio_stats.json");
    write_portfolio_value(strategy_names, report.valuation, out_dir / "portfolio_value.csv");
    for (std::size_t s = 0; s < report.strategies.size(); ++s) {
        write_valuation(report.valuation[s], report.symbols,
                        out_dir / ("valuation_" + strategy_names[s] + ".csv"));
        write_symbol_trade_logs(report.symbols, report.full_span_logs[s],
                                out_dir / ("cycles_full_" + strategy_names[s] + ".csv"));
        write_symbol_trade_logs(report.symbols, report.last_interval_logs[s],
                                out_dir /
                                    ("cycles_last_interval_" + strategy_names[s] + ".csv"));
    }
}

void rerender_report(const std::filesystem::path& in_dir,
                     const std::filesystem::path& out_dir) {
    std::ifstream min = open_in(in_dir / "run_meta.json");
    json meta = json::parse(min);
    std::vector<std::string> symbols = meta.at("symbols").get<std::vector<std::string>>();
    std::vector<double> weights = meta.at("weights").get<std::vector<double>>();
    std::vector<std::string> strategy_names =
        meta.at("strategies").get<std::vector<std::string>>();
    CostModel costs{meta.at("buy_rate").get<double>(), meta.at("sell_rate").get<double>()};

    std::map<std::string, std::size_t> symbol_index, strategy_index;
    for (std::size_t i = 0; i < symbols.size(); ++i) symbol_index[symbols[i]] = i;
    for (std::size_t s = 0; s < strategy_names.size(); ++s)
        strategy_index[strategy_names[s]] = s;

    // [strategy][stock] -> per-interval values
    std::vector<std::vector<std::vector<double>>> ar(
        strategy_names.size(), std::vector<std::vector<double>>(symbols.size()));
    std::vector<std::vector<std::vector<int>>> cycles(
        strategy_names.size(), std::vector<std::vector<int>>(symbols.size()));
    std::vector<std::string> starts, ends;

    const std::filesystem::path ar_path = in_dir / "annual_returns.csv";
    std::ifstream in = open_in(ar_path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty() || lineno == 1) continue;
        std::vector<std::string> fields = split(line);
        if (fields.size() != 7) fail(ar_path, lineno, "expected 7 fields");
        auto si = symbol_index.find(fields[0]);
        auto st = strategy_index.find(fields[1]);
        if (si == symbol_index.end()) fail(ar_path, lineno, "unknown symbol " + fields[0]);
        if (st == strategy_index.end()) fail(ar_path, lineno, "unknown strategy " + fields[1]);
        std::size_t j = static_cast<std::size_t>(parse_int(fields[2], ar_path, lineno));
        std::vector<double>& cell = ar[st->second][si->second];
        if (j != cell.size()) fail(ar_path, lineno, "intervals out of order");
        cell.push_back(parse_double(fields[5], ar_path, lineno));
        cycles[st->second][si->second].push_back(
            static_cast<int>(parse_int(fields[6], ar_path, lineno)));
        if (st->second == 0 && si->second == 0) {
            starts.push_back(fields[3]);
            ends.push_back(fields[4]);
        }
    }

    std::vector<std::vector<PerStockStats>> per_stock(
        strategy_names.size(), std::vector<PerStockStats>(symbols.size()));
    std::vector<std::vector<double>> portfolio_rets(strategy_names.size());
    std::vector<PortfolioStats> portfolio(strategy_names.size());
    std::size_t common = std::numeric_limits<std::size_t>::max();
    for (const auto& per_strategy : ar)
        for (const auto& cell : per_strategy) common = std::min(common, cell.size());

    for (std::size_t s = 0; s < strategy_names.size(); ++s) {
        std::vector<double> stock_cpy(symbols.size(), 0.0);
        for (std::size_t i = 0; i < symbols.size(); ++i) {
            if (ar[s][i].empty())
                throw std::runtime_error("rerender_report: no rows for " + symbols[i]);
            MeanSdv stats = aggregate_stats(ar[s][i]);
            double cpy = 0.0;
            for (int c : cycles[s][i]) cpy += c;
            cpy /= 2.0 * static_cast<double>(cycles[s][i].size());
            per_stock[s][i] = {stats.mean, stats.sdv, cpy,
                               stats.mean - cpy * costs.per_cycle_cost()};
            stock_cpy[i] = cpy;
        }
        for (std::size_t j = 0; j < common; ++j) {
            std::vector<double> cell(symbols.size());
            for (std::size_t i = 0; i < symbols.size(); ++i) cell[i] = ar[s][i][j];
            portfolio_rets[s].push_back(portfolio_return(cell, weights));
        }
        MeanSdv stats = aggregate_stats(portfolio_rets[s]);
        double cpy = portfolio_return(stock_cpy, weights);
        portfolio[s] = {stats.mean, stats.sdv, cpy, cpy * costs.per_cycle_cost(),
                        stats.mean - cpy * costs.per_cycle_cost()};
    }

    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    double gain_followbb = nan, gain_ridemood = nan;
    auto net_of = [&](const std::string& name) -> double {
        auto it = strategy_index.find(name);
        return it == strategy_index.end() ? nan : portfolio[it->second].net_per_year;
    };
    double net_hold = net_of("buyhold");
    if (!std::isnan(net_hold) && net_hold != 0.0) {
        if (double fb = net_of("followbb"); !std::isnan(fb))
            gain_followbb = (fb - net_hold) / net_hold;
        if (double rm = net_of("ridemood"); !std::isnan(rm))
            gain_ridemood = (rm - net_hold) / net_hold;
    }

    std::filesystem::create_directories(out_dir);
    write_per_stock_stats(symbols, strategy_names, per_stock, out_dir / "per_stock_stats.csv");
    write_portfolio_returns(strategy_names, starts, ends, portfolio_rets,
                            out_dir / "portfolio_returns.csv");
    write_portfolio_stats(strategy_names, portfolio, gain_followbb, gain_ridemood,
                          out_dir / "portfolio_stats.csv", out_dir / "portfolio_stats.json");

    if (!std::filesystem::equivalent(in_dir, out_dir)) {
        for (const char* name : {"run_meta.json", "annual_returns.csv", "portfolio_value.csv"}) {
            if (std::filesystem::exists(in_dir / name))
                std::filesystem::copy_file(in_dir / name, out_dir / name,
                                           std::filesystem::copy_options::overwrite_existing);
        }
        for (const std::string& s : strategy_names) {
            for (const std::string& prefix :
                 {std::string("valuation_"), std::string("cycles_full_"),
                  std::string("cycles_last_interval_")}) {
                std::filesystem::path name = prefix + s + ".csv";
                if (std::filesystem::exists(in_dir / name))
                    std::filesystem::copy_file(in_dir / name, out_dir / name,
                                               std::filesystem::copy_options::overwrite_existing);
            }
        }
    }
}

}  // namespace trademood
