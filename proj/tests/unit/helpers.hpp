#pragma once

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "trademood/series.hpp"
#include "trademood/simulator.hpp"

namespace testutil {

inline std::string iso(std::chrono::year_month_day ymd) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

/// Weekday calendar starting 2007-07-03.
inline std::vector<std::string> trading_calendar(std::size_t count) {
    using namespace std::chrono;
    std::vector<std::string> dates;
    dates.reserve(count);
    sys_days day{year{2007} / 7 / 3};
    while (dates.size() < count) {
        weekday wd{day};
        if (wd != Saturday && wd != Sunday) dates.push_back(iso(year_month_day{day}));
        day += days{1};
    }
    return dates;
}

inline trademood::PriceSeries to_price_series(const trademood::SimulatedSeries& sim,
                                              std::string symbol) {
    trademood::PriceSeries p;
    p.symbol = std::move(symbol);
    p.closes = sim.prices;
    p.dates = trading_calendar(sim.prices.size());
    return p;
}

inline trademood::PriceSeries random_walk_prices(std::size_t days, std::uint64_t seed,
                                                 double start = 50.0) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> step(-0.03, 0.031);
    trademood::PriceSeries p;
    p.symbol = "rw" + std::to_string(seed);
    p.dates = trading_calendar(days);
    p.closes.reserve(days);
    double price = start;
    for (std::size_t i = 0; i < days; ++i) {
        p.closes.push_back(price);
        price *= std::exp(step(gen));
    }
    return p;
}

class TempDir {
  public:
    explicit TempDir(const std::string& tag) {
        path_ = std::filesystem::temp_directory_path() /
                ("trademood_test_" + tag + "_" + std::to_string(::getpid()));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace testutil
