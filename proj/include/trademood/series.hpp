#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace trademood {

/// Daily adjusted closing prices for one symbol. Dates are ISO strings
/// (YYYY-MM-DD), strictly increasing, one row per trading day.
struct PriceSeries {
    std::string symbol;
    std::vector<std::string> dates;
    std::vector<double> closes;

    std::size_t size() const { return closes.size(); }
    bool empty() const { return closes.empty(); }
};

}  // namespace trademood
