#include "trademood/strategy.hpp"

#include <cmath>
#include <stdexcept>

namespace trademood {

int smoothing_days(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::FollowBB: return 3;
        case StrategyKind::RideMood: return 5;
        case StrategyKind::BuyHold: return 0;
    }
    throw std::logic_error("smoothing_days: bad kind");
}

const char* strategy_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::FollowBB: return "followbb";
        case StrategyKind::RideMood: return "ridemood";
        case StrategyKind::BuyHold: return "buyhold";
    }
    throw std::logic_error("strategy_name: bad kind");
}

StrategyKind strategy_from_name(const std::string& name) {
    if (name == "followbb") return StrategyKind::FollowBB;
    if (name == "ridemood") return StrategyKind::RideMood;
    if (name == "buyhold") return StrategyKind::BuyHold;
    throw std::invalid_argument("unknown strategy: " + name);
}

Action follow_bb_step(const Position& position, double a7_bar, double a6_bar) {
    if (position.in_stock)
        return a7_bar > 0.0 ? Action::HoldStock : Action::Sell;
    return (a7_bar > 0.0 && a6_bar < 0.0) ? Action::Buy : Action::StayCash;
}

Action ride_mood_step(const Position& position, double mood) {
    if (position.in_stock)
        return mood < 0.0 ? Action::Sell : Action::HoldStock;
    return mood > 0.0 ? Action::Buy : Action::StayCash;
}

namespace {

void close_cycle(StrategyRun& run, Position& position, const std::string& date,
                 double price) {
    TradeCycle cycle;
    cycle.buy_date = position.entry_date;
    cycle.buy_price = position.entry_price;
    cycle.sell_date = date;
    cycle.sell_price = price;
    cycle.cycle_return = price / position.entry_price - 1.0;
    run.cycles.push_back(cycle);
    position = Position{};
}

}  // namespace

StrategyRun run_strategy(const PriceSeries& prices, const StrengthSeries& strengths,
                         StrategyKind kind) {
    if (prices.empty()) throw std::invalid_argument("run_strategy: empty price series");
    if (prices.dates.size() != prices.closes.size())
        throw std::invalid_argument("run_strategy: price series misaligned");

    StrategyRun run;
    if (kind == StrategyKind::BuyHold) {
        TradeCycle cycle;
        cycle.buy_date = prices.dates.front();
        cycle.buy_price = prices.closes.front();
        cycle.sell_date = prices.dates.back();
        cycle.sell_price = prices.closes.back();
        cycle.cycle_return = cycle.sell_price / cycle.buy_price - 1.0;
        run.cycles.push_back(cycle);
        run.accumulated_return = cycle.cycle_return;
        return run;
    }

    const int k = smoothing_days(kind);
    if (strengths.a6_hat.empty())
        throw std::invalid_argument("run_strategy: empty strength series");
    for (std::size_t j = 0; j < strengths.dates.size(); ++j) {
        std::size_t t = strengths.first_index + j;
        if (t >= prices.size() || strengths.dates[j] != prices.dates[t])
            throw std::invalid_argument("run_strategy: strength dates misaligned with prices");
    }

    std::vector<double> a6_bar = moving_average(strengths.a6_hat, k);
    std::vector<double> a7_bar = moving_average(strengths.a7_hat, k);

    // The estimate indexed j becomes actionable at the close of price day
    // first_index + j + 1; the first usable one carries a full k-day average.
    std::size_t first_day = strengths.first_index + static_cast<std::size_t>(k);
    if (first_day >= prices.size())
        throw std::invalid_argument("run_strategy: interval shorter than warm-up");

    Position position;
    for (std::size_t d = first_day; d < prices.size(); ++d) {
        std::size_t j = d - 1 - strengths.first_index;
        if (j >= a6_bar.size()) break;
        Action action;
        if (kind == StrategyKind::FollowBB) {
            action = follow_bb_step(position, a7_bar[j], a6_bar[j]);
        } else {
            action = ride_mood_step(position, a7_bar[j] - a6_bar[j]);
        }
        if (action == Action::Buy) {
            position.in_stock = true;
            position.entry_date = prices.dates[d];
            position.entry_price = prices.closes[d];
        } else if (action == Action::Sell) {
            close_cycle(run, position, prices.dates[d], prices.closes[d]);
        }
    }
    if (position.in_stock)
        close_cycle(run, position, prices.dates.back(), prices.closes.back());

    double acc = 1.0;
    for (const TradeCycle& c : run.cycles) acc *= 1.0 + c.cycle_return;
    run.accumulated_return = acc - 1.0;
    return run;
}

}  // namespace trademood
