#pragma once

#include <string>
#include <vector>

#include "trademood/estimator.hpp"
#include "trademood/series.hpp"

namespace trademood {

enum class StrategyKind { FollowBB, RideMood, BuyHold };

/// Smoothing window applied to the strength estimates: 3 for FollowBB,
/// 5 for RideMood, 0 for BuyHold (unused).
int smoothing_days(StrategyKind kind);

const char* strategy_name(StrategyKind kind);
StrategyKind strategy_from_name(const std::string& name);

enum class Action { Buy, Sell, HoldStock, StayCash };

/// Full-cash or full-stock; no partial holdings.
struct Position {
    bool in_stock = false;
    std::string entry_date;
    double entry_price = 0.0;
};

/// One completed buy -> sell round trip.
struct TradeCycle {
    std::string buy_date;
    double buy_price = 0.0;
    std::string sell_date;
    double sell_price = 0.0;
    double cycle_return = 0.0;  // sell_price / buy_price - 1
};

/// Enter only on big-buyer presence with no big seller; exit as soon as the
/// smoothed buyer strength stops being positive.
Action follow_bb_step(const Position& position, double a7_bar, double a6_bar);

/// mood = a7_bar - a6_bar. Enter when positive, exit when negative; zero
/// keeps the current state.
Action ride_mood_step(const Position& position, double mood);

struct StrategyRun {
    std::vector<TradeCycle> cycles;
    double accumulated_return = 0.0;  // prod(1 + r_k) - 1, cash earns nothing
};

/// Run one strategy over an interval. Signals computed from closes through
/// the previous day act at the current day's close; a position still open on
/// the final day is liquidated at the final close. BuyHold produces exactly
/// one cycle, first close to last close.
StrategyRun run_strategy(const PriceSeries& prices, const StrengthSeries& strengths,
                         StrategyKind kind);

}  // namespace trademood
