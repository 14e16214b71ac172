#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "trademood/strategy.hpp"

using namespace trademood;

namespace {

// Price/strength pair that makes FollowBB buy on day 4 and sell on day 7:
// the smoothed buyer strength turns positive at estimate 3 and negative at
// estimate 6, the seller strength stays negative throughout.
std::pair<PriceSeries, StrengthSeries> followbb_scenario(double buy_price,
                                                         double sell_price) {
    PriceSeries prices;
    prices.symbol = "fixture";
    prices.dates = testutil::trading_calendar(10);
    prices.closes = {70, 70, 70, 70, buy_price, 70, 70, sell_price, 70, 70};

    StrengthSeries strengths;
    strengths.first_index = 0;
    strengths.dates.assign(prices.dates.begin(), prices.dates.begin() + 9);
    strengths.a7_hat = {-1, -1, 1, 1, 1, -1, -1, -1, -1};
    strengths.a6_hat.assign(9, -1.0);
    return {prices, strengths};
}

StrengthSeries random_strengths(const PriceSeries& prices, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    StrengthSeries s;
    s.first_index = 2;
    std::size_t count = prices.size() - 3;
    s.dates.assign(prices.dates.begin() + 2, prices.dates.begin() + 2 + count);
    for (std::size_t i = 0; i < count; ++i) {
        s.a6_hat.push_back(dist(gen));
        s.a7_hat.push_back(dist(gen));
    }
    return s;
}

}  // namespace

TEST_CASE("follow_bb_step truth table") {
    Position cash;
    Position stock{true, "2011-01-03", 50.0};
    CHECK(follow_bb_step(cash, 0.05, -0.02) == Action::Buy);
    CHECK(follow_bb_step(cash, 0.05, 0.01) == Action::StayCash);
    CHECK(follow_bb_step(cash, 0.05, 0.0) == Action::StayCash);
    CHECK(follow_bb_step(cash, -0.01, -0.02) == Action::StayCash);
    CHECK(follow_bb_step(cash, 0.0, -0.02) == Action::StayCash);
    CHECK(follow_bb_step(stock, 0.01, 0.03) == Action::HoldStock);
    CHECK(follow_bb_step(stock, -0.001, -0.5) == Action::Sell);
    CHECK(follow_bb_step(stock, 0.0, -0.5) == Action::Sell);
}

TEST_CASE("ride_mood_step truth table") {
    Position cash;
    Position stock{true, "2011-01-03", 50.0};
    CHECK(ride_mood_step(cash, 0.02) == Action::Buy);
    CHECK(ride_mood_step(cash, 0.0) == Action::StayCash);
    CHECK(ride_mood_step(cash, -0.5) == Action::StayCash);
    CHECK(ride_mood_step(stock, -0.01) == Action::Sell);
    CHECK(ride_mood_step(stock, 0.0) == Action::HoldStock);
    CHECK(ride_mood_step(stock, 0.4) == Action::HoldStock);
}

TEST_CASE("buy and hold is one first-to-last cycle") {
    PriceSeries prices;
    prices.dates = testutil::trading_calendar(5);
    prices.closes = {100, 95, 108, 104, 110};
    StrategyRun run = run_strategy(prices, {}, StrategyKind::BuyHold);
    REQUIRE(run.cycles.size() == 1);
    CHECK(run.cycles[0].buy_price == 100.0);
    CHECK(run.cycles[0].sell_price == 110.0);
    CHECK(run.accumulated_return == doctest::Approx(0.10).epsilon(1e-12));
}

TEST_CASE("followbb golden cycle returns") {
    {
        auto [prices, strengths] = followbb_scenario(74.91, 71.75);
        StrategyRun run = run_strategy(prices, strengths, StrategyKind::FollowBB);
        REQUIRE(run.cycles.size() == 1);
        CHECK(run.cycles[0].buy_price == 74.91);
        CHECK(run.cycles[0].sell_price == 71.75);
        CHECK(run.cycles[0].cycle_return ==
              doctest::Approx(71.75 / 74.91 - 1.0).epsilon(1e-12));
    }
    {
        auto [prices, strengths] = followbb_scenario(66.87, 86.90);
        StrategyRun run = run_strategy(prices, strengths, StrategyKind::FollowBB);
        REQUIRE(run.cycles.size() == 1);
        CHECK(run.cycles[0].cycle_return ==
              doctest::Approx(86.90 / 66.87 - 1.0).epsilon(1e-12));
    }
}

TEST_CASE("a buy on the final day closes the same day at zero return") {
    PriceSeries prices;
    prices.dates = testutil::trading_calendar(10);
    prices.closes.assign(10, 4.89);

    StrengthSeries strengths;
    strengths.first_index = 0;
    strengths.dates.assign(prices.dates.begin(), prices.dates.begin() + 9);
    strengths.a7_hat = {-1, -1, -1, -1, -1, -1, -1, -1, 4};
    strengths.a6_hat.assign(9, -1.0);

    StrategyRun run = run_strategy(prices, strengths, StrategyKind::FollowBB);
    REQUIRE(run.cycles.size() == 1);
    CHECK(run.cycles[0].buy_date == run.cycles[0].sell_date);
    CHECK(run.cycles[0].buy_date == prices.dates.back());
    CHECK(run.cycles[0].cycle_return == 0.0);
}

TEST_CASE("ridemood trades on the smoothed mood sign") {
    auto [prices, strengths] = followbb_scenario(74.91, 71.75);
    strengths.a6_hat.assign(9, 0.0);  // mood = a7_bar
    StrategyRun run = run_strategy(prices, strengths, StrategyKind::RideMood);
    REQUIRE(run.cycles.size() == 1);
    // 5-day smoothing shifts the crossings by one day against the 3-day run.
    CHECK(run.cycles[0].buy_price == 70.0);
    CHECK(run.cycles[0].sell_price == 70.0);
}

TEST_CASE("state-machine invariants on random inputs") {
    std::mt19937_64 gen(2024);
    for (int trial = 0; trial < 200; ++trial) {
        PriceSeries prices = testutil::random_walk_prices(60, 1000 + trial);
        StrengthSeries strengths = random_strengths(prices, gen);

        for (StrategyKind kind : {StrategyKind::FollowBB, StrategyKind::RideMood}) {
            const int k = smoothing_days(kind);
            std::vector<double> a6_bar = moving_average(strengths.a6_hat, k);
            std::vector<double> a7_bar = moving_average(strengths.a7_hat, k);
            StrategyRun run = run_strategy(prices, strengths, kind);

            std::string prev_sell;
            double acc = 1.0;
            for (const TradeCycle& c : run.cycles) {
                CHECK(c.buy_date <= c.sell_date);
                if (!prev_sell.empty()) CHECK(prev_sell < c.buy_date);
                prev_sell = c.sell_date;
                acc *= 1.0 + c.cycle_return;

                auto day_of = [&](const std::string& date) {
                    return static_cast<std::size_t>(
                        std::find(prices.dates.begin(), prices.dates.end(), date) -
                        prices.dates.begin());
                };
                std::size_t jb = day_of(c.buy_date) - 1 - strengths.first_index;
                if (kind == StrategyKind::FollowBB) {
                    CHECK(a7_bar[jb] > 0.0);
                    CHECK(a6_bar[jb] < 0.0);
                } else {
                    CHECK(a7_bar[jb] - a6_bar[jb] > 0.0);
                }
                if (c.sell_date != prices.dates.back()) {
                    std::size_t js = day_of(c.sell_date) - 1 - strengths.first_index;
                    if (kind == StrategyKind::FollowBB)
                        CHECK(a7_bar[js] <= 0.0);
                    else
                        CHECK(a7_bar[js] - a6_bar[js] < 0.0);
                }
            }
            CHECK(run.accumulated_return == doctest::Approx(acc - 1.0).epsilon(1e-12));
        }

        StrategyRun hold = run_strategy(prices, strengths, StrategyKind::BuyHold);
        CHECK(hold.cycles.size() == 1);
    }
}

TEST_CASE("actions and returns are invariant to the price scale") {
    std::mt19937_64 gen(5);
    PriceSeries prices = testutil::random_walk_prices(80, 77);
    StrengthSeries strengths = random_strengths(prices, gen);
    PriceSeries scaled = prices;
    for (double& c : scaled.closes) c *= 2.5;

    for (StrategyKind kind :
         {StrategyKind::FollowBB, StrategyKind::RideMood, StrategyKind::BuyHold}) {
        StrategyRun a = run_strategy(prices, strengths, kind);
        StrategyRun b = run_strategy(scaled, strengths, kind);
        REQUIRE(a.cycles.size() == b.cycles.size());
        for (std::size_t i = 0; i < a.cycles.size(); ++i) {
            CHECK(a.cycles[i].buy_date == b.cycles[i].buy_date);
            CHECK(a.cycles[i].sell_date == b.cycles[i].sell_date);
            CHECK(a.cycles[i].cycle_return ==
                  doctest::Approx(b.cycles[i].cycle_return).epsilon(1e-12));
        }
    }
}

TEST_CASE("run_strategy contract") {
    PriceSeries prices = testutil::random_walk_prices(30, 8);
    std::mt19937_64 gen(9);
    StrengthSeries strengths = random_strengths(prices, gen);

    StrengthSeries shifted = strengths;
    shifted.dates[0] = "1999-01-01";
    CHECK_THROWS_AS(run_strategy(prices, shifted, StrategyKind::FollowBB),
                    std::invalid_argument);

    PriceSeries tiny;
    tiny.dates = testutil::trading_calendar(4);
    tiny.closes = {1, 1, 1, 1};
    StrengthSeries tiny_strengths;
    tiny_strengths.first_index = 2;
    tiny_strengths.dates = {tiny.dates[2]};
    tiny_strengths.a6_hat = {0.1};
    tiny_strengths.a7_hat = {0.1};
    CHECK_THROWS_AS(run_strategy(tiny, tiny_strengths, StrategyKind::RideMood),
                    std::invalid_argument);

    CHECK_THROWS_AS(run_strategy(PriceSeries{}, strengths, StrategyKind::BuyHold),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_strategy(prices, StrengthSeries{}, StrategyKind::FollowBB),
                    std::invalid_argument);
}

TEST_CASE("strategy names round trip") {
    for (StrategyKind kind :
         {StrategyKind::FollowBB, StrategyKind::RideMood, StrategyKind::BuyHold})
        CHECK(strategy_from_name(strategy_name(kind)) == kind);
    CHECK_THROWS_AS(strategy_from_name("holdbuy"), std::invalid_argument);
    CHECK(smoothing_days(StrategyKind::FollowBB) == 3);
    CHECK(smoothing_days(StrategyKind::RideMood) == 5);
}
