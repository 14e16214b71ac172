#include <cmath>
#include <vector>

#include "doctest.h"
#include "trademood/simulator.hpp"

using namespace trademood;

namespace {

const std::vector<double> kInit{10.0, 10.0, 10.0};

TrueStrengthPath pulse_path(double amplitude, int days = 600) {
    std::vector<StrengthSegment> segments{{1, 0.0, 0.0},        {51, 0.0, amplitude},
                                          {201, 0.0, 0.0},      {251, amplitude, 0.0},
                                          {401, 0.0, 0.0},      {451, 0.0, amplitude}};
    return TrueStrengthPath::from_segments(segments, days);
}

}  // namespace

TEST_CASE("segment expansion") {
    std::vector<StrengthSegment> segments{{1, 0.1, 0.2}, {4, 0.0, 0.5}};
    TrueStrengthPath path = TrueStrengthPath::from_segments(segments, 6);
    CHECK(path.a6 == std::vector<double>{0.1, 0.1, 0.1, 0.0, 0.0, 0.0});
    CHECK(path.a7 == std::vector<double>{0.2, 0.2, 0.2, 0.5, 0.5, 0.5});

    std::vector<StrengthSegment> late{{3, 0.1, 0.1}};
    TrueStrengthPath padded = TrueStrengthPath::from_segments(late, 4);
    CHECK(padded.a7 == std::vector<double>{0.0, 0.0, 0.1, 0.1});

    std::vector<StrengthSegment> unordered{{5, 0, 0}, {2, 0, 0}};
    CHECK_THROWS_AS(TrueStrengthPath::from_segments(unordered, 6), std::invalid_argument);
    std::vector<StrengthSegment> zero_day{{0, 0, 0}};
    CHECK_THROWS_AS(TrueStrengthPath::from_segments(zero_day, 6), std::invalid_argument);
}

TEST_CASE("zero strengths and zero noise keep the price flat") {
    SimulatedSeries s =
        simulate({}, TrueStrengthPath::constant(0.0, 0.0, 50), {0.0, 1}, 50, kInit);
    for (double p : s.prices) CHECK(p == 10.0);
    for (double sig : s.signal) CHECK(sig == 0.0);
}

TEST_CASE("equal initial prices are a fixed point for any constant strength") {
    SimulatedSeries s =
        simulate({}, TrueStrengthPath::constant(0.3, 0.7, 50), {0.0, 1}, 50, kInit);
    for (double p : s.prices) CHECK(p == 10.0);
}

TEST_CASE("same seed gives bit-identical series") {
    TrueStrengthPath path = pulse_path(0.5, 100);
    SimulatedSeries a = simulate({}, path, {0.02, 42}, 100, kInit);
    SimulatedSeries b = simulate({}, path, {0.02, 42}, 100, kInit);
    CHECK(a.prices == b.prices);
    CHECK(a.signal == b.signal);
    CHECK(a.noise == b.noise);

    SimulatedSeries c = simulate({}, path, {0.02, 43}, 100, kInit);
    CHECK(a.prices != c.prices);
}

TEST_CASE("per-day reconstruction identity") {
    TrueStrengthPath path = pulse_path(1.0, 300);
    SimulatedSeries s = simulate({}, path, {0.02, 7}, 300, kInit);
    REQUIRE(s.signal.size() == 300);
    for (std::size_t t = 0; t < s.signal.size(); ++t) {
        double lhs = s.prices[s.n - 1 + t] * std::exp(s.signal[t] + s.noise[t]);
        double rhs = s.prices[s.n + t];
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("signal-to-noise ratio definition") {
    SimulatedSeries zero_signal =
        simulate({}, TrueStrengthPath::constant(0.0, 0.0, 80), {0.05, 3}, 80, kInit);
    CHECK(signal_noise_ratio(zero_signal) == 0.0);

    SimulatedSeries no_noise =
        simulate({}, pulse_path(0.5, 80), {0.0, 3}, 80, kInit);
    CHECK_THROWS_AS(signal_noise_ratio(no_noise), std::domain_error);

    CHECK_THROWS_AS(signal_noise_ratio(SimulatedSeries{}), std::invalid_argument);
}

TEST_CASE("paper-scale configuration lands near ratio 1") {
    // sigma = 0.02 with order-1 pulse strengths gives a ratio of order 1.
    SimulatedSeries s = simulate({}, pulse_path(0.3), {0.02, 1}, 600, kInit);
    double ratio = signal_noise_ratio(s);
    CHECK(ratio > 0.2);
    CHECK(ratio < 5.0);
}

TEST_CASE("ratio rises as sigma shrinks on the saturated branch") {
    TrueStrengthPath path = pulse_path(1.0);
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        double prev = -1.0;
        for (double sigma : {0.32, 0.16, 0.08, 0.04}) {
            double ratio = signal_noise_ratio(simulate({}, path, {sigma, seed}, 600, kInit));
            CHECK(ratio > prev);
            prev = ratio;
        }
    }
}

TEST_CASE("doubling the strengths does not lower the ratio") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        double base =
            signal_noise_ratio(simulate({}, pulse_path(0.5), {0.08, seed}, 600, kInit));
        double doubled =
            signal_noise_ratio(simulate({}, pulse_path(1.0), {0.08, seed}, 600, kInit));
        CHECK(doubled >= base);
    }
}

TEST_CASE("simulate contract") {
    TrueStrengthPath path = TrueStrengthPath::constant(0.0, 0.0, 10);
    std::vector<double> bad_init{10.0, -1.0, 10.0};
    CHECK_THROWS_AS(simulate({}, path, {0.0, 1}, 10, bad_init), std::domain_error);
    std::vector<double> two{10.0, 10.0};
    CHECK_THROWS_AS(simulate({}, path, {0.0, 1}, 10, two), std::invalid_argument);
    CHECK_THROWS_AS(simulate({}, path, {0.0, 1}, 0, kInit), std::invalid_argument);
    CHECK_THROWS_AS(simulate({}, path, {0.0, 1}, 20, kInit), std::invalid_argument);
    CHECK_THROWS_AS(simulate({}, path, {-0.1, 1}, 10, kInit), std::invalid_argument);
}
