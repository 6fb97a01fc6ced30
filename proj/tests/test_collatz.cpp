#include <doctest.h>

#include "oracles.hpp"
#include "orglab/collatz.hpp"

using namespace orglab;

TEST_CASE("collatz_f") {
    CHECK(collatz_f(42) == 21);
    CHECK(collatz_f(21) == 64);
    CHECK(collatz_f(2) == 1);
    CHECK(collatz_f(1) == 4);
    CHECK_THROWS_AS(collatz_f(0), InvalidInput);
}

TEST_CASE("collatz_g") {
    CHECK(collatz_g(42) == 64);
    CHECK(collatz_g(8) == 4);
    CHECK(collatz_g(2) == 4);
    CHECK(collatz_g(4) == 2);
    CHECK(collatz_g(0) == 0);
    CHECK_THROWS_AS(collatz_g(7), InvalidInput);
}

TEST_CASE("g_trajectory") {
    SUBCASE("42") {
        auto t = g_trajectory(42, 100);
        std::vector<mpz_class> expected{42, 64, 32, 16, 8, 4};
        CHECK(t.values == expected);
        CHECK(t.terminated);
        CHECK(t.step_count() == 5);
    }
    SUBCASE("already stopped") {
        auto t = g_trajectory(4, 100);
        CHECK(t.values == std::vector<mpz_class>{4});
        CHECK(t.terminated);
        CHECK(t.step_count() == 0);
        CHECK(g_trajectory(0, 0).terminated);
    }
    SUBCASE("54 matches the word-size oracle") {
        auto t = g_trajectory(54, 10000);
        CHECK(t.terminated);
        CHECK(t.step_count() == oracle::g_steps_word(54));
        CHECK(t.step_count() == run_until_bankrupt(encode(54), 10000).days);
    }
    SUBCASE("budget") {
        auto t = g_trajectory(54, 10);
        CHECK_FALSE(t.terminated);
        CHECK(t.step_count() == 10);
    }
    CHECK_THROWS_AS(g_trajectory(9, 10), InvalidInput);
}

TEST_CASE("check_bisimulation") {
    CHECK(check_bisimulation(42));
    CHECK(check_bisimulation(2));
    CHECK(check_bisimulation(0));
    CHECK_THROWS_AS(check_bisimulation(5), InvalidInput);
}

TEST_CASE("f_g_consistency") {
    CHECK(f_g_consistency(16));
    CHECK(f_g_consistency(42));
    CHECK(f_g_consistency(4));
    for (long n = 2; n <= 1000000; n += 2) REQUIRE(f_g_consistency(n));
}

TEST_CASE("bisimulation on random 128-bit values and parity along trajectories") {
    std::mt19937_64 rng(128);
    for (int i = 0; i < 2000; ++i) REQUIRE(check_bisimulation(oracle::random_even(rng, 128)));
    for (long n = 2; n <= 3000; n += 2) {
        auto t = g_trajectory(n);
        REQUIRE(t.terminated);
        for (const auto &v : t.values) REQUIRE(v % 2 == 0);
    }
}

TEST_CASE("trajectory equals the day-by-day decoded organization for even n <= 1e5") {
    for (long n = 2; n <= 100000; n += 2) {
        auto t = g_trajectory(n);
        auto run = run_until_bankrupt(encode(n), kDefaultMaxDays, true);
        REQUIRE(t.step_count() == run.days);
        REQUIRE(t.step_count() == oracle::g_steps_word(static_cast<std::uint64_t>(n)));
        for (std::size_t i = 0; i < t.values.size(); ++i) REQUIRE(decode((*run.trace)[i]) == t.values[i]);
    }
}

TEST_CASE("trajectory JSON") {
    CHECK(trajectory_json(g_trajectory(42)) == R"(["42","64","32","16","8","4"])");
}
