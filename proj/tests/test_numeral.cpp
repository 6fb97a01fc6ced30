#include <doctest.h>

#include "oracles.hpp"
#include "orglab/numeral.hpp"

#include <set>

using namespace orglab;

TEST_CASE("decode") {
    CHECK(decode(OrgState::parse("MCZ")) == 42);
    CHECK(decode(OrgState::parse("")) == 0);
    CHECK(decode(OrgState::parse("CZCM")) == 64);
    CHECK(decode(OrgState::parse("ZZZM")) == 4);
}

TEST_CASE("decode agrees with explicit place values past the machine-word path") {
    std::mt19937_64 rng(7);
    for (std::size_t len : {38u, 39u, 40u, 41u, 80u, 200u}) {
        for (int i = 0; i < 50; ++i) {
            auto s = oracle::random_state(rng, len);
            REQUIRE(decode(s) == oracle::place_value(s.to_string()));
        }
    }
    OrgState all_m(std::vector<EmployeeState>(45, EmployeeState::Motivated));
    CHECK(decode(all_m) == oracle::place_value(std::string(45, 'M')));
}

TEST_CASE("encode") {
    CHECK(encode(42) == OrgState::parse("MCZ"));
    CHECK(encode(0).empty());
    CHECK(encode(64) == OrgState::parse("CZCM"));
    CHECK(encode(2) == OrgState::parse("C"));
    CHECK(encode(4) == OrgState::parse("M"));
    CHECK_THROWS_AS(encode(7), InvalidInput);
    CHECK_THROWS_AS(encode(-2), InvalidInput);
    try {
        encode(7);
    } catch (const InvalidInput &e) {
        CHECK(std::string(e.what()).find("even") != std::string::npos);
    }
}

TEST_CASE("round trip decode(encode(n)) == n for even n <= 2e5") {
    for (long n = 0; n <= 200000; n += 2) {
        auto s = encode(n);
        REQUIRE(decode(s) == n);
        REQUIRE((s.empty() || s[0] != EmployeeState::Zombie));
    }
}

TEST_CASE("round trip on random 256-bit even values") {
    std::mt19937_64 rng(256);
    for (int i = 0; i < 2000; ++i) {
        auto n = oracle::random_even(rng, 256);
        auto s = encode(n);
        REQUIRE(decode(s) == n);
        REQUIRE(oracle::place_value(s.to_string()) == n);
    }
}

TEST_CASE("encode(decode(s)) == normalize(s), evenness, uniqueness, magnitude bounds (length <= 8)") {
    std::set<mpz_class> seen;
    for (const auto &s : oracle::all_states_up_to(8)) {
        auto v = decode(s);
        REQUIRE(v % 2 == 0);
        REQUIRE(encode(v) == normalize(s));
        auto norm = normalize(s);
        if (norm == s) {
            REQUIRE(seen.insert(v).second);
            if (!s.empty()) {
                mpz_class p;
                mpz_ui_pow_ui(p.get_mpz_t(), 3, s.size() - 1);
                REQUIRE(v >= 2 * p);
                REQUIRE(v <= 4 * (3 * p - 1) / 2);
            }
        }
    }
    // Normalized states of length <= 8 are 1 + 2 * (3^8 - 1) / 2 values.
    CHECK(seen.size() == 6561);
}

TEST_CASE("decimal and digit-string text forms") {
    CHECK(parse_decimal("42") == 42);
    CHECK(parse_decimal("340282366920938463463374607431768211456") ==
          mpz_class("340282366920938463463374607431768211456"));
    CHECK_THROWS_AS(parse_decimal(""), InvalidInput);
    CHECK_THROWS_AS(parse_decimal("-4"), InvalidInput);
    CHECK_THROWS_AS(parse_decimal("4 "), InvalidInput);
    CHECK_THROWS_AS(parse_decimal("0x10"), InvalidInput);
    CHECK(to_decimal(mpz_class(1234)) == "1234");
    CHECK(to_digit_string(encode(42)) == "420");
    CHECK(parse_digit_string("420") == OrgState::parse("MCZ"));
    CHECK_THROWS_AS(parse_digit_string("421"), InvalidInput);
    CHECK_THROWS_AS(parse_digit_string("4a"), InvalidInput);
}
