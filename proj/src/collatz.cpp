#include "orglab/collatz.hpp"

#include <json.hpp>

namespace orglab {

NumValue collatz_f(const NumValue &n) {
    if (sgn(n) <= 0) throw InvalidInput("collatz_f requires n >= 1");
    if (is_even(n)) {
        NumValue half;
        mpz_fdiv_q_2exp(half.get_mpz_t(), n.get_mpz_t(), 1);
        return half;
    }
    return 3 * n + 1;
}

NumValue collatz_g(const NumValue &n) {
    if (sgn(n) < 0) throw InvalidInput("collatz_g requires n >= 0");
    if (!is_even(n)) throw InvalidInput("collatz_g requires even n; got " + n.get_str());
    NumValue half;
    mpz_fdiv_q_2exp(half.get_mpz_t(), n.get_mpz_t(), 1);
    if (is_even(half)) return half;
    return 3 * half + 1;
}

bool in_stop_set(const NumValue &n) { return n == 0 || n == 2 || n == 4; }

Trajectory g_trajectory(const NumValue &n, std::uint64_t max_steps) {
    if (!is_even(n) || sgn(n) < 0) throw InvalidInput("g_trajectory requires even n >= 0; got " + n.get_str());
    Trajectory t;
    t.start = n;
    t.values.push_back(n);
    std::uint64_t steps = 0;
    while (!in_stop_set(t.values.back())) {
        if (steps == max_steps) return t;
        t.values.push_back(collatz_g(t.values.back()));
        ++steps;
    }
    t.terminated = true;
    return t;
}

bool check_bisimulation(const NumValue &n) { return decode(day_step(encode(n))) == collatz_g(n); }

bool f_g_consistency(const NumValue &n) {
    if (n < 2 || !is_even(n)) throw InvalidInput("f_g_consistency requires even n >= 2");
    NumValue f1 = collatz_f(n);
    NumValue g1 = collatz_g(n);
    if (is_even(f1)) return g1 == f1;
    return g1 == collatz_f(f1);
}

std::string trajectory_json(const Trajectory &t) {
    auto values = nlohmann::json::array();
    for (const auto &v : t.values) values.push_back(v.get_str());
    return values.dump();
}

} // namespace orglab
