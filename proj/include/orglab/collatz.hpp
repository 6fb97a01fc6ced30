#pragma once

#include "orglab/numeral.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orglab {

/// The Collatz map: n/2 for even n, 3n+1 for odd n. Throws InvalidInput for n = 0.
NumValue collatz_f(const NumValue &n);

/// Even-to-even map: h = n/2; h if h is even, else 3h+1. g(0) = 0. Throws
/// InvalidInput for odd n.
NumValue collatz_g(const NumValue &n);

/// True when n is 0, 2 or 4, the decoded values of bankrupt organizations.
bool in_stop_set(const NumValue &n);

struct Trajectory {
    NumValue start;
    /// values.front() == start; consecutive entries are related by collatz_g.
    std::vector<NumValue> values;
    /// False when max_steps elapsed before reaching the stop set.
    bool terminated = false;

    std::uint64_t step_count() const noexcept { return values.empty() ? 0 : values.size() - 1; }
};

Trajectory g_trajectory(const NumValue &n, std::uint64_t max_steps = kDefaultMaxDays);

/// decode(day_step(encode(n))) == collatz_g(n).
bool check_bisimulation(const NumValue &n);

/// g(n) == f(n) when f(n) is even, g(n) == f(f(n)) when f(n) is odd. Requires n >= 2 even.
bool f_g_consistency(const NumValue &n);

/// JSON array of decimal strings.
std::string trajectory_json(const Trajectory &t);

} // namespace orglab
