#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace orglab {

/// Raised for inputs outside an operation's domain (odd numerals, bad letters, bad digits).
class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// State of mind of one employee. Ordered Zombie < Confused < Motivated; the
/// enumerator values are the base-3 digits the state stands for.
enum class EmployeeState : std::uint8_t { Zombie = 0, Confused = 2, Motivated = 4 };

enum class Signal : std::uint8_t { GentleNudge, HardPush };

struct Transition {
    EmployeeState next;
    Signal output;

    friend constexpr bool operator==(const Transition &, const Transition &) = default;
};

inline constexpr std::array<EmployeeState, 3> kAllStates{
    EmployeeState::Zombie, EmployeeState::Confused, EmployeeState::Motivated};
inline constexpr std::array<Signal, 2> kAllSignals{Signal::GentleNudge, Signal::HardPush};

namespace detail {
constexpr std::size_t state_index(EmployeeState s) noexcept {
    return static_cast<std::size_t>(s) / 2;
}

// Rows: Zombie, Confused, Motivated. Columns: GentleNudge, HardPush.
inline constexpr std::array<std::array<Transition, 2>, 3> kTransitions{{
    {{{EmployeeState::Zombie, Signal::GentleNudge}, {EmployeeState::Confused, Signal::HardPush}}},
    {{{EmployeeState::Zombie, Signal::HardPush}, {EmployeeState::Motivated, Signal::GentleNudge}}},
    {{{EmployeeState::Confused, Signal::GentleNudge}, {EmployeeState::Motivated, Signal::HardPush}}},
}};
} // namespace detail

/// One employee reacting to the signal from their supervisor.
constexpr Transition step_employee(EmployeeState state, Signal input) noexcept {
    return detail::kTransitions[detail::state_index(state)][input == Signal::HardPush ? 1 : 0];
}

constexpr int digit_of(EmployeeState state) noexcept { return static_cast<int>(state); }

/// Inverse of digit_of; throws InvalidInput unless d is 0, 2 or 4.
EmployeeState state_of_digit(int d);

constexpr char letter_of(EmployeeState s) noexcept {
    switch (s) {
    case EmployeeState::Zombie:
        return 'Z';
    case EmployeeState::Confused:
        return 'C';
    case EmployeeState::Motivated:
        return 'M';
    }
    return '?';
}

constexpr char letter_of(Signal s) noexcept { return s == Signal::GentleNudge ? 'G' : 'H'; }

constexpr std::optional<EmployeeState> state_of_letter(char c) noexcept {
    switch (c) {
    case 'Z':
        return EmployeeState::Zombie;
    case 'C':
        return EmployeeState::Confused;
    case 'M':
        return EmployeeState::Motivated;
    default:
        return std::nullopt;
    }
}

constexpr std::optional<Signal> signal_of_letter(char c) noexcept {
    if (c == 'G') return Signal::GentleNudge;
    if (c == 'H') return Signal::HardPush;
    return std::nullopt;
}

} // namespace orglab
