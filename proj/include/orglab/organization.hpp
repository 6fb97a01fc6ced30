#pragma once

#include "orglab/employee.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orglab {

/// Employees ordered from the top of the hierarchy down. Index 0 is the head
/// of the organization and the most significant base-3 digit.
class OrgState {
  public:
    OrgState() = default;
    OrgState(std::initializer_list<EmployeeState> employees) : employees_(employees) {}
    explicit OrgState(std::vector<EmployeeState> employees) : employees_(std::move(employees)) {}

    /// Parses a string over {Z, C, M}; the empty string is the empty organization.
    static OrgState parse(std::string_view letters);

    const std::vector<EmployeeState> &employees() const noexcept { return employees_; }
    std::vector<EmployeeState> &employees() noexcept { return employees_; }

    std::size_t size() const noexcept { return employees_.size(); }
    bool empty() const noexcept { return employees_.empty(); }
    EmployeeState operator[](std::size_t i) const { return employees_[i]; }

    std::string to_string() const;

    friend bool operator==(const OrgState &, const OrgState &) = default;

  private:
    std::vector<EmployeeState> employees_;
};

struct EmployeeEvent {
    Signal input;
    EmployeeState next;
    Signal output;

    friend bool operator==(const EmployeeEvent &, const EmployeeEvent &) = default;
};

/// One day's propagation in full detail: events[k] is what employee k received,
/// became, and passed on.
struct DayTrace {
    OrgState start;
    std::vector<EmployeeEvent> events;
    bool hired = false;
    OrgState end;
};

/// One day: the head gets a GentleNudge, each employee reacts and passes a signal
/// down. A HardPush leaving the last employee hires a Motivated junior, who does
/// not process that push.
OrgState day_step(const OrgState &org);
DayTrace day_step_traced(const OrgState &org);

/// Every employee except possibly the last is a Zombie. Empty and
/// single-employee organizations are bankrupt.
bool is_bankrupt(const OrgState &org) noexcept;

/// Drops leading Zombies. Numeric value is unchanged.
OrgState normalize(const OrgState &org);

inline constexpr std::uint64_t kDefaultMaxDays = 100000;

struct BankruptcyRun {
    std::uint64_t days = 0;
    OrgState final_state;
    /// True when max_days elapsed without reaching a bankrupt state; final_state
    /// is then the last state reached.
    bool budget_exhausted = false;
    /// States for day 0..days, present only when requested.
    std::optional<std::vector<OrgState>> trace;
};

/// Iterates day_step until the first bankrupt state. An organization that is
/// already bankrupt takes 0 days.
BankruptcyRun run_until_bankrupt(const OrgState &org, std::uint64_t max_days = kDefaultMaxDays,
                                 bool keep_trace = false);

} // namespace orglab
