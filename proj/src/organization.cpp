#include "orglab/organization.hpp"

#include <algorithm>

namespace orglab {

OrgState OrgState::parse(std::string_view letters) {
    std::vector<EmployeeState> employees;
    employees.reserve(letters.size());
    for (char c : letters) {
        auto state = state_of_letter(c);
        if (!state) {
            throw InvalidInput("organization state must use only the letters Z, C, M; got '" +
                               std::string(letters) + "'");
        }
        employees.push_back(*state);
    }
    return OrgState(std::move(employees));
}

std::string OrgState::to_string() const {
    std::string out;
    out.reserve(employees_.size());
    for (auto e : employees_) out.push_back(letter_of(e));
    return out;
}

OrgState day_step(const OrgState &org) {
    std::vector<EmployeeState> next;
    next.reserve(org.size() + 1);
    Signal signal = Signal::GentleNudge;
    for (auto e : org.employees()) {
        auto t = step_employee(e, signal);
        next.push_back(t.next);
        signal = t.output;
    }
    if (signal == Signal::HardPush) next.push_back(EmployeeState::Motivated);
    return OrgState(std::move(next));
}

DayTrace day_step_traced(const OrgState &org) {
    DayTrace trace;
    trace.start = org;
    trace.events.reserve(org.size());
    auto &end = trace.end.employees();
    end.reserve(org.size() + 1);

    Signal signal = Signal::GentleNudge;
    for (auto e : org.employees()) {
        auto t = step_employee(e, signal);
        trace.events.push_back({signal, t.next, t.output});
        end.push_back(t.next);
        signal = t.output;
    }
    if (signal == Signal::HardPush) {
        trace.hired = true;
        end.push_back(EmployeeState::Motivated);
    }
    return trace;
}

bool is_bankrupt(const OrgState &org) noexcept {
    const auto &e = org.employees();
    if (e.size() <= 1) return true;
    return std::all_of(e.begin(), e.end() - 1,
                       [](EmployeeState s) { return s == EmployeeState::Zombie; });
}

OrgState normalize(const OrgState &org) {
    const auto &e = org.employees();
    auto first = std::find_if(e.begin(), e.end(),
                              [](EmployeeState s) { return s != EmployeeState::Zombie; });
    return OrgState(std::vector<EmployeeState>(first, e.end()));
}

BankruptcyRun run_until_bankrupt(const OrgState &org, std::uint64_t max_days, bool keep_trace) {
    BankruptcyRun run;
    run.final_state = org;
    if (keep_trace) run.trace.emplace().push_back(org);

    while (!is_bankrupt(run.final_state)) {
        if (run.days == max_days) {
            run.budget_exhausted = true;
            return run;
        }
        run.final_state = day_step(run.final_state);
        ++run.days;
        if (run.trace) run.trace->push_back(run.final_state);
    }
    return run;
}

} // namespace orglab
