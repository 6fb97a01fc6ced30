#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orglab/collatz.hpp"
#include "orglab/numeral.hpp"
#include "orglab/organization.hpp"
#include "orglab/rewrite.hpp"
#include "orglab/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

// Python int <-> mpz_class through decimal text.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        return value.set_str(py::str(src).cast<std::string>(), 10) == 0;
    }

    static handle cast(const mpz_class &v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};
} // namespace pybind11::detail

namespace {

using namespace orglab;

EmployeeState state_arg(const std::string &letter) {
    if (letter.size() == 1) {
        if (auto s = state_of_letter(letter[0])) return *s;
    }
    throw InvalidInput("employee state must be one of 'Z', 'C', 'M'; got '" + letter + "'");
}

Signal signal_arg(const std::string &letter) {
    if (letter.size() == 1) {
        if (auto s = signal_of_letter(letter[0])) return *s;
    }
    throw InvalidInput("signal must be 'G' or 'H'; got '" + letter + "'");
}

SrsMode mode_arg(const std::string &mode) {
    if (mode == "single-day") return SrsMode::SingleDay;
    if (mode == "chained") return SrsMode::Chained;
    throw InvalidInput("mode must be 'single-day' or 'chained'; got '" + mode + "'");
}

Strategy strategy_arg(const std::string &name, std::uint64_t seed) {
    if (name == "leftmost") return Strategy::leftmost();
    if (name == "rightmost") return Strategy::rightmost();
    if (name == "random") return Strategy::random(seed);
    throw InvalidInput("strategy must be 'leftmost', 'rightmost' or 'random'; got '" + name + "'");
}

py::dict record_dict(const VerifyRecord &r) {
    return py::dict("n"_a = r.n, "days"_a = r.days, "g_steps"_a = r.g_steps, "max_org_len"_a = r.max_org_len,
                    "terminal_value"_a = r.terminal_value, "agree"_a = r.agree,
                    "budget_exhausted"_a = r.budget_exhausted);
}

} // namespace

PYBIND11_MODULE(_orglab, m) {
    m.doc() = "Organization dynamics, the even Collatz map, and their rewriting system";
    m.attr("MAX_DAYS_DEFAULT") = kDefaultMaxDays;
    m.attr("FUEL_DEFAULT") = kDefaultFuel;

    m.def(
        "step_employee",
        [](const std::string &state, const std::string &signal) {
            auto t = step_employee(state_arg(state), signal_arg(signal));
            return py::make_tuple(std::string(1, letter_of(t.next)), std::string(1, letter_of(t.output)));
        },
        "state"_a, "signal"_a);
    m.def("digit_of", [](const std::string &state) { return digit_of(state_arg(state)); }, "state"_a);
    m.def("state_of_digit", [](int d) { return std::string(1, letter_of(state_of_digit(d))); }, "digit"_a);

    m.def("day_step", [](const std::string &s) { return day_step(OrgState::parse(s)).to_string(); }, "state"_a);
    m.def(
        "day_step_traced",
        [](const std::string &s) {
            auto t = day_step_traced(OrgState::parse(s));
            py::list events;
            for (const auto &e : t.events) {
                events.append(py::make_tuple(std::string(1, letter_of(e.input)), std::string(1, letter_of(e.next)),
                                             std::string(1, letter_of(e.output))));
            }
            return py::dict("start"_a = t.start.to_string(), "events"_a = events, "hired"_a = t.hired,
                            "end"_a = t.end.to_string());
        },
        "state"_a);
    m.def("is_bankrupt", [](const std::string &s) { return is_bankrupt(OrgState::parse(s)); }, "state"_a);
    m.def("normalize", [](const std::string &s) { return normalize(OrgState::parse(s)).to_string(); }, "state"_a);
    m.def(
        "run_until_bankrupt",
        [](const std::string &s, std::uint64_t max_days, bool trace) {
            BankruptcyRun run;
            {
                py::gil_scoped_release release;
                run = run_until_bankrupt(OrgState::parse(s), max_days, trace);
            }
            py::object states = py::none();
            if (run.trace) {
                py::list l;
                for (const auto &st : *run.trace) l.append(st.to_string());
                states = l;
            }
            return py::dict("days"_a = run.days, "final"_a = run.final_state.to_string(),
                            "budget_exhausted"_a = run.budget_exhausted, "trace"_a = states);
        },
        "state"_a, "max_days"_a = kDefaultMaxDays, "trace"_a = false);

    m.def("decode", [](const std::string &s) { return decode(OrgState::parse(s)); }, "state"_a);
    m.def("encode", [](const mpz_class &n) { return encode(n).to_string(); }, "n"_a);

    m.def("collatz_f", &collatz_f, "n"_a);
    m.def("collatz_g", &collatz_g, "n"_a);
    m.def(
        "g_trajectory",
        [](const mpz_class &n, std::uint64_t max_steps) {
            auto t = g_trajectory(n, max_steps);
            return py::dict("values"_a = t.values, "terminated"_a = t.terminated);
        },
        "n"_a, "max_steps"_a = kDefaultMaxDays);
    m.def("check_bisimulation", &check_bisimulation, "n"_a);
    m.def("f_g_consistency", &f_g_consistency, "n"_a);

    m.def(
        "generate_srs",
        [](const std::string &mode) {
            std::vector<std::pair<std::string, std::string>> rules;
            auto srs = generate_srs(mode_arg(mode));
            for (const auto &r : srs.rules()) rules.emplace_back(r.lhs, r.rhs);
            return rules;
        },
        "mode"_a);
    m.def(
        "normalize_word",
        [](const std::string &mode, const std::string &word, const std::string &strategy, std::uint64_t seed,
           std::uint64_t fuel) {
            auto srs = generate_srs(mode_arg(mode));
            RewriteRun run;
            {
                py::gil_scoped_release release;
                run = normalize_word(srs, word, strategy_arg(strategy, seed), fuel);
            }
            return py::dict("final"_a = run.final_word, "steps"_a = run.steps,
                            "normal_form"_a = run.outcome == RewriteOutcome::NormalForm,
                            "day_starts"_a = day_start_count(srs, run));
        },
        "mode"_a, "word"_a, "strategy"_a = "leftmost", "seed"_a = 0, "fuel"_a = kDefaultFuel);
    m.def(
        "export_tpdb_srs", [](const std::string &mode) { return export_tpdb_srs(generate_srs(mode_arg(mode))); },
        "mode"_a);
    m.def(
        "export_tpdb_trs", [](const std::string &mode) { return export_tpdb_trs(generate_srs(mode_arg(mode))); },
        "mode"_a);

    m.def(
        "verify_range",
        [](const mpz_class &lo, const mpz_class &hi, std::uint64_t max_days, std::uint64_t shard_size) {
            RunConfig config;
            config.lo = lo;
            config.hi = hi;
            config.max_days = max_days;
            config.shard_size = shard_size;
            std::vector<VerifyRecord> records;
            {
                py::gil_scoped_release release;
                records = verify_range(config);
            }
            py::list out;
            for (const auto &r : records) out.append(record_dict(r));
            return out;
        },
        "lo"_a, "hi"_a, "max_days"_a = kDefaultMaxDays, "shard_size"_a = kDefaultShardSize);
    m.def(
        "summarize",
        [](const py::list &rows) {
            std::vector<VerifyRecord> records;
            for (const auto &item : rows) {
                auto row = item.cast<py::dict>();
                VerifyRecord r;
                r.n = row["n"].cast<mpz_class>();
                r.days = row["days"].cast<std::uint64_t>();
                r.g_steps = row["g_steps"].cast<std::uint64_t>();
                r.max_org_len = row["max_org_len"].cast<std::uint64_t>();
                r.terminal_value = row["terminal_value"].cast<mpz_class>();
                r.agree = row["agree"].cast<bool>();
                r.budget_exhausted = row["budget_exhausted"].cast<bool>();
                records.push_back(std::move(r));
            }
            auto s = summarize(records);
            return py::dict("total"_a = s.total, "max_days"_a = s.max_days, "argmax_days_n"_a = s.argmax_days_n,
                            "max_org_len"_a = s.max_org_len, "disagreements"_a = s.disagreements,
                            "budget_exhaustions"_a = s.budget_exhaustions);
        },
        "records"_a);
}
