#include "orglab/cli.hpp"

#include "orglab/collatz.hpp"
#include "orglab/numeral.hpp"
#include "orglab/organization.hpp"
#include "orglab/rewrite.hpp"
#include "orglab/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

namespace orglab::cli {
namespace {

std::string show(const OrgState &org) { return org.empty() ? "-" : org.to_string(); }

std::string show_day(std::uint64_t day, const OrgState &org) {
    return "day " + std::to_string(day) + ": " + show(org) + " (" + decode(org).get_str() + ")";
}

// Writes to --out when given, otherwise to the console stream.
template <typename Fn>
void with_output(const std::string &path, std::ostream &console, Fn &&fn) {
    if (path.empty()) {
        fn(console);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InvalidInput("cannot open output file '" + path + "'");
    fn(file);
    if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

NumValue parse_even(const std::string &text) {
    NumValue n = parse_decimal(text);
    if (!is_even(n)) throw InvalidInput("n must be even; got " + text);
    return n;
}

const std::map<std::string, SrsMode> kModes{{"single-day", SrsMode::SingleDay}, {"chained", SrsMode::Chained}};
const std::map<std::string, OutputFormat> kFormats{
    {"csv", OutputFormat::Csv}, {"jsonl", OutputFormat::Jsonl}, {"human", OutputFormat::Human}};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Organization dynamics, the even Collatz map, and their rewriting system"};
    app.name("orglab");
    app.require_subcommand(1);
    int status = kExitOk;
    std::function<void()> action;

    // encode / decode
    auto *encode_cmd = app.add_subcommand("encode", "Even decimal number to Z/C/M organization state");
    std::string encode_n;
    bool encode_digits = false;
    encode_cmd->add_option("n", encode_n, "Even nonnegative decimal number")->required();
    encode_cmd->add_flag("--digits", encode_digits, "Print the 0/2/4 digit string instead of letters");
    encode_cmd->callback([&] {
        action = [&] {
            auto org = encode(parse_decimal(encode_n));
            out << (encode_digits ? to_digit_string(org) : org.to_string()) << '\n';
        };
    });

    auto *decode_cmd = app.add_subcommand("decode", "Z/C/M organization state to decimal number");
    std::string decode_state;
    bool decode_digits = false;
    decode_cmd->add_option("state", decode_state, "State letters, head first")->required();
    decode_cmd->add_flag("--digits", decode_digits, "Read a 0/2/4 digit string instead of letters");
    decode_cmd->callback([&] {
        action = [&] {
            auto org = decode_digits ? parse_digit_string(decode_state) : OrgState::parse(decode_state);
            out << to_decimal(decode(org)) << '\n';
        };
    });

    // simulate
    auto *simulate_cmd = app.add_subcommand("simulate", "Run an organization until it goes bankrupt");
    std::string sim_n;
    std::string sim_state;
    std::uint64_t sim_max_days = kDefaultMaxDays;
    bool sim_trace = false;
    auto *sim_n_opt = simulate_cmd->add_option("--n", sim_n, "Start from encode(n)");
    auto *sim_state_opt = simulate_cmd->add_option("--state", sim_state, "Start from Z/C/M letters");
    sim_n_opt->excludes(sim_state_opt);
    simulate_cmd->add_option("--max-days", sim_max_days, "Day budget")->capture_default_str();
    simulate_cmd->add_flag("--trace", sim_trace, "Print every day with its decoded value");
    simulate_cmd->callback([&] {
        if (sim_n_opt->count() + sim_state_opt->count() != 1) {
            throw CLI::ValidationError("simulate", "exactly one of --n or --state is required");
        }
        action = [&] {
            OrgState start = sim_n_opt->count() != 0 ? encode(parse_even(sim_n)) : OrgState::parse(sim_state);
            auto run = run_until_bankrupt(start, sim_max_days, sim_trace);
            if (run.trace) {
                for (std::uint64_t d = 0; d < run.trace->size(); ++d) out << show_day(d, (*run.trace)[d]) << '\n';
            }
            if (run.budget_exhausted) {
                out << "budget exhausted after " << run.days << " days: " << show(run.final_state) << " ("
                    << decode(run.final_state).get_str() << ")\n";
                status = kExitFailure;
            } else {
                out << "bankrupt on day " << run.days << ": " << show(run.final_state) << " ("
                    << decode(run.final_state).get_str() << ")\n";
            }
        };
    });

    // gtraj
    auto *gtraj_cmd = app.add_subcommand("gtraj", "Print the trajectory of the even map g");
    std::string gtraj_n;
    std::uint64_t gtraj_max_steps = kDefaultMaxDays;
    bool gtraj_json = false;
    gtraj_cmd->add_option("--n", gtraj_n, "Even start value")->required();
    gtraj_cmd->add_option("--max-steps", gtraj_max_steps, "Step budget")->capture_default_str();
    gtraj_cmd->add_flag("--json", gtraj_json, "Print a JSON array of decimal strings");
    gtraj_cmd->callback([&] {
        action = [&] {
            auto t = g_trajectory(parse_even(gtraj_n), gtraj_max_steps);
            if (gtraj_json) {
                out << trajectory_json(t) << '\n';
            } else {
                for (const auto &v : t.values) out << v.get_str() << '\n';
            }
            if (!t.terminated) {
                err << "budget exhausted after " << t.step_count() << " steps\n";
                status = kExitFailure;
            }
        };
    });

    // verify
    auto *verify_cmd = app.add_subcommand("verify", "Check organizations against g-trajectories over a range");
    std::string verify_lo;
    std::string verify_hi;
    std::string verify_out;
    RunConfig config;
    verify_cmd->add_option("--lo", verify_lo, "Even lower bound (inclusive)")->required();
    verify_cmd->add_option("--hi", verify_hi, "Even upper bound (inclusive)")->required();
    verify_cmd->add_option("--max-days", config.max_days, "Day budget per n")->capture_default_str();
    verify_cmd->add_option("--shard-size", config.shard_size, "Values per shard")->capture_default_str();
    verify_cmd->add_option("--format", config.format, "csv, jsonl or human")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    verify_cmd->add_option("--threads", config.threads, "Worker threads (0 = all cores)");
    verify_cmd->add_option("--out", verify_out, "Write records to FILE");
    verify_cmd->callback([&] {
        config.lo = parse_even(verify_lo);
        config.hi = parse_even(verify_hi);
        validate(config);
        action = [&] {
            auto records = verify_range(config);
            with_output(verify_out, out, [&](std::ostream &os) { write_records(os, records, config.format); });
            auto summary = summarize(records);
            write_summary(verify_out.empty() ? err : out, summary);
            if (!summary.ok()) status = kExitFailure;
        };
    });

    // emit-trs
    auto *emit_cmd = app.add_subcommand("emit-trs", "Export the rewriting system for termination provers");
    SrsMode emit_mode = SrsMode::SingleDay;
    std::string emit_format;
    std::string emit_out;
    emit_cmd->add_option("--mode", emit_mode, "single-day or chained")
        ->required()
        ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
    emit_cmd->add_option("--format", emit_format, "srs or trs")->required()->check(CLI::IsMember({"srs", "trs"}));
    emit_cmd->add_option("--out", emit_out, "Write to FILE");
    emit_cmd->callback([&] {
        action = [&] {
            auto srs = generate_srs(emit_mode);
            auto text = emit_format == "srs" ? export_tpdb_srs(srs) : export_tpdb_trs(srs);
            with_output(emit_out, out, [&](std::ostream &os) { os << text << '\n'; });
        };
    });

    // run-srs
    auto *srs_cmd = app.add_subcommand("run-srs", "Normalize encode(n) with the rewriting engine");
    SrsMode srs_mode = SrsMode::Chained;
    std::string srs_n;
    std::string srs_strategy = "leftmost";
    std::uint64_t srs_seed = 0;
    std::uint64_t srs_fuel = kDefaultFuel;
    bool srs_trace = false;
    srs_cmd->add_option("--mode", srs_mode, "single-day or chained")
        ->required()
        ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
    srs_cmd->add_option("--n", srs_n, "Even start value")->required();
    srs_cmd->add_option("--strategy", srs_strategy, "leftmost, rightmost or random")
        ->check(CLI::IsMember({"leftmost", "rightmost", "random"}))
        ->capture_default_str();
    srs_cmd->add_option("--seed", srs_seed, "Seed for the random strategy")->capture_default_str();
    srs_cmd->add_option("--fuel", srs_fuel, "Step budget")->capture_default_str();
    srs_cmd->add_flag("--trace", srs_trace, "Print every rewrite step");
    srs_cmd->callback([&] {
        action = [&] {
            auto org = encode(parse_even(srs_n));
            Word start = srs_mode == SrsMode::SingleDay ? "BG" + org.to_string() + "E" : word_of_org(org);
            Strategy strategy = srs_strategy == "leftmost"    ? Strategy::leftmost()
                                : srs_strategy == "rightmost" ? Strategy::rightmost()
                                                              : Strategy::random(srs_seed);
            auto srs = generate_srs(srs_mode);
            auto result = normalize_word(srs, start, strategy, srs_fuel, srs_trace);
            if (result.log) {
                for (std::size_t i = 0; i < result.log->size(); ++i) {
                    const auto &s = (*result.log)[i];
                    out << i + 1 << ", " << s.rule_index << ", " << s.position << ", " << s.after << '\n';
                }
            }
            out << "start: " << result.start << '\n';
            if (result.outcome == RewriteOutcome::FuelExhausted) {
                out << "fuel exhausted: " << result.final_word << '\n';
                status = kExitFailure;
            } else {
                out << "normal form: " << result.final_word << '\n';
            }
            out << "steps: " << result.steps << '\n';
            if (srs_mode == SrsMode::Chained) out << "day starts: " << day_start_count(srs, result) << '\n';
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidInput &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (action) action();
    } catch (const InvalidInput &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return status;
}

} // namespace orglab::cli
