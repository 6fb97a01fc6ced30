#include "orglab/verify.hpp"

#include "orglab/collatz.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <thread>

namespace orglab {

void validate(const RunConfig &config) {
    if (sgn(config.lo) < 0 || sgn(config.hi) < 0) throw InvalidInput("range bounds must be nonnegative");
    if (!is_even(config.lo) || !is_even(config.hi)) throw InvalidInput("range bounds must be even");
    if (config.lo > config.hi) throw InvalidInput("range lower bound exceeds upper bound");
    if (config.shard_size == 0) throw InvalidInput("shard size must be at least 1");
    NumValue count = (config.hi - config.lo) / 2 + 1;
    if (!mpz_fits_ulong_p(count.get_mpz_t())) throw InvalidInput("range holds too many values to enumerate");
}

VerifyRecord verify_one(const NumValue &n, std::uint64_t max_days) {
    VerifyRecord rec;
    rec.n = n;

    auto run = run_until_bankrupt(encode(n), max_days, true);
    auto traj = g_trajectory(n, max_days);

    rec.days = run.days;
    rec.g_steps = traj.step_count();
    rec.terminal_value = decode(run.final_state);
    rec.budget_exhausted = run.budget_exhausted || !traj.terminated;
    for (const auto &s : *run.trace) rec.max_org_len = std::max<std::uint64_t>(rec.max_org_len, s.size());

    bool same_path = run.trace->size() == traj.values.size();
    for (std::size_t i = 0; same_path && i < traj.values.size(); ++i) {
        same_path = decode((*run.trace)[i]) == traj.values[i];
    }
    bool terminal_ok = n == 0 ? rec.terminal_value == 0 : (rec.terminal_value == 2 || rec.terminal_value == 4);
    rec.agree = !rec.budget_exhausted && rec.days == rec.g_steps && same_path && terminal_ok;
    return rec;
}

std::vector<VerifyRecord> verify_range(const RunConfig &config) {
    validate(config);
    const std::uint64_t count = NumValue((config.hi - config.lo) / 2 + 1).get_ui();
    const std::uint64_t shard_count = (count + config.shard_size - 1) / config.shard_size;

    std::vector<std::vector<VerifyRecord>> shards(shard_count);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        try {
            for (std::uint64_t k = next++; k < shard_count; k = next++) {
                std::uint64_t begin = k * config.shard_size;
                std::uint64_t end = std::min(count, begin + config.shard_size);
                auto &out = shards[k];
                out.reserve(end - begin);
                NumValue n = config.lo + 2 * NumValue(begin);
                for (std::uint64_t i = begin; i < end; ++i, n += 2) out.push_back(verify_one(n, config.max_days));
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    unsigned threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, shard_count));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<VerifyRecord> records;
    records.reserve(count);
    for (auto &shard : shards) std::move(shard.begin(), shard.end(), std::back_inserter(records));
    return records;
}

Summary summarize(std::span<const VerifyRecord> records) {
    Summary s;
    for (const auto &r : records) {
        ++s.total;
        if (r.days > s.max_days || s.total == 1) {
            s.max_days = r.days;
            s.argmax_days_n = r.n;
        }
        s.max_org_len = std::max(s.max_org_len, r.max_org_len);
        if (r.budget_exhausted) {
            ++s.budget_exhaustions;
        } else if (!r.agree) {
            ++s.disagreements;
        }
    }
    return s;
}

std::string csv_row(const VerifyRecord &r) {
    return r.n.get_str() + ',' + std::to_string(r.days) + ',' + std::to_string(r.g_steps) + ',' +
           std::to_string(r.max_org_len) + ',' + r.terminal_value.get_str() + ',' + (r.agree ? "true" : "false") +
           ',' + (r.budget_exhausted ? "true" : "false");
}

std::string jsonl_row(const VerifyRecord &r) {
    nlohmann::ordered_json row;
    row["n"] = r.n.get_str();
    row["days"] = r.days;
    row["g_steps"] = r.g_steps;
    row["max_org_len"] = r.max_org_len;
    row["terminal_value"] = r.terminal_value.get_str();
    row["agree"] = r.agree;
    row["budget_exhausted"] = r.budget_exhausted;
    return row.dump();
}

void write_records(std::ostream &out, std::span<const VerifyRecord> records, OutputFormat format) {
    switch (format) {
    case OutputFormat::Csv:
        out << kCsvHeader << '\n';
        for (const auto &r : records) out << csv_row(r) << '\n';
        break;
    case OutputFormat::Jsonl:
        for (const auto &r : records) out << jsonl_row(r) << '\n';
        break;
    case OutputFormat::Human:
        out << std::setw(12) << "n" << std::setw(8) << "days" << std::setw(8) << "g_steps" << std::setw(8) << "len"
            << std::setw(10) << "terminal" << "  status\n";
        for (const auto &r : records) {
            out << std::setw(12) << r.n.get_str() << std::setw(8) << r.days << std::setw(8) << r.g_steps
                << std::setw(8) << r.max_org_len << std::setw(10) << r.terminal_value.get_str() << "  "
                << (r.budget_exhausted ? "EXHAUSTED" : r.agree ? "ok" : "DISAGREE") << '\n';
        }
        break;
    }
}

void write_summary(std::ostream &out, const Summary &s) {
    out << "records: " << s.total << '\n'
        << "max days: " << s.max_days << " (n = " << s.argmax_days_n.get_str() << ")\n"
        << "max organization length: " << s.max_org_len << '\n'
        << "disagreements: " << s.disagreements << '\n'
        << "budget exhaustions: " << s.budget_exhaustions << '\n';
}

} // namespace orglab
