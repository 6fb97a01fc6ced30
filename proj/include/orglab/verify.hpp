#pragma once

#include "orglab/numeral.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace orglab {

/// Outcome of running one organization to bankruptcy next to its g-trajectory.
struct VerifyRecord {
    NumValue n;
    std::uint64_t days = 0;
    std::uint64_t g_steps = 0;
    std::uint64_t max_org_len = 0;
    NumValue terminal_value;
    /// days == g_steps, every day's decoded state equals the trajectory value,
    /// and the terminal value is 2 or 4 (0 when n == 0).
    bool agree = false;
    bool budget_exhausted = false;
};

enum class OutputFormat { Csv, Jsonl, Human };

inline constexpr std::uint64_t kDefaultShardSize = 4096;

struct RunConfig {
    NumValue lo;
    NumValue hi;
    std::uint64_t max_days = kDefaultMaxDays;
    std::uint64_t shard_size = kDefaultShardSize;
    OutputFormat format = OutputFormat::Csv;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/// Throws InvalidInput unless lo <= hi, both even and nonnegative, shard_size >= 1.
void validate(const RunConfig &config);

VerifyRecord verify_one(const NumValue &n, std::uint64_t max_days = kDefaultMaxDays);

/// One record per even n in [lo, hi], ordered by n. Shards run concurrently.
std::vector<VerifyRecord> verify_range(const RunConfig &config);

struct Summary {
    std::uint64_t total = 0;
    std::uint64_t max_days = 0;
    NumValue argmax_days_n;
    std::uint64_t max_org_len = 0;
    std::uint64_t disagreements = 0;
    std::uint64_t budget_exhaustions = 0;

    bool ok() const noexcept { return disagreements == 0 && budget_exhaustions == 0; }
};

/// Exhausted records count as exhaustions only, never as disagreements.
Summary summarize(std::span<const VerifyRecord> records);

inline constexpr const char *kCsvHeader = "n,days,g_steps,max_org_len,terminal_value,agree,budget_exhausted";

std::string csv_row(const VerifyRecord &r);
std::string jsonl_row(const VerifyRecord &r);
void write_records(std::ostream &out, std::span<const VerifyRecord> records, OutputFormat format);
void write_summary(std::ostream &out, const Summary &s);

} // namespace orglab
