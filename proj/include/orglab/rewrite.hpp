#pragma once

#include "orglab/organization.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orglab {

/// Letters of the rewriting alphabet. B and E mark the ends of a word, Z/C/M are
/// employees, G/H are signals travelling rightward.
enum class Symbol : char {
    Begin = 'B',
    End = 'E',
    Zombie = 'Z',
    Confused = 'C',
    Motivated = 'M',
    Nudge = 'G',
    Push = 'H',
};

inline constexpr std::string_view kAlphabet = "BEZCMGH";

/// A word over kAlphabet, one char per symbol.
using Word = std::string;

bool is_word(std::string_view text) noexcept;

class NoMatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct SrsRule {
    Word lhs;
    Word rhs;

    friend bool operator==(const SrsRule &, const SrsRule &) = default;
};

enum class SrsMode { SingleDay, Chained };

class Srs {
  public:
    Srs(SrsMode mode, std::vector<SrsRule> rules, std::vector<bool> day_start = {});

    SrsMode mode() const noexcept { return mode_; }
    const std::vector<SrsRule> &rules() const noexcept { return rules_; }
    /// True for the fused rules that open a new day.
    bool is_day_start(std::size_t rule_index) const noexcept {
        return rule_index < day_start_.size() && day_start_[rule_index];
    }
    /// Rules whose left-hand side begins with letter c, in rule order.
    const std::vector<std::size_t> &rules_starting_with(char c) const noexcept {
        return by_first_[static_cast<unsigned char>(c)];
    }

  private:
    SrsMode mode_;
    std::vector<SrsRule> rules_;
    std::vector<bool> day_start_;
    std::array<std::vector<std::size_t>, 256> by_first_;
};

/// SingleDay: the six employee rules plus exit and hiring at E (8 rules).
/// Chained: SingleDay plus six guarded day-start rules and B Z -> B (15 rules).
Srs generate_srs(SrsMode mode);

bool matches_at(std::string_view word, const SrsRule &rule, std::size_t position) noexcept;

/// Replaces the occurrence of rule.lhs at position. Throws NoMatch if absent.
Word apply_at(std::string_view word, const SrsRule &rule, std::size_t position);

enum class StrategyKind { Leftmost, Rightmost, RandomSeeded };

struct Strategy {
    StrategyKind kind = StrategyKind::Leftmost;
    std::uint64_t seed = 0;

    static Strategy leftmost() { return {StrategyKind::Leftmost, 0}; }
    static Strategy rightmost() { return {StrategyKind::Rightmost, 0}; }
    static Strategy random(std::uint64_t seed) { return {StrategyKind::RandomSeeded, seed}; }
};

enum class RewriteOutcome { NormalForm, FuelExhausted };

struct RewriteStep {
    std::size_t rule_index;
    std::size_t position;
    Word after;
};

struct RewriteRun {
    Word start;
    Word final_word;
    std::uint64_t steps = 0;
    RewriteOutcome outcome = RewriteOutcome::NormalForm;
    /// Applications per rule index.
    std::vector<std::uint64_t> rule_counts;
    /// Full step log, present only when tracing was requested.
    std::optional<std::vector<RewriteStep>> log;
};

inline constexpr std::uint64_t kDefaultFuel = 10'000'000;

RewriteRun normalize_word(const Srs &srs, std::string_view word, Strategy strategy = Strategy::leftmost(),
                          std::uint64_t fuel = kDefaultFuel, bool trace = false);

/// Number of day-start rule applications in a run.
std::uint64_t day_start_count(const Srs &srs, const RewriteRun &run);

/// B, the employee letters, E.
Word word_of_org(const OrgState &org);
/// Inverse of word_of_org; throws InvalidInput for in-flight signals or bad markers.
OrgState org_of_word(std::string_view word);

std::string export_tpdb_srs(const Srs &srs);
std::string export_tpdb_trs(const Srs &srs);

} // namespace orglab
