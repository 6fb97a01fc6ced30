#include "orglab/rewrite.hpp"

#include <algorithm>
#include <random>

namespace orglab {

bool is_word(std::string_view text) noexcept {
    return std::all_of(text.begin(), text.end(),
                       [](char c) { return kAlphabet.find(c) != std::string_view::npos; });
}

Srs::Srs(SrsMode mode, std::vector<SrsRule> rules, std::vector<bool> day_start)
    : mode_(mode), rules_(std::move(rules)), day_start_(std::move(day_start)) {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const auto &r = rules_[i];
        if (r.lhs.empty()) throw InvalidInput("rule " + std::to_string(i) + " has an empty left-hand side");
        if (r.lhs == r.rhs) throw InvalidInput("rule " + std::to_string(i) + " rewrites a word to itself");
        if (!is_word(r.lhs) || !is_word(r.rhs)) throw InvalidInput("rule " + std::to_string(i) + " uses letters outside BEZCMGH");
        by_first_[static_cast<unsigned char>(r.lhs.front())].push_back(i);
    }
    day_start_.resize(rules_.size(), false);
}

Srs generate_srs(SrsMode mode) {
    std::vector<SrsRule> rules{
        {"GZ", "ZG"}, {"HZ", "CH"}, {"GC", "ZH"}, {"HC", "MG"}, {"GM", "CG"}, {"HM", "MH"},
        {"GE", "E"},  {"HE", "ME"},
    };
    std::vector<bool> day_start(rules.size(), false);
    if (mode == SrsMode::Chained) {
        // Head employee's reaction to the morning nudge, fused with the nudge itself.
        // The guard letter keeps single-employee (bankrupt) words in normal form.
        for (auto [head, reacted] : {std::pair{'C', std::string("ZH")}, std::pair{'M', std::string("CG")}}) {
            for (char guard : {'Z', 'C', 'M'}) {
                rules.push_back({Word{'B', head, guard}, "B" + reacted + guard});
                day_start.push_back(true);
            }
        }
        rules.push_back({"BZ", "B"});
        day_start.push_back(false);
    }
    return Srs(mode, std::move(rules), std::move(day_start));
}

bool matches_at(std::string_view word, const SrsRule &rule, std::size_t position) noexcept {
    return position <= word.size() && word.substr(position).starts_with(rule.lhs);
}

Word apply_at(std::string_view word, const SrsRule &rule, std::size_t position) {
    if (!matches_at(word, rule, position)) {
        throw NoMatch("'" + rule.lhs + "' does not occur in '" + std::string(word) + "' at position " +
                      std::to_string(position));
    }
    Word out(word.substr(0, position));
    out += rule.rhs;
    out += word.substr(position + rule.lhs.size());
    return out;
}

namespace {

struct Redex {
    std::size_t rule_index;
    std::size_t position;
};

std::optional<Redex> redex_at(const Srs &srs, std::string_view word, std::size_t p) {
    for (auto i : srs.rules_starting_with(word[p])) {
        if (matches_at(word, srs.rules()[i], p)) return Redex{i, p};
    }
    return std::nullopt;
}

class RedexPicker {
  public:
    explicit RedexPicker(Strategy strategy) : strategy_(strategy), rng_(strategy.seed) {}

    std::optional<Redex> pick(const Srs &srs, std::string_view word) {
        switch (strategy_.kind) {
        case StrategyKind::Leftmost:
            for (std::size_t p = 0; p < word.size(); ++p) {
                if (auto r = redex_at(srs, word, p)) return r;
            }
            return std::nullopt;
        case StrategyKind::Rightmost:
            for (std::size_t p = word.size(); p-- > 0;) {
                if (auto r = redex_at(srs, word, p)) return r;
            }
            return std::nullopt;
        case StrategyKind::RandomSeeded:
            candidates_.clear();
            for (std::size_t p = 0; p < word.size(); ++p) {
                for (auto i : srs.rules_starting_with(word[p])) {
                    if (matches_at(word, srs.rules()[i], p)) candidates_.push_back({i, p});
                }
            }
            if (candidates_.empty()) return std::nullopt;
            return candidates_[std::uniform_int_distribution<std::size_t>(0, candidates_.size() - 1)(rng_)];
        }
        return std::nullopt;
    }

  private:
    Strategy strategy_;
    std::mt19937_64 rng_;
    std::vector<Redex> candidates_;
};

} // namespace

RewriteRun normalize_word(const Srs &srs, std::string_view word, Strategy strategy, std::uint64_t fuel,
                          bool trace) {
    if (!is_word(word)) throw InvalidInput("word '" + std::string(word) + "' uses letters outside BEZCMGH");

    RewriteRun run;
    run.start = word;
    run.final_word = word;
    run.rule_counts.assign(srs.rules().size(), 0);
    if (trace) run.log.emplace();

    RedexPicker picker(strategy);
    while (auto redex = picker.pick(srs, run.final_word)) {
        if (run.steps == fuel) {
            run.outcome = RewriteOutcome::FuelExhausted;
            return run;
        }
        const auto &rule = srs.rules()[redex->rule_index];
        run.final_word.replace(redex->position, rule.lhs.size(), rule.rhs);
        ++run.steps;
        ++run.rule_counts[redex->rule_index];
        if (run.log) run.log->push_back({redex->rule_index, redex->position, run.final_word});
    }
    run.outcome = RewriteOutcome::NormalForm;
    return run;
}

std::uint64_t day_start_count(const Srs &srs, const RewriteRun &run) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < run.rule_counts.size(); ++i) {
        if (srs.is_day_start(i)) total += run.rule_counts[i];
    }
    return total;
}

Word word_of_org(const OrgState &org) { return "B" + org.to_string() + "E"; }

OrgState org_of_word(std::string_view word) {
    if (word.size() < 2 || word.front() != 'B' || word.back() != 'E') {
        throw InvalidInput("word '" + std::string(word) + "' is not delimited by B ... E");
    }
    auto inner = word.substr(1, word.size() - 2);
    if (inner.find_first_of("GH") != std::string_view::npos) {
        throw InvalidInput("word '" + std::string(word) + "' still carries an in-flight signal");
    }
    if (inner.find_first_of("BE") != std::string_view::npos) {
        throw InvalidInput("word '" + std::string(word) + "' has a misplaced end marker");
    }
    return OrgState::parse(inner);
}

namespace {

std::string spaced(std::string_view w) {
    std::string out;
    for (char c : w) {
        if (!out.empty()) out += ' ';
        out += c;
    }
    return out;
}

std::string unary_term(std::string_view w) {
    std::string out;
    for (char c : w) {
        out += c;
        out += '(';
    }
    out += 'x';
    out.append(w.size(), ')');
    return out;
}

} // namespace

std::string export_tpdb_srs(const Srs &srs) {
    std::string out = "(RULES\n";
    const auto &rules = srs.rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
        out += "  " + spaced(rules[i].lhs) + " ->";
        if (!rules[i].rhs.empty()) out += " " + spaced(rules[i].rhs);
        if (i + 1 != rules.size()) out += ',';
        out += '\n';
    }
    out += ')';
    return out;
}

std::string export_tpdb_trs(const Srs &srs) {
    std::string out = "(VAR x)\n(RULES\n";
    for (const auto &r : srs.rules()) out += "  " + unary_term(r.lhs) + " -> " + unary_term(r.rhs) + "\n";
    out += ')';
    return out;
}

} // namespace orglab
