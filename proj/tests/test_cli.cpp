#include <doctest.h>

#include "orglab/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int status = orglab::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("encode / decode") {
    CHECK(run({"encode", "42"}).out == "MCZ\n");
    CHECK(run({"encode", "42", "--digits"}).out == "420\n");
    CHECK(run({"encode", "0"}).out == "\n");
    CHECK(run({"decode", "MCZ"}).out == "42\n");
    CHECK(run({"decode", "--digits", "2024"}).out == "64\n");
    auto odd = run({"encode", "7"});
    CHECK(odd.status == orglab::cli::kExitUsage);
    CHECK(odd.err.find("even") != std::string::npos);
    CHECK(run({"decode", "MXZ"}).status == orglab::cli::kExitUsage);
}

TEST_CASE("simulate") {
    auto r = run({"simulate", "--n", "42"});
    CHECK(r.status == 0);
    CHECK(r.out == "bankrupt on day 5: ZZZM (4)\n");
    auto t = run({"simulate", "--state", "MCZ", "--trace"});
    CHECK(t.out == "day 0: MCZ (42)\n"
                   "day 1: CZCM (64)\n"
                   "day 2: ZCMC (32)\n"
                   "day 3: ZZMM (16)\n"
                   "day 4: ZZCC (8)\n"
                   "day 5: ZZZM (4)\n"
                   "bankrupt on day 5: ZZZM (4)\n");
    auto capped = run({"simulate", "--n", "54", "--max-days", "3"});
    CHECK(capped.status == orglab::cli::kExitFailure);
    CHECK(capped.out.starts_with("budget exhausted after 3 days"));
    CHECK(run({"simulate"}).status == orglab::cli::kExitUsage);
    CHECK(run({"simulate", "--n", "4", "--state", "M"}).status == orglab::cli::kExitUsage);
    CHECK(run({"simulate", "--n", "5"}).status == orglab::cli::kExitUsage);
}

TEST_CASE("gtraj") {
    CHECK(run({"gtraj", "--n", "42"}).out == "42\n64\n32\n16\n8\n4\n");
    CHECK(run({"gtraj", "--n", "42", "--json"}).out == "[\"42\",\"64\",\"32\",\"16\",\"8\",\"4\"]\n");
    CHECK(run({"gtraj", "--n", "54", "--max-steps", "2"}).status == orglab::cli::kExitFailure);
}

TEST_CASE("verify") {
    auto r = run({"verify", "--lo", "40", "--hi", "44"});
    CHECK(r.status == 0);
    CHECK(r.out == "n,days,g_steps,max_org_len,terminal_value,agree,budget_exhausted\n"
                   "40,5,5,4,4,true,false\n"
                   "42,5,5,4,4,true,false\n"
                   "44,10,10,7,4,true,false\n");
    CHECK(r.err.find("disagreements: 0") != std::string::npos);

    auto capped = run({"verify", "--lo", "2", "--hi", "60", "--max-days", "5"});
    CHECK(capped.status == orglab::cli::kExitFailure);

    CHECK(run({"verify", "--lo", "3", "--hi", "10"}).status == orglab::cli::kExitUsage);
    CHECK(run({"verify", "--lo", "10", "--hi", "2"}).status == orglab::cli::kExitUsage);
    CHECK(run({"verify", "--lo", "2", "--hi", "10", "--shard-size", "0"}).status == orglab::cli::kExitUsage);
    CHECK(run({"verify", "--lo", "2", "--hi", "10", "--format", "xml"}).status == orglab::cli::kExitUsage);

    auto path = std::filesystem::temp_directory_path() / "orglab_verify_test.jsonl";
    auto to_file = run({"verify", "--lo", "42", "--hi", "42", "--format", "jsonl", "--out", path.string()});
    CHECK(to_file.status == 0);
    CHECK(to_file.out.find("records: 1") != std::string::npos);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line.starts_with(R"({"n":"42","days":5)"));
    std::filesystem::remove(path);
}

TEST_CASE("emit-trs and run-srs") {
    auto srs = run({"emit-trs", "--mode", "single-day", "--format", "srs"});
    CHECK(srs.status == 0);
    CHECK(srs.out.starts_with("(RULES\n  G Z -> Z G,\n"));
    CHECK(run({"emit-trs", "--mode", "weekly", "--format", "srs"}).status == orglab::cli::kExitUsage);
    CHECK(run({"emit-trs", "--mode", "chained", "--format", "xml"}).status == orglab::cli::kExitUsage);

    auto chained = run({"run-srs", "--mode", "chained", "--n", "42"});
    CHECK(chained.status == 0);
    CHECK(chained.out.find("normal form: BME\n") != std::string::npos);
    CHECK(chained.out.find("day starts: 5\n") != std::string::npos);

    auto traced = run({"run-srs", "--mode", "single-day", "--n", "42", "--trace"});
    CHECK(traced.out.starts_with("1, 4, 1, BCGCZE\n"));
    CHECK(traced.out.find("normal form: BCZCME\n") != std::string::npos);

    auto random = run({"run-srs", "--mode", "chained", "--n", "42", "--strategy", "random", "--seed", "9"});
    CHECK(random.out.find("normal form: BME\n") != std::string::npos);
    CHECK(run({"run-srs", "--mode", "chained", "--n", "54", "--fuel", "3"}).status == orglab::cli::kExitFailure);
}

TEST_CASE("usage errors") {
    CHECK(run({}).status == orglab::cli::kExitUsage);
    CHECK(run({"frobnicate"}).status == orglab::cli::kExitUsage);
    CHECK(run({"--help"}).status == 0);
}
