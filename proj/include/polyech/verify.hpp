#pragma once
// Named verification suites: randomized chain-level identities and
// homology computations, reported check by check.
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "polyech/json_io.hpp"

namespace polyech {

enum class CheckStatus { Pass, Fail, Flagged };

const char* status_name(CheckStatus s);

struct CheckRecord {
    std::string id;  // "<suite>.<check>"
    std::string description;
    CheckStatus status = CheckStatus::Pass;
    json data = json::object();
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;  // sorted by id
    double seconds = 0;

    std::size_t count(CheckStatus s) const;
    // 0 iff no check failed.
    int exit_status() const { return count(CheckStatus::Fail) ? 1 : 0; }
    const CheckRecord* find(const std::string& id) const;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    double budget = 300;  // seconds, shared by the stabilizations of a suite
    bool strict = false;  // flagged checks count as failures
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// "all" runs every suite into one report.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt = {});

json to_json(const SuiteReport& r);
void print_table(std::ostream& os, const SuiteReport& r);

}  // namespace polyech
