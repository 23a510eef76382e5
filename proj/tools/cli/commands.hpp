#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "fermatkit/fermat.hpp"

namespace fermatkit::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitComposite = 1,     // isprime
    kExitDisagreement = 1,  // bench
    kExitBudget = 2,
    kExitInvalid = 3,
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct Options {
    bool json = false;
    bool stats = false;
    Budget budget = kDefaultBudget;
    std::optional<std::string> out_path;
};

// Each command writes its result to `out` and diagnostics to `err`, and
// returns the process exit code.
int cmd_factor(const std::string& n, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_isprime(const std::string& n, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_issquare(const std::string& n, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_split(const std::string& p, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_bench(const std::string& targets, const Options& opts, std::ostream& out, std::ostream& err);

/// Parses argv (subcommand plus flags) and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fermatkit::cli
