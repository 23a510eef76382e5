#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "bench.hpp"
#include "fermatkit/errors.hpp"
#include "fermatkit/factorizer.hpp"
#include "fermatkit/numcore.hpp"

namespace fermatkit::cli {
namespace {

using json = nlohmann::ordered_json;

json stats_json(const SearchStats& s) {
    return {
        {"candidates_tested", s.candidates_tested},
        {"filter_rejections", s.filter_rejections},
        {"isqrt_confirmations", s.isqrt_confirmations},
    };
}

std::string stats_line(const SearchStats& s) {
    std::ostringstream os;
    os << "candidates_tested=" << s.candidates_tested << " filter_rejections=" << s.filter_rejections
       << " isqrt_confirmations=" << s.isqrt_confirmations;
    return os.str();
}

int invalid(std::ostream& err, const std::string& what) {
    err << "error: " << what << '\n';
    return kExitInvalid;
}

int exhausted(std::ostream& err, const BudgetExhausted& e) {
    err << "unresolved: budget of " << e.budget() << " candidates exhausted on cofactor " << e.cofactor()
        << '\n';
    return kExitBudget;
}

std::optional<Natural> parse_arg(const std::string& text, std::ostream& err) {
    auto n = Natural::try_parse(text);
    if (!n) err << "error: not a decimal natural number: '" << text << "'\n";
    return n;
}

}  // namespace

int cmd_factor(const std::string& text, const Options& opts, std::ostream& out, std::ostream& err) {
    const auto n = parse_arg(text, err);
    if (!n) return kExitInvalid;
    if (n->is_zero()) return invalid(err, "factor: input must be >= 1");

    Factorization f;
    try {
        f = factorize(*n, opts.budget);
    } catch (const BudgetExhausted& e) {
        return exhausted(err, e);
    }

    if (opts.json) {
        json factors = json::array();
        for (const auto& [prime, exponent] : f.factors) {
            factors.push_back({{"p", prime.to_string()}, {"e", exponent}});
        }
        json doc = {{"n", n->to_string()}, {"factors", factors}, {"stats", stats_json(f.stats)}};
        out << doc.dump() << '\n';
    } else {
        out << format_factors(f) << '\n';
        if (opts.stats) out << stats_line(f.stats) << '\n';
    }
    return kExitOk;
}

int cmd_isprime(const std::string& text, const Options& opts, std::ostream& out, std::ostream& err) {
    const auto n = parse_arg(text, err);
    if (!n) return kExitInvalid;
    if (*n < Natural(2)) return invalid(err, "isprime: input must be >= 2");

    bool prime = false;
    try {
        prime = is_prime(*n, opts.budget);
    } catch (const BudgetExhausted& e) {
        if (opts.json) out << json{{"n", n->to_string()}, {"verdict", "unresolved"}}.dump() << '\n';
        else out << "unresolved\n";
        return exhausted(err, e);
    }

    const char* verdict = prime ? "prime" : "composite";
    if (opts.json) out << json{{"n", n->to_string()}, {"verdict", verdict}}.dump() << '\n';
    else out << verdict << '\n';
    return prime ? kExitOk : kExitComposite;
}

int cmd_issquare(const std::string& text, const Options& opts, std::ostream& out, std::ostream& err) {
    const auto n = parse_arg(text, err);
    if (!n) return kExitInvalid;

    const SquareCheck check = check_square(*n);
    if (opts.json) {
        json doc = {{"n", n->to_string()},
                    {"passes_filter", check.passes_filter},
                    {"root", check.root ? json(check.root->to_string()) : json(nullptr)}};
        out << doc.dump() << '\n';
    } else if (check.root) {
        out << "square root=" << *check.root << '\n';
    } else if (!check.passes_filter) {
        out << "non-square (filter)\n";
    } else {
        out << "non-square (confirmed)\n";
    }
    return kExitOk;
}

int cmd_split(const std::string& text, const Options& opts, std::ostream& out, std::ostream& err) {
    const auto p = parse_arg(text, err);
    if (!p) return kExitInvalid;

    SplitOutcome outcome;
    try {
        outcome = fermat_split(*p, opts.budget);
    } catch (const InvalidInput& e) {
        return invalid(err, e.what());
    } catch (const BudgetExhausted& e) {
        return exhausted(err, e);
    }

    if (opts.json) {
        json doc = {{"p", p->to_string()},
                    {"kind", to_string(outcome.kind)},
                    {"b", outcome.b.to_string()},
                    {"c", outcome.c.to_string()},
                    {"factor_hi", outcome.factor_hi.to_string()},
                    {"factor_lo", outcome.factor_lo.to_string()},
                    {"stats", stats_json(outcome.stats)}};
        out << doc.dump() << '\n';
    } else {
        out << to_string(outcome.kind) << " b=" << outcome.b << " c=" << outcome.c
            << " factors=" << outcome.factor_hi << ',' << outcome.factor_lo << '\n'
            << stats_line(outcome.stats) << '\n';
    }
    return kExitOk;
}

int cmd_bench(const std::string& spec, const Options& opts, std::ostream& out, std::ostream& err) {
    std::vector<Natural> targets;
    try {
        targets = parse_targets(spec);
    } catch (const InvalidInput& e) {
        return invalid(err, e.what());
    }

    std::ofstream file;
    if (opts.out_path) {
        file.open(*opts.out_path);
        if (!file) return invalid(err, "bench: cannot open '" + *opts.out_path + "' for writing");
    }
    std::ostream& csv = opts.out_path ? file : out;

    csv << kBenchCsvHeader << '\n';
    bool disagreement = false;
    bool budget_hit = false;
    for (const Natural& n : targets) {
        try {
            const BenchRecord record = bench_one(n, opts.budget);
            write_csv_row(csv, record);
            if (!record.agree) {
                disagreement = true;
                err << "DISAGREEMENT: factorize and trial division differ on " << n << '\n';
            }
        } catch (const BudgetExhausted& e) {
            budget_hit = true;
            exhausted(err, e);
        }
    }
    csv.flush();
    if (disagreement) return kExitDisagreement;
    if (budget_hit) return kExitBudget;
    return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fermat difference-of-squares factorization and primality toolkit", "fermatkit"};
    app.require_subcommand(1);

    Options opts;
    std::uint64_t budget = kDefaultBudget;
    bool unbounded = false;
    std::string number;
    std::vector<std::string> target_words;
    std::string out_path;

    auto add_budget = [&](CLI::App* cmd) {
        auto* b = cmd->add_option("--budget", budget, "Maximum candidates tested per b-scan")
                      ->capture_default_str();
        cmd->add_flag("--unbounded", unbounded, "Scan without a candidate limit")->excludes(b);
    };

    auto* factor = app.add_subcommand("factor", "Prime factorization of N");
    factor->add_option("n", number, "Decimal number >= 1")->required();
    factor->add_flag("--json", opts.json, "Emit JSON");
    factor->add_flag("--stats", opts.stats, "Print search statistics");
    add_budget(factor);

    auto* isprime = app.add_subcommand("isprime", "Primality verdict for N");
    isprime->add_option("n", number, "Decimal number >= 2")->required();
    isprime->add_flag("--json", opts.json, "Emit JSON");
    add_budget(isprime);

    auto* issquare = app.add_subcommand("issquare", "Perfect-square test");
    issquare->add_option("n", number, "Decimal number")->required();
    issquare->add_flag("--json", opts.json, "Emit JSON");

    auto* split = app.add_subcommand("split", "One difference-of-squares search on an odd non-square P");
    split->add_option("p", number, "Odd non-square decimal number >= 3")->required();
    split->add_flag("--json", opts.json, "Emit JSON");
    add_budget(split);

    auto* bench = app.add_subcommand("bench", "Compare factorize against trial division");
    bench->add_option("targets", target_words, "Targets, e.g. \"3..99 odd, 176400\"")->required();
    bench->add_option("--out", out_path, "CSV output path (default: stdout)");
    add_budget(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        return invalid(err, e.what());
    }

    opts.budget = unbounded ? Budget{} : Budget{budget};
    if (!out_path.empty()) opts.out_path = out_path;

    if (factor->parsed()) return cmd_factor(number, opts, out, err);
    if (isprime->parsed()) return cmd_isprime(number, opts, out, err);
    if (issquare->parsed()) return cmd_issquare(number, opts, out, err);
    if (split->parsed()) return cmd_split(number, opts, out, err);

    std::string spec;
    for (const auto& w : target_words) {
        if (!spec.empty()) spec += ' ';
        spec += w;
    }
    return cmd_bench(spec, opts, out, err);
}

}  // namespace fermatkit::cli
