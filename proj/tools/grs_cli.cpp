/*
 * Command-line entry point.  Subcommands: info (system data), verify
 * (identity suites), count (braid orbit enumeration against the closed
 * degree formula), table (sweep of all valid triples up to a bound).
 * The document goes to stdout, progress to stderr.  Exit codes: 0
 * success, 1 failed check, 2 invalid input, 3 state cap reached.
 */

#include "grs/cli.hpp"

#include "CLI11.hpp"

#include <array>
#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for star-shaped affine root systems: Euler "
                 "form, twist, Coxeter transformation, braid orbit counts."};
    app.require_subcommand(1);

    std::vector<int64_t> triple;
    std::string format = "text";
    uint64_t state_cap = 10000000;
    uint64_t seed = 0;
    int64_t amax = 5;

    const auto add_common = [&](CLI::App* sub, bool needs_triple) {
        if (needs_triple)
            sub->add_option("--a", triple, "triple a1,a2,a3")
                ->required()
                ->delimiter(',')
                ->expected(3);
        sub->add_option("--format", format, "output format: json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--state-cap", state_cap,
                        "stop enumeration after this many classes");
        sub->add_option("--seed", seed, "seed for randomized identity checks");
    };

    CLI::App* info = app.add_subcommand(
        "info", "print invariants, vertex order and the form matrices");
    add_common(info, true);
    CLI::App* verify = app.add_subcommand(
        "verify", "run every identity suite for one system");
    add_common(verify, true);
    CLI::App* count = app.add_subcommand(
        "count", "enumerate the braid orbit and compare with the formula");
    add_common(count, true);
    CLI::App* table = app.add_subcommand(
        "table", "one row per valid triple with entries up to a bound");
    add_common(table, false);
    table->add_option("--amax", amax, "largest entry to include (1 to 12)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return grs::kExitInvalidInput;
    }

    grs::RunConfig cfg;
    if (triple.size() == 3) cfg.a = {triple[0], triple[1], triple[2]};
    cfg.format = format == "json"  ? grs::OutputFormat::Json
                 : format == "csv" ? grs::OutputFormat::Csv
                                   : grs::OutputFormat::Text;
    cfg.state_cap = state_cap;
    cfg.seed = seed;
    cfg.amax = amax;

    grs::RunResult result;
    try {
        if (info->parsed()) result = grs::cmd_info(cfg);
        else if (verify->parsed()) result = grs::cmd_verify(cfg);
        else if (count->parsed()) result = grs::cmd_count(cfg);
        else result = grs::cmd_table(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return grs::kExitCheckFailed;
    }

    std::cout << result.document;
    return result.exit_code;
}
