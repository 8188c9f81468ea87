// kronrate: compute convergence-rate functionals, verify them against exact
// or sampled probabilities, and run adversarial schedules against candidate
// rates. Configuration is a single JSON file; results go to stdout or --out.
//
// Exit codes: 0 all verdicts passed, 1 some verdict failed, 2 usage or
// runtime error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "kron/experiment.hpp"

namespace {

struct Options {
    std::string config_path;
    std::string out_path;
    std::string format = "table";
    bool no_timestamp = false;
    std::uint64_t seed = 0;
    bool seed_set = false;
    kron::Index trials = 0;
    bool trials_set = false;
};

int emit(const kron::ResultRecord& rec, const Options& opt) {
    kron::OutputFormat fmt = kron::OutputFormat::Table;
    if (opt.format == "json") fmt = kron::OutputFormat::Json;
    else if (opt.format == "csv") fmt = kron::OutputFormat::Csv;

    std::string text = kron::render(rec, fmt, !opt.no_timestamp);
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out_path);
        if (!out) {
            std::cerr << "error: cannot write '" << opt.out_path << "'\n";
            return 2;
        }
        out << text;
    }
    return rec.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rate functionals for weighted averages of converging series"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global options after the subcommand name

    Options opt;
    app.add_option("--config", opt.config_path, "JSON experiment description")->required();
    app.add_option("--out", opt.out_path, "write results to this file instead of stdout");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_flag("--no-timestamp", opt.no_timestamp,
                 "omit timestamp and wall time for byte-stable output");
    auto* seed_opt = app.add_option("--seed", opt.seed, "override the sampling seed");
    auto* trials_opt = app.add_option("--trials", opt.trials, "override the Monte Carlo trial count");

    auto* cmd_rate = app.add_subcommand("rate", "compute the configured rate over the grid");
    auto* cmd_verify =
        app.add_subcommand("verify", "compute the rate and check it against the instance");
    auto* cmd_adversary =
        app.add_subcommand("adversary", "run adversarial schedules against candidate rates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    opt.seed_set = seed_opt->count() > 0;
    opt.trials_set = trials_opt->count() > 0;

    try {
        kron::ExperimentConfig cfg = kron::load_config(opt.config_path);
        if (opt.seed_set) cfg.seed = opt.seed;
        if (opt.trials_set) cfg.trials = opt.trials;

        kron::ResultRecord rec;
        if (cmd_rate->parsed()) rec = kron::run_rate(cfg);
        else if (cmd_verify->parsed()) rec = kron::run_verify(cfg);
        else rec = kron::run_adversary(cfg);
        return emit(rec, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
