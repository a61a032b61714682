#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tcontract/commands.hpp"
#include "tcontract/gallery.hpp"

namespace {

using namespace tcontract;

struct Flags {
    std::string config;
    std::string gallery_id;
    std::string space;
    std::optional<double> tol;
    std::optional<std::size_t> max_iter;
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> grid;
    bool phi = false;
    std::string out;
    std::string csv;
    std::size_t n_cap = 5;
    unsigned threads = 0;
    bool k_scan = false;
};

ProblemConfig load_problem(const Flags& flags) {
    if (!flags.config.empty() && !flags.gallery_id.empty())
        throw ParameterError("--config and --problem are mutually exclusive");
    if (flags.config.empty() && flags.gallery_id.empty())
        throw ParameterError("a problem is required: --config PATH or --problem ID");
    ProblemConfig config = flags.gallery_id.empty()
                               ? load_problem_config(flags.config)
                               : gallery_config(gallery_entry(flags.gallery_id));
    if (flags.tol) {
        if (!(*flags.tol > 0)) throw ParameterError("--tol must be positive");
        config.solver.tol = static_cast<Real>(*flags.tol);
    }
    if (flags.max_iter) config.solver.max_iter = *flags.max_iter;
    if (flags.samples) config.sampler.sample_count = *flags.samples;
    if (flags.seed) config.sampler.rng_seed = *flags.seed;
    if (flags.grid) config.solver.grid = *flags.grid;
    if (flags.phi) config.solver.use_phi = true;
    return config;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParameterError("cannot write '" + path + "'");
    out << text;
}

void emit(const Flags& flags, const std::string& text) {
    std::cout << text;
    if (!flags.out.empty()) write_file(flags.out, text);
}

int run_analyze(const Flags& flags) {
    const auto outcome = cmd_analyze(load_problem(flags));
    emit(flags, serialize(outcome.report));
    return outcome.exit_code;
}

int run_solve(const Flags& flags) {
    const ProblemConfig config = load_problem(flags);
    const auto outcome = cmd_solve(config);
    emit(flags, serialize(outcome.report));
    if (!flags.csv.empty()) {
        std::ofstream csv(flags.csv, std::ios::binary);
        if (!csv) throw ParameterError("cannot write '" + flags.csv + "'");
        write_orbit_csv(csv, outcome.result.orbit, config.space);
    }
    return outcome.exit_code;
}

int run_oracle(const Flags& flags) {
    std::optional<MetricSpace> space;
    if (!flags.space.empty())
        space = load_finite_space(flags.space);
    else if (!flags.config.empty() || !flags.gallery_id.empty())
        space = load_problem(flags).space;
    else
        throw ParameterError("a finite space is required: --space PATH");
    OracleOptions options;
    options.threads = flags.threads;
    options.k_threshold_scan = flags.k_scan;
    const auto outcome = cmd_oracle(*space, flags.n_cap, options);
    std::cout << outcome.summary << '\n';
    emit(flags, serialize(outcome.report));
    return outcome.exit_code;
}

int run_gallery(const Flags& flags, const std::string& id) {
    const auto outcome = cmd_gallery(id);
    emit(flags, outcome.text);
    return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"T-contraction analysis and fixed-point solver"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags flags;
    std::string gallery_target = "all";

    app.add_option("--config", flags.config, "Problem config file")->check(CLI::ExistingFile);
    app.add_option("--problem", flags.gallery_id, "Use a built-in gallery problem instead of --config");
    app.add_option("--tol", flags.tol, "Solver tolerance");
    app.add_option("--max-iter", flags.max_iter, "Iteration budget");
    app.add_option("--samples", flags.samples, "Sampled pairs")->check(CLI::PositiveNumber);
    app.add_option("--seed", flags.seed, "Sampler seed");
    app.add_option("--grid", flags.grid, "Grid size for phi minimization")->check(CLI::Range(2, 100000000));
    app.add_flag("--phi", flags.phi, "Solve by phi minimization (compact spaces)");
    app.add_option("--out", flags.out, "Also write the report to this file");
    app.add_option("--csv", flags.csv, "Write the orbit as CSV (solve)");

    auto* analyze = app.add_subcommand("analyze", "Classify S against T with witnesses");
    auto* solve = app.add_subcommand("solve", "Find the fixed point of S");
    auto* oracle = app.add_subcommand("oracle", "Exhaustive theorem check on a small finite space");
    oracle->add_option("--space", flags.space, "Finite space file")->check(CLI::ExistingFile);
    oracle->add_option("--n-cap", flags.n_cap, "Largest accepted space size")->check(CLI::Range(1, 5));
    oracle->add_option("--threads", flags.threads, "Worker threads (0 = all cores)");
    oracle->add_flag("--k-scan", flags.k_scan, "Collect the k* histogram");
    auto* gallery = app.add_subcommand("gallery", "Run built-in examples against frozen expectations");
    gallery->add_option("id", gallery_target, "Entry id or 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*analyze) return run_analyze(flags);
        if (*solve) return run_solve(flags);
        if (*oracle) return run_oracle(flags);
        if (*gallery) return run_gallery(flags, gallery_target);
    } catch (const tcontract::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
