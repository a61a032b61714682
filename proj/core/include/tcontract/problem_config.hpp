#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcontract/expression.hpp"
#include "tcontract/fixed_point.hpp"
#include "tcontract/sampler.hpp"
#include "tcontract/self_map.hpp"

namespace tcontract {

struct SolverSettings {
    std::optional<Point> x0;
    std::optional<Real> k;
    Real tol = 1e-10L;
    std::size_t max_iter = 1000000;
    std::size_t grid = 10001;
    bool use_phi = false;

    SolveOptions solve_options() const { return SolveOptions{k, tol, max_iter, 1e12L}; }
};

/// A probe sequence y_n = f(n), n = 1..terms.
struct ProbeSettings {
    std::string sequence;
    std::size_t terms = 0;

    std::vector<Point> generate() const;
};

/// One problem: a space, the maps T and S, and solver / sampler settings.
///
///     # comments start with '#'
///     [space]
///     kind = interval          # or finite
///     lo = 1
///     hi = inf                 # constant expressions: 2/e, sqrt(2), 1e6 ...
///     lo_open = false
///     hi_open = false
///     complete = true
///     tail_cap = 1e6
///     file = note2.space       # finite: a space file, relative to the config
///     labels = 0 1/2 1         # finite: or inline labels ...
///     matrix = 0 0.5 1 0.5 0 0.5 1 0.5 0   # ... and a row-major matrix
///
///     [maps]
///     T = ln(x) + 1            # expressions in x; T defaults to x
///     S = 2*sqrt(x)
///     # finite spaces: T = table 0 1/2 0   (images in label order)
///
///     [solver]
///     x0 = 1                   # a label on finite spaces
///     k = 1/2
///     tol = 1e-10
///     max_iter = 1000000
///     grid = 10001
///     phi = false
///
///     [sampler]
///     strategy = hybrid        # grid | uniform | hybrid
///     samples = 10000
///     seed = 0
///
///     [probe]
///     sequence = x             # y_n with x standing for n = 1, 2, ...
///     terms = 2000000
struct ProblemConfig {
    std::string name;
    MetricSpace space;
    MappingPair maps;
    std::string t_text;
    std::string s_text;
    SolverSettings solver;
    PairSampler sampler;
    std::optional<ProbeSettings> probe;

    Point start_point() const;
};

/// Throws ConfigError with the line and column of the offending text.
ProblemConfig parse_problem_config(std::string_view text, std::string name = "config",
                                   const std::filesystem::path& base_dir = {});
ProblemConfig load_problem_config(const std::filesystem::path& path);

}  // namespace tcontract
