#include "tcontract/gallery.hpp"

#include <cmath>
#include <numbers>

namespace tcontract {
namespace {

constexpr Real kTwoOverE = 2 / std::numbers::e_v<Real>;

std::vector<GalleryEntry> build_entries() {
    std::vector<GalleryEntry> entries;

    {
        GalleryEntry e{"ex2_2", "S = 2x is a T-contraction for T = 1/x + 1 on [1, inf)", R"(
[space]
kind = interval
lo = 1
hi = inf
tail_cap = 1e3
[maps]
T = 1/x + 1
S = 2*x
[solver]
x0 = 1
k = 1/2
[probe]
sequence = x^2
terms = 2000
)", {}};
        e.expected.verdict = Verdict::TContraction;
        e.expected.k_range = {0.49L, 0.5L + 1e-12L};
        e.expected.collision = false;
        e.expected.probe = SubsequentialVerdict::EvidenceAgainstSubsequential;
        e.expected.status = SolveStatus::NoConvergence;
        entries.push_back(std::move(e));
    }
    {
        GalleryEntry e{"ex3_1", "S = x^2/sqrt(2) is T-contractive for T = x^2 on [0, 1]", R"(
[space]
kind = interval
lo = 0
hi = 1
[maps]
T = x^2
S = x^2/sqrt(2)
[solver]
x0 = 0.9
)", {}};
        e.expected.verdict = Verdict::TContractive;
        e.expected.k_range = {1 - 1e-6L, 1};
        e.expected.collision = false;
        e.expected.status = SolveStatus::Converged;
        e.expected.fixed_point = 0;
        entries.push_back(std::move(e));
    }
    {
        GalleryEntry e{"ex3_2", "S = sqrt(1 - x^2)/2 is a T-contraction for T = x^2 on [0, 1]", R"(
[space]
kind = interval
lo = 0
hi = 1
[maps]
T = x^2
S = 0.5*sqrt(1 - x^2)
[solver]
x0 = 0
k = 1/4
)", {}};
        e.expected.verdict = Verdict::TContraction;
        e.expected.k_range = {0.25L - 1e-12L, 0.25L + 1e-12L};
        e.expected.collision = false;
        e.expected.status = SolveStatus::Converged;
        e.expected.fixed_point = 1 / std::sqrt(Real{5});
        entries.push_back(std::move(e));
    }
    {
        GalleryEntry e{"ex3_3", "S = 2 sqrt(x) is a T-contraction for T = ln x + 1 on [1, inf)", R"(
[space]
kind = interval
lo = 1
hi = inf
[maps]
T = ln(x) + 1
S = 2*sqrt(x)
[solver]
x0 = 1
k = 1/2
tol = 1e-12
)", {}};
        e.expected.verdict = Verdict::TContraction;
        e.expected.k_range = {0.5L - 1e-12L, 0.5L + 1e-12L};
        e.expected.collision = false;
        e.expected.status = SolveStatus::Converged;
        e.expected.fixed_point = 4;
        entries.push_back(std::move(e));
    }
    {
        GalleryEntry e{"ex3_4", "S = 2x + 1, T = exp(-x) on [0, inf): T-contraction without a fixed point", R"(
[space]
kind = interval
lo = 0
hi = inf
tail_cap = 20
[maps]
T = exp(-x)
S = 2*x + 1
[solver]
x0 = 0
k = 2/e
[probe]
sequence = x^2
terms = 2000
)", {}};
        e.expected.verdict = Verdict::TContraction;
        e.expected.k_range = {0.73L, kTwoOverE + 1e-9L};
        e.expected.collision = false;
        e.expected.probe = SubsequentialVerdict::EvidenceAgainstSubsequential;
        e.expected.status = SolveStatus::NoConvergence;
        entries.push_back(std::move(e));
    }
    {
        GalleryEntry e{"note2_a", "non-injective T1: S1 is a T1-contraction with two fixed points", R"(
[space]
kind = finite
labels = 0 1/2 1
matrix = 0 0.5 1  0.5 0 0.5  1 0.5 0
[maps]
T = table 0 1/2 0
S = table 0 0 1
[solver]
phi = true
max_iter = 1000
[sampler]
strategy = grid
samples = 3
)", {}};
        e.expected.verdict = Verdict::TContraction;
        e.expected.k_range = {0, 0};
        e.expected.collision = true;
        e.expected.status = SolveStatus::Converged;
        e.expected.fixed_point = 0;
        e.expected.k_star = 0;
        e.expected.fixed_points = std::vector<std::string>{"0", "1"};
        e.expected.phi_zeros = std::vector<std::string>{"0", "1"};
        e.expected.failure_mode = FailureMode::MultipleFixedPoints;
        entries.push_back(std::move(e));
    }
    {
        GalleryEntry e{"note2_b", "non-injective T2: S2 is a T2-contraction without a fixed point", R"(
[space]
kind = finite
labels = 0 1/2 1
matrix = 0 0.5 1  0.5 0 0.5  1 0.5 0
[maps]
T = table 0 1/2 0
S = table 1 1 0
[solver]
phi = true
max_iter = 1000
[sampler]
strategy = grid
samples = 3
)", {}};
        e.expected.verdict = Verdict::TContraction;
        e.expected.k_range = {0, 0};
        e.expected.collision = true;
        e.expected.status = SolveStatus::NoConvergence;
        e.expected.k_star = 0;
        e.expected.fixed_points = std::vector<std::string>{};
        e.expected.phi_zeros = std::vector<std::string>{"0", "1"};
        e.expected.failure_mode = FailureMode::NoFixedPoint;
        entries.push_back(std::move(e));
    }
    {
        GalleryEntry e{"banach_identity", "classical contraction S = x/2 on [0, 1]", R"(
[space]
kind = interval
lo = 0
hi = 1
[maps]
T = x
S = x/2
[solver]
x0 = 1
k = 1/2
)", {}};
        e.expected.verdict = Verdict::TContraction;
        e.expected.k_range = {0.5L - 1e-12L, 0.5L + 1e-12L};
        e.expected.collision = false;
        e.expected.status = SolveStatus::Converged;
        e.expected.fixed_point = 0;
        entries.push_back(std::move(e));
    }
    {
        // The sup of |sqrt x - sqrt y| / |x - y| = 1/(sqrt x + sqrt y) on
        // [1, inf) is 1/2, approached as x, y -> 1: a contraction, not merely
        // contractive.
        GalleryEntry e{"edelstein_sqrt", "S = sqrt(x), T = x on [1, inf)", R"(
[space]
kind = interval
lo = 1
hi = inf
[maps]
T = x
S = sqrt(x)
[solver]
x0 = 4
k = 1/2
)", {}};
        e.expected.verdict = Verdict::TContraction;
        e.expected.k_range = {0.49L, 0.5L};
        e.expected.collision = false;
        e.expected.status = SolveStatus::Converged;
        e.expected.fixed_point = 1;
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace

const std::vector<GalleryEntry>& gallery_entries() {
    static const std::vector<GalleryEntry> entries = build_entries();
    return entries;
}

const GalleryEntry& gallery_entry(std::string_view id) {
    for (const auto& e : gallery_entries())
        if (e.id == id) return e;
    throw ParameterError("unknown gallery entry '" + std::string(id) + "'");
}

ProblemConfig gallery_config(const GalleryEntry& entry) {
    return parse_problem_config(entry.config_text, entry.id);
}

MetricSpace note2_space() {
    return MetricSpace::finite({0, 0.5L, 1, 0.5L, 0, 0.5L, 1, 0.5L, 0}, {"0", "1/2", "1"});
}

FiniteMap tabulate(const MetricSpace& space, const SelfMap& map) {
    FiniteMap table(space.size());
    for (std::size_t i = 0; i < space.size(); ++i)
        table[i] = static_cast<std::uint8_t>(space.index_of(map.apply(space, static_cast<Real>(i))));
    return table;
}

}  // namespace tcontract
