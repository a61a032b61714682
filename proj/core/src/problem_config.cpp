#include "tcontract/problem_config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace tcontract {
namespace {

struct Entry {
    std::string value;
    int line = 0;
    int column = 1;  // column of the value
};

using Section = std::map<std::string, Entry>;

const std::map<std::string, std::vector<std::string>>& allowed_keys() {
    static const std::map<std::string, std::vector<std::string>> keys{
        {"space", {"kind", "lo", "hi", "lo_open", "hi_open", "complete", "tail_cap", "file", "labels",
                   "matrix"}},
        {"maps", {"T", "S"}},
        {"solver", {"x0", "k", "tol", "max_iter", "grid", "phi"}},
        {"sampler", {"strategy", "samples", "seed"}},
        {"probe", {"sequence", "terms"}},
    };
    return keys;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::map<std::string, Section> split_sections(std::string_view text) {
    std::map<std::string, Section> sections;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::string current;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const int indent = static_cast<int>(raw.find_first_not_of(" \t")) + 1;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("expected ']'", line_no, indent);
            current = trim(line.substr(1, line.size() - 2));
            if (!allowed_keys().contains(current))
                throw ConfigError("unknown section [" + current + "]", line_no, indent);
            if (sections.contains(current))
                throw ConfigError("duplicate section [" + current + "]", line_no, indent);
            sections[current];
            continue;
        }
        const auto eq = raw.find('=');
        if (eq == std::string::npos) throw ConfigError("expected 'key = value'", line_no, indent);
        if (current.empty()) throw ConfigError("key outside of a section", line_no, indent);
        const std::string key = trim(raw.substr(0, eq));
        const auto& allowed = allowed_keys().at(current);
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ConfigError("unknown key '" + key + "' in [" + current + "]", line_no, indent);
        if (sections[current].contains(key))
            throw ConfigError("duplicate key '" + key + "'", line_no, indent);
        const auto value_start = raw.find_first_not_of(" \t", eq + 1);
        const int column = value_start == std::string::npos ? static_cast<int>(eq) + 2
                                                            : static_cast<int>(value_start) + 1;
        sections[current][key] = Entry{trim(raw.substr(eq + 1)), line_no, column};
    }
    return sections;
}

const Entry* lookup(const std::map<std::string, Section>& sections, const std::string& section,
                    const std::string& key) {
    const auto s = sections.find(section);
    if (s == sections.end()) return nullptr;
    const auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
}

Real real_value(const Entry& e) {
    if (e.value == "inf" || e.value == "+inf" || e.value == "infinity")
        return std::numeric_limits<Real>::infinity();
    return parse_constant(e.value, e.line, e.column);
}

std::size_t count_value(const Entry& e) {
    const Real v = parse_constant(e.value, e.line, e.column);
    if (!(v >= 0) || std::floor(v) != v || v > 1e15L)
        throw ConfigError("expected a non-negative integer, got '" + e.value + "'", e.line, e.column);
    return static_cast<std::size_t>(v);
}

bool bool_value(const Entry& e) {
    if (e.value == "true" || e.value == "yes" || e.value == "1") return true;
    if (e.value == "false" || e.value == "no" || e.value == "0") return false;
    throw ConfigError("expected true or false, got '" + e.value + "'", e.line, e.column);
}

std::vector<std::string> words(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

MetricSpace build_space(const std::map<std::string, Section>& sections,
                        const std::filesystem::path& base_dir) {
    const Entry* kind = lookup(sections, "space", "kind");
    if (!kind) throw ConfigError("[space] needs 'kind = interval' or 'kind = finite'", 0, 0);

    if (kind->value == "interval") {
        IntervalBounds b;
        const Entry* lo = lookup(sections, "space", "lo");
        const Entry* hi = lookup(sections, "space", "hi");
        if (!lo || !hi) throw ConfigError("interval spaces need 'lo' and 'hi'", kind->line, 1);
        b.lo = real_value(*lo);
        b.hi = real_value(*hi);
        if (const Entry* e = lookup(sections, "space", "lo_open")) b.lo_open = bool_value(*e);
        if (const Entry* e = lookup(sections, "space", "hi_open")) b.hi_open = bool_value(*e);
        bool complete = true;
        if (const Entry* e = lookup(sections, "space", "complete")) complete = bool_value(*e);
        try {
            return MetricSpace::interval(b, complete);
        } catch (const Error& err) {
            throw ConfigError(err.what(), lo->line, lo->column);
        }
    }
    if (kind->value == "finite") {
        const Entry* file = lookup(sections, "space", "file");
        const Entry* matrix = lookup(sections, "space", "matrix");
        if (file && matrix) throw ConfigError("give either 'file' or 'matrix', not both", file->line, 1);
        try {
            if (file) return load_finite_space(base_dir / file->value);
            if (!matrix) throw ConfigError("finite spaces need 'file' or 'matrix'", kind->line, 1);
            std::string text;
            if (const Entry* labels = lookup(sections, "space", "labels")) text = "labels " + labels->value + "\n";
            text += matrix->value;
            return parse_finite_space(text);
        } catch (const ConfigError&) {
            throw;
        } catch (const Error& err) {
            const Entry* at = file ? file : matrix;
            throw ConfigError(err.what(), at->line, at->column);
        }
    }
    throw ConfigError("unknown space kind '" + kind->value + "'", kind->line, kind->column);
}

SelfMap build_map(const MetricSpace& space, const Entry* entry, const std::string& name) {
    if (!entry) return SelfMap::identity();
    const auto parts = words(entry->value);
    if (!parts.empty() && parts.front() == "table") {
        if (!space.is_finite()) throw ConfigError("tables need a finite space", entry->line, entry->column);
        if (parts.size() - 1 != space.size())
            throw ConfigError("table for " + name + " has " + std::to_string(parts.size() - 1) +
                                  " images, the space has " + std::to_string(space.size()) + " points",
                              entry->line, entry->column);
        std::vector<std::size_t> images;
        for (std::size_t i = 1; i < parts.size(); ++i) {
            try {
                images.push_back(space.index_of_label(parts[i]));
            } catch (const DomainError& err) {
                throw ConfigError(err.what(), entry->line, entry->column);
            }
        }
        return SelfMap::table(name + " = " + entry->value, std::move(images));
    }
    if (space.is_finite())
        throw ConfigError("maps on finite spaces must be tables ('table <labels>')", entry->line,
                          entry->column);
    const auto expr = Expression::parse(entry->value, entry->line, entry->column);
    if (trim(entry->value) == "x") return SelfMap::identity();
    return SelfMap(name + "(x) = " + entry->value, [expr](Real x) { return expr(x); });
}

void check_closure(const MetricSpace& space, const SelfMap& map, const Entry* entry,
                   const PairSampler& sampler) {
    if (!entry || space.is_finite()) return;
    const auto window = sample_window(space, sampler);
    constexpr int kPoints = 33;
    for (int i = 0; i < kPoints; ++i) {
        const Real x = i + 1 == kPoints ? window.hi
                                        : window.lo + (window.hi - window.lo) * i / (kPoints - 1);
        try {
            map.apply(space, x);
        } catch (const DomainError& err) {
            throw ConfigError(err.what(), entry->line, entry->column);
        }
    }
}

}  // namespace

std::vector<Point> ProbeSettings::generate() const {
    const auto expr = Expression::parse(sequence);
    std::vector<Point> out;
    out.reserve(terms);
    for (std::size_t n = 1; n <= terms; ++n) out.push_back(expr(static_cast<Real>(n)));
    return out;
}

Point ProblemConfig::start_point() const {
    if (solver.x0) return *solver.x0;
    if (space.is_finite()) return 0;
    return sample_window(space, sampler).lo;
}

ProblemConfig parse_problem_config(std::string_view text, std::string name,
                                   const std::filesystem::path& base_dir) {
    const auto sections = split_sections(text);
    MetricSpace space = build_space(sections, base_dir);

    PairSampler sampler;
    if (const Entry* e = lookup(sections, "space", "tail_cap")) sampler.tail_cap = real_value(*e);
    if (const Entry* e = lookup(sections, "sampler", "strategy")) {
        try {
            sampler.strategy = parse_strategy(e->value);
        } catch (const Error& err) {
            throw ConfigError(err.what(), e->line, e->column);
        }
    }
    if (const Entry* e = lookup(sections, "sampler", "samples")) sampler.sample_count = count_value(*e);
    if (const Entry* e = lookup(sections, "sampler", "seed")) sampler.rng_seed = count_value(*e);
    if (space.is_interval() && !space.bounds().bounded() && !(sampler.tail_cap > space.bounds().lo))
        throw ConfigError("tail_cap must exceed lo", 0, 0);

    const Entry* t_entry = lookup(sections, "maps", "T");
    const Entry* s_entry = lookup(sections, "maps", "S");
    if (!s_entry) throw ConfigError("[maps] needs S", 0, 0);
    SelfMap t = build_map(space, t_entry, "T");
    SelfMap s = build_map(space, s_entry, "S");
    check_closure(space, t, t_entry, sampler);
    check_closure(space, s, s_entry, sampler);

    SolverSettings solver;
    if (const Entry* e = lookup(sections, "solver", "x0")) {
        if (space.is_finite()) {
            try {
                solver.x0 = static_cast<Real>(space.index_of_label(e->value));
            } catch (const DomainError& err) {
                throw ConfigError(err.what(), e->line, e->column);
            }
        } else {
            solver.x0 = real_value(*e);
            if (!space.contains(*solver.x0))
                throw ConfigError("x0 = " + e->value + " is outside the domain", e->line, e->column);
        }
    }
    if (const Entry* e = lookup(sections, "solver", "k")) {
        solver.k = real_value(*e);
        if (!(*solver.k > 0 && *solver.k < 1))
            throw ConfigError("k must lie in (0, 1)", e->line, e->column);
    }
    if (const Entry* e = lookup(sections, "solver", "tol")) {
        solver.tol = real_value(*e);
        if (!(solver.tol > 0)) throw ConfigError("tol must be positive", e->line, e->column);
    }
    if (const Entry* e = lookup(sections, "solver", "max_iter")) solver.max_iter = count_value(*e);
    if (const Entry* e = lookup(sections, "solver", "grid")) solver.grid = count_value(*e);
    if (const Entry* e = lookup(sections, "solver", "phi")) solver.use_phi = bool_value(*e);

    std::optional<ProbeSettings> probe;
    if (sections.contains("probe")) {
        const Entry* seq = lookup(sections, "probe", "sequence");
        const Entry* terms = lookup(sections, "probe", "terms");
        if (!seq || !terms) throw ConfigError("[probe] needs 'sequence' and 'terms'", 0, 0);
        Expression::parse(seq->value, seq->line, seq->column);
        probe = ProbeSettings{seq->value, count_value(*terms)};
    }

    return ProblemConfig{std::move(name),
                         std::move(space),
                         MappingPair{std::move(t), std::move(s)},
                         t_entry ? t_entry->value : "x",
                         s_entry->value,
                         solver,
                         sampler,
                         std::move(probe)};
}

ProblemConfig load_problem_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem_config(buffer.str(), path.stem().string(), path.parent_path());
}

}  // namespace tcontract
