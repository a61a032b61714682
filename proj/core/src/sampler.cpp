#include "tcontract/sampler.hpp"

#include <cmath>
#include <random>

namespace tcontract {
namespace {

class UnitStream {
  public:
    explicit UnitStream(std::uint64_t seed) : engine_(seed) {}
    // Uniform on [0, 1); every 64-bit draw is exact in long double.
    Real next() { return std::ldexp(static_cast<Real>(engine_()), -64); }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

  private:
    std::mt19937_64 engine_;
};

// Lattice pairs ordered by index gap, so any prefix spreads over the window.
class LatticePairs {
  public:
    LatticePairs(Real lo, Real hi, std::size_t pair_count) : lo_(lo), hi_(hi) {
        m_ = 2;
        while (m_ * (m_ - 1) / 2 < pair_count) ++m_;
        if ((hi_ - lo_) / static_cast<Real>(m_ - 1) < kDistinctTolerance)
            throw PreconditionError("interval too narrow for a lattice of distinct points");
    }

    PointPair next() {
        const PointPair p{point(i_), point(i_ + gap_)};
        if (++i_ + gap_ >= m_) {
            i_ = 0;
            if (++gap_ >= m_) gap_ = 1;
        }
        return p;
    }

  private:
    Real point(std::size_t i) const {
        if (i == m_ - 1) return hi_;
        return lo_ + (hi_ - lo_) * static_cast<Real>(i) / static_cast<Real>(m_ - 1);
    }

    Real lo_, hi_;
    std::size_t m_ = 2;
    std::size_t i_ = 0;
    std::size_t gap_ = 1;
};

PointPair uniform_pair(UnitStream& rng, Real lo, Real hi) {
    const Real width = hi - lo;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const Real x = lo + width * rng.next();
        const Real y = lo + width * rng.next();
        if (std::fabs(x - y) >= kDistinctTolerance) return {x, y};
    }
    throw PreconditionError("could not draw distinct points");
}

int max_ladder_exponent(Real width) {
    int j = 1;
    while (j < 64 && std::ldexp(width, -(j + 1)) >= kDistinctTolerance) ++j;
    return j;
}

std::vector<PointPair> sample_interval(const MetricSpace& space, const PairSampler& sampler) {
    const auto window = sample_window(space, sampler);
    const Real lo = window.lo;
    const Real hi = window.hi;
    const Real width = hi - lo;
    if (!(width >= kDistinctTolerance))
        throw PreconditionError("degenerate interval: cannot produce distinct pairs");

    const std::size_t count = sampler.sample_count;
    std::vector<PointPair> pairs;
    pairs.reserve(count);
    UnitStream rng(sampler.rng_seed);

    switch (sampler.strategy) {
        case SampleStrategy::Grid: {
            LatticePairs lattice(lo, hi, count);
            for (std::size_t i = 0; i < count; ++i) pairs.push_back(lattice.next());
            break;
        }
        case SampleStrategy::UniformRandom:
            for (std::size_t i = 0; i < count; ++i) pairs.push_back(uniform_pair(rng, lo, hi));
            break;
        case SampleStrategy::Hybrid: {
            LatticePairs lattice(lo, hi, (count + 3) / 4);
            const int jmax = max_ladder_exponent(width);
            for (std::size_t i = 0; i < count; ++i) {
                const std::size_t phase = i % 4;
                if (phase == 0) {
                    pairs.push_back(lattice.next());
                } else if (phase < 3) {
                    pairs.push_back(uniform_pair(rng, lo, hi));
                } else {
                    const std::size_t q = i / 4;
                    const int j = 1 + static_cast<int>((q / 3) % static_cast<std::size_t>(jmax));
                    const Real h = std::ldexp(width, -j) * (1 + rng.next() / 2);
                    switch (q % 3) {
                        case 0: pairs.push_back({lo, lo + h}); break;
                        case 1: pairs.push_back({hi - h, hi}); break;
                        default: {
                            const Real base = lo + (width - h) * rng.next();
                            pairs.push_back({base, base + h});
                        }
                    }
                }
            }
            break;
        }
    }
    return pairs;
}

std::vector<PointPair> sample_finite(const MetricSpace& space, const PairSampler& sampler) {
    const std::size_t n = space.size();
    if (n < 2) throw PreconditionError("a one-point space has no distinct pairs");

    std::vector<PointPair> all;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            all.push_back({static_cast<Real>(i), static_cast<Real>(j)});

    UnitStream rng(sampler.rng_seed);
    auto random_pair = [&] {
        const std::size_t i = rng.below(n);
        std::size_t j = rng.below(n - 1);
        if (j >= i) ++j;
        return PointPair{static_cast<Real>(i), static_cast<Real>(j)};
    };

    std::vector<PointPair> pairs;
    pairs.reserve(sampler.sample_count);
    for (std::size_t i = 0; i < sampler.sample_count; ++i) {
        switch (sampler.strategy) {
            case SampleStrategy::Grid: pairs.push_back(all[i % all.size()]); break;
            case SampleStrategy::UniformRandom: pairs.push_back(random_pair()); break;
            case SampleStrategy::Hybrid:
                pairs.push_back(i < all.size() ? all[i] : random_pair());
                break;
        }
    }
    return pairs;
}

}  // namespace

SampleWindow sample_window(const MetricSpace& space, const PairSampler& sampler) {
    const auto& b = space.bounds();
    SampleWindow w{b.lo, b.hi, false};
    if (!b.bounded()) {
        if (!(sampler.tail_cap > b.lo))
            throw PreconditionError("tail_cap must exceed the interval's lower bound");
        w.hi = sampler.tail_cap;
        w.truncated = true;
    }
    if (b.lo_open) w.lo = std::nextafter(w.lo, w.hi);
    if (b.hi_open && !w.truncated) w.hi = std::nextafter(w.hi, w.lo);
    return w;
}

std::vector<PointPair> sample_pairs(const MetricSpace& space, const PairSampler& sampler) {
    if (sampler.sample_count == 0) throw PreconditionError("sample_count must be >= 1");
    return space.is_finite() ? sample_finite(space, sampler) : sample_interval(space, sampler);
}

std::string to_string(SampleStrategy strategy) {
    switch (strategy) {
        case SampleStrategy::Grid: return "grid";
        case SampleStrategy::UniformRandom: return "uniform";
        case SampleStrategy::Hybrid: return "hybrid";
    }
    return "unknown";
}

SampleStrategy parse_strategy(const std::string& text) {
    if (text == "grid") return SampleStrategy::Grid;
    if (text == "uniform" || text == "random") return SampleStrategy::UniformRandom;
    if (text == "hybrid") return SampleStrategy::Hybrid;
    throw ParameterError("unknown sampling strategy '" + text + "' (grid | uniform | hybrid)");
}

}  // namespace tcontract
