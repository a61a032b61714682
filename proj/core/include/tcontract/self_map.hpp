#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "tcontract/metric_space.hpp"

namespace tcontract {

/// A named, pure self-map. Evaluation through `apply` checks that the image
/// lies in the space.
class SelfMap {
  public:
    using Function = std::function<Real(Real)>;

    SelfMap(std::string name, Function fn) : name_(std::move(name)), fn_(std::move(fn)) {}

    static SelfMap identity();
    /// Finite-space map given by its table of image indices.
    static SelfMap table(std::string name, std::vector<std::size_t> images);

    const std::string& name() const noexcept { return name_; }
    bool is_identity() const noexcept { return identity_; }

    /// Raw evaluation, no domain check.
    Real operator()(Real x) const { return identity_ ? x : fn_(x); }

    /// Evaluation with closure check; throws DomainError naming the offending point.
    Point apply(const MetricSpace& space, Point x) const;

    /// The n-fold composition of this map with itself (n >= 1).
    SelfMap power(int n) const;

  private:
    std::string name_;
    Function fn_;
    bool identity_ = false;
};

/// The pair (T, S) under study: S is the map iterated, T the transform under
/// which contraction is measured.
struct MappingPair {
    SelfMap t;
    SelfMap s;

    /// The classical reduction: T is the identity.
    static MappingPair classical(SelfMap s) { return {SelfMap::identity(), std::move(s)}; }

    bool t_is_identity() const noexcept { return t.is_identity(); }
};

}  // namespace tcontract
