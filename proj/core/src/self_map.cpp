#include "tcontract/self_map.hpp"

#include <memory>

namespace tcontract {

SelfMap SelfMap::identity() {
    SelfMap map("x", nullptr);
    map.identity_ = true;
    return map;
}

SelfMap SelfMap::table(std::string name, std::vector<std::size_t> images) {
    auto shared = std::make_shared<const std::vector<std::size_t>>(std::move(images));
    return SelfMap(std::move(name), [shared](Real x) -> Real {
        const auto i = static_cast<std::size_t>(x);
        if (x < 0 || i >= shared->size() || static_cast<Real>(i) != x) return -1;  // rejected by apply
        return static_cast<Real>((*shared)[i]);
    });
}

Point SelfMap::apply(const MetricSpace& space, Point x) const {
    const Point y = (*this)(x);
    if (!space.contains(y))
        throw DomainError("map " + name_ + " sends " + space.describe(x) + " to " + format_real(y) +
                              ", outside the domain",
                          x);
    return y;
}

SelfMap SelfMap::power(int n) const {
    if (n < 1) throw ParameterError("map power must be >= 1");
    if (n == 1 || identity_) return *this;
    SelfMap base = *this;
    return SelfMap("(" + name_ + ")^" + std::to_string(n), [base, n](Real x) {
        for (int i = 0; i < n; ++i) x = base(x);
        return x;
    });
}

}  // namespace tcontract
