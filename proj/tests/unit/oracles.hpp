#pragma once

#include <cmath>
#include <functional>

#include "tcontract/self_map.hpp"

namespace oracle {

using tcontract::Real;

// Root of f on [lo, hi] by plain bisection; f(lo) and f(hi) differ in sign.
inline Real bisect(const std::function<Real(Real)>& f, Real lo, Real hi, int steps = 200) {
    Real flo = f(lo);
    for (int i = 0; i < steps; ++i) {
        const Real mid = (lo + hi) / 2;
        const Real fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

inline tcontract::SelfMap map(const char* name, std::function<Real(Real)> fn) {
    return tcontract::SelfMap(name, std::move(fn));
}

}  // namespace oracle
