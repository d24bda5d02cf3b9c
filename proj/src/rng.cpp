#include "qcoh/rng.hpp"

#include <cmath>

namespace qcoh {

double SplitMixRng::next_gaussian() {
    if (have_cached_) {
        have_cached_ = false;
        return cached_;
    }
    // Box-Muller on (0,1] x [0,1)
    double u = 1.0 - next_double();
    double v = next_double();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double theta = 6.283185307179586476925286766559 * v;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
}

} // namespace qcoh
