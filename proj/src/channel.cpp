#include "qecstab/channel.hpp"

#include <cmath>
#include <string>

namespace qecstab {

PauliChannel PauliChannel::make(double pi, double px, double py, double pz) {
    if (pi < 0 || px < 0 || py < 0 || pz < 0)
        throw ValidationError("PauliChannel: negative probability");
    if (std::abs(pi + px + py + pz - 1.0) > 1e-12)
        throw ValidationError("PauliChannel: probabilities must sum to 1");
    return PauliChannel{pi, px, py, pz};
}

PauliChannel depolarizing(double eps) {
    if (!(eps >= 0.0 && eps <= 0.75))
        throw ValidationError("depolarizing: eps must lie in [0, 3/4], got " +
                              std::to_string(eps));
    return PauliChannel{1.0 - eps, eps / 3.0, eps / 3.0, eps / 3.0};
}

PauliChannel bit_flip(double eps) {
    if (!(eps >= 0.0 && eps <= 1.0))
        throw ValidationError("bit_flip: eps must lie in [0, 1], got " + std::to_string(eps));
    return PauliChannel{1.0 - eps, eps, 0.0, 0.0};
}

PauliChannel dephasing(double eps) {
    if (!(eps >= 0.0 && eps <= 1.0))
        throw ValidationError("dephasing: eps must lie in [0, 1], got " + std::to_string(eps));
    return PauliChannel{1.0 - eps, 0.0, 0.0, eps};
}

PauliOperator sample_error(const PauliChannel& ch, std::size_t n, Philox& rng) {
    if (n < 1)
        throw ValidationError("sample_error: n must be at least 1");
    PauliOperator e(n);
    const double t1 = ch.p_i;
    const double t2 = ch.p_i + ch.p_x;
    const double t3 = ch.p_i + ch.p_x + ch.p_y;
    for (std::size_t q = 0; q < n; ++q) {
        const double u = rng.next_double();
        if (u < t1)
            continue;
        if (u < t2) {
            e.set_x(q, true);
        } else if (u < t3) {
            e.set_x(q, true);
            e.set_z(q, true);
        } else {
            e.set_z(q, true);
        }
    }
    return e;
}

} // namespace qecstab
