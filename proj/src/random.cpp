#include "cohrep/random.hpp"

#include <cmath>
#include <numbers>

namespace cohrep {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
}

CVector Rng::unit_vector(int n) {
    CVector v(n);
    for (int i = 0; i < n; ++i) {
        const double re = normal();
        const double im = normal();
        v(i) = Complex(re, im);
    }
    return v / v.norm();
}

CMatrix Rng::hermitian(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double re = normal();
            const double im = normal();
            m(i, j) = Complex(re, im);
        }
    }
    return 0.5 * (m + m.adjoint());
}

}  // namespace cohrep
