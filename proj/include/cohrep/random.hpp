#pragma once

#include "cohrep/linalg.hpp"

#include <cstdint>
#include <random>

namespace cohrep {

/// Seeded generator whose output is identical across standard libraries: the
/// engine is mt19937_64 and the distributions are computed here rather than
/// through the implementation-defined std distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal via Box-Muller.
    double normal();
    /// Unit vector with i.i.d. complex Gaussian entries (Haar-random direction).
    CVector unit_vector(int n);
    /// Hermitian matrix with i.i.d. complex Gaussian entries above the diagonal.
    CMatrix hermitian(int n);

  private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace cohrep
