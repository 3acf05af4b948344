#pragma once

#include "cohrep/pi_matrix.hpp"
#include "cohrep/unit_tensor.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace cohrep::su2 {

using Rational = boost::multiprecision::cpp_rational;

/// sign * sqrt(radicand) with a rational radicand. Products stay exact; sums
/// of such values are not closed, so addition goes through value().
struct ExactCG {
    int sign = 0;
    Rational radicand = 0;

    double value() const;
    bool is_zero() const { return sign == 0; }
    /// "-sqrt(1/2)", "1", "0".
    std::string to_string() const;

    static ExactCG from_rational(const Rational& r);
    friend ExactCG operator*(const ExactCG& x, const ExactCG& y);
    bool operator==(const ExactCG& other) const = default;
};

/// <j1 m1; j2 m2 | j3 m3> in the Condon-Shortley convention, every argument
/// given as twice its value. Zero when the labels are inconsistent.
ExactCG racah_cg(int twice_j1, int twice_m1, int twice_j2, int twice_m2, int twice_j3, int twice_m3);

/// Index of basis vector M in the canonical basis (M = J, J-1, ..., -J).
int basis_index(int twice_j, int twice_m);

/// pi^(J)_11 = sqrt(2J+1)/(2J0+1) * C^{J0 J J0}_{M0 0 M0} for J = 0 .. 2 J0
/// (integer J only; entries for odd 2J are absent because J must be integral
/// to contain an M = 0 state). The returned vector is indexed by J.
std::vector<ExactCG> pi_matrix_example3(int twice_j0, int twice_m0);

/// Integer J0, fiducial |J0, 0>.
std::vector<ExactCG> pi_matrix_example2(int j0);

/// Trivial stabilizer: for every J in J0 (x) J0 (J = 0 .. 2 J0) the column
/// pi^(J)_{lambda 1}, lambda running over the 2J+1 canonical basis states of J.
std::vector<PiMatrix> pi_matrix_example1(int twice_j0, const CVector& psi0);

/// Seeded Haar-random unit vector in the spin-J0 space.
CVector generic_fiducial(int twice_j0, std::uint64_t seed);

/// Gauss-Legendre in cos(theta) times 2L uniform azimuths; weights sum to 1.
struct SphereGrid {
    int order = 0;
    std::vector<double> theta;
    std::vector<double> phi;
    std::vector<double> weight;

    std::size_t size() const { return weight.size(); }
};

SphereGrid sphere_grid(int order = 32);

/// Coset section l(theta, phi) = exp(-i phi T3) exp(-i theta T2) in the spin-J
/// representation.
CMatrix section_element(const RealizedIrrep& irrep, double theta, double phi);

/// Spherical harmonic vector Y^(J)_m(q) = sqrt(2J+1) D^J_{m,0}(l(q)), integer J.
CVector harmonics(const RealizedIrrep& irrep, double theta, double phi);

/// Fourier coefficients rho^J_m of rho0(q) = D(l(q)) |J0,0><J0,0| D(l(q))^dagger,
/// for every integer J <= max_j, by quadrature on `grid`. Entry m follows the
/// canonical basis of J.
///
/// Throws Error when the grid order is below 2 J0 + 1 or J0 is not integral.
std::map<int, std::vector<CMatrix>> fourier_oracle_rho(int j0, const SphereGrid& grid, int max_j);

/// sum_{J,m} Y^(J)_m(q) rho^J_m.
CMatrix resynthesize(const std::map<int, std::vector<CMatrix>>& rho, double theta, double phi);

/// rho0(q) for the fiducial |J0, 0>.
CMatrix projector_at(int j0, double theta, double phi);

}  // namespace cohrep::su2
