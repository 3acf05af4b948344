#pragma once

#include "cohrep/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cohrep::hw {

/// Truncated Fock space of the oscillator representation with central
/// parameter c: q = sqrt(c/2)(a + a^dagger), p = -i sqrt(c/2)(a - a^dagger),
/// so [q, p] = i c away from the truncation edge.
struct FockSpace {
    int cutoff = 32;
    double c = 1.0;

    FockSpace() = default;
    FockSpace(int cutoff_, double c_ = 1.0);

    CMatrix annihilation() const;
    CMatrix creation() const;
    CMatrix position() const;
    CMatrix momentum() const;
    /// (q0^2 + p0^2) / c <= cutoff / 4.
    bool in_trust_region(double q0, double p0) const;
};

enum class FiducialKind { vacuum, squeezed, fock, custom };

/// A unit vector in the truncated space together with the family it belongs to.
///
/// The squeezed state is the Gaussian whose characteristic function is
/// exp(-(e^{2 eta} q0^2 + e^{-2 eta} p0^2) / (4c)): position is squeezed for
/// eta > 0. In terms of S(z) = exp((z a^2 - z a^dagger^2)/2) it is S(eta)|0>.
struct FiducialState {
    FiducialKind kind = FiducialKind::vacuum;
    double eta = 0.0;
    int n = 0;
    double c = 1.0;
    CVector vector;

    static FiducialState vacuum(const FockSpace& space);
    static FiducialState squeezed(const FockSpace& space, double eta);
    static FiducialState fock(const FockSpace& space, int n);
    /// Normalizes `coefficients` (zero-padded to the cutoff).
    static FiducialState custom(const FockSpace& space, const CVector& coefficients);

    /// "vacuum", "squeezed:0.5", "fock:2", "custom".
    std::string name() const;
};

/// Generalized Laguerre polynomial L_n^(alpha)(x) by the three-term recurrence.
double laguerre(int n, int alpha, double x);

struct Displacement {
    CMatrix matrix;
    /// ||E^dagger E - 1||_F of the projected analytic displacement E; measures
    /// how much of U leaks past the cutoff.
    double unitarity_defect = 0.0;
    bool trusted = true;
    std::vector<std::string> warnings;
};

/// U(q0,p0) = exp(i (q0 p - p0 q) / c) as the exponential of the truncated
/// generator (exactly unitary on the truncated space).
Displacement displacement(const FockSpace& space, double q0, double p0);

/// Projection of the exact infinite-dimensional U(q0,p0) onto the truncated
/// space, from the closed-form Laguerre matrix elements.
CMatrix displacement_exact(const FockSpace& space, double q0, double p0);

/// Closed-form <psi0|U(q0,p0)|psi0> for vacuum, squeezed and Fock fiducials.
std::optional<Complex> char_function_closed(const FiducialState& fiducial, double q0, double p0);

struct CharValue {
    /// Closed form when available, otherwise the matrix route.
    Complex value;
    Complex matrix_value;
    std::optional<Complex> closed_form;
    bool trusted = true;
    double unitarity_defect = 0.0;
    std::vector<std::string> warnings;
};

/// <psi0|U(q0,p0)|psi0>; evaluates the matrix route always and the closed
/// form where one exists, warning when they disagree by more than 1e-8 or
/// when the point leaves the trust region.
CharValue char_function(const FockSpace& space, const FiducialState& fiducial, double q0, double p0);

/// Square grid over (q0, p0). values(i, j) belongs to (axis[i], axis[j]); the
/// axis runs from -extent to extent in `resolution` equal steps.
struct PhaseGrid {
    double extent = 4.0;
    int resolution = 65;
    CMatrix values;

    PhaseGrid() = default;
    /// Throws Error unless extent > 0 and resolution is odd and >= 3.
    PhaseGrid(double extent_, int resolution_);

    double spacing() const;
    double coordinate(int i) const;
    std::vector<double> axis() const;
};

/// Characteristic function over the grid: closed form for the known families,
/// projected analytic displacement for custom fiducials.
PhaseGrid sample_char_function(const FockSpace& space, const FiducialState& fiducial, const PhaseGrid& grid);

struct ZeroLocus {
    std::vector<double> radii;
    int expected = 0;
    bool complete = true;
    std::string message;
};

/// Radii sqrt(2 c x_k) of the circles on which the Fock-n characteristic
/// function vanishes, x_k the roots of L_n found by sign-change bisection.
/// By default the window reaches past the largest root.
ZeroLocus zero_locus(int n, double c = 1.0, std::optional<double> max_radius = std::nullopt);

struct GridPoint {
    double q0 = 0.0;
    double p0 = 0.0;
    double magnitude = 0.0;
};

struct NonvanishingCondition {
    bool holds = true;
    double threshold = 0.0;
    double grid_max = 0.0;
    /// Grid points below threshold, plus cell or edge midpoints where a zero
    /// crossing was detected between samples.
    std::vector<GridPoint> failing_points;
    /// Analytic zero circles meeting the grid square (Fock fiducials).
    std::vector<double> zero_circles;
    PhaseGrid samples;
    std::vector<std::string> warnings;
};

/// Tests nonvanishing of the characteristic function over the grid. A sample
/// fails when |chi| < threshold * max|chi| or chi is exactly zero. Zeros between
/// samples are found from the zero circles for Fock fiducials, from sign
/// changes for real chi, and from winding numbers around grid cells otherwise.
NonvanishingCondition nonvanishing_condition(const FockSpace& space, const FiducialState& fiducial, const PhaseGrid& grid,
                           double threshold = 1e-6);

struct WeylCoefficients {
    PhaseGrid a;
    double trace_norm = 0.0;
    double grid_norm = 0.0;
    double parseval_defect = 0.0;
    std::vector<std::string> warnings;
};

/// a(q0,p0) = Tr(U(q0,p0)^dagger A) / (2 pi c) on the grid, with the Parseval
/// comparison Tr(A^dagger A) against 2 pi c sum |a|^2 dq dp. A defect above 5%
/// attaches a warning.
WeylCoefficients weyl_coefficients(const FockSpace& space, const CMatrix& a, const PhaseGrid& grid);

/// sum a(q0,p0) U(q0,p0) dq dp over the grid.
CMatrix weyl_synthesize(const FockSpace& space, const PhaseGrid& a);

struct WeightOptions {
    /// Points with 1/|chi| above this bound are left out of the transform.
    double amplification_bound = 1e6;
};

struct DiagonalWeight {
    bool refused = false;
    NonvanishingCondition condition;
    /// phi(alpha) sampled on the same grid, alpha = (alpha1, alpha2) along (rows, cols).
    PhaseGrid phi;
    CMatrix reconstruction;
    /// ||sum phi rho - A||_F / ||A||_F.
    double residual = 0.0;
    int excluded_points = 0;
    double max_amplification = 0.0;
    std::vector<std::string> warnings;
};

/// phi(alpha) = (c / 2 pi) sum dq dp e^{i(alpha2 q0 - alpha1 p0)} a(q0,p0) / conj(chi(q0,p0))
/// as a plain Riemann sum, followed by the reconstruction
/// sum phi(alpha) U(alpha) psi0 psi0^dagger U(alpha)^dagger dalpha.
///
/// Refuses (refused = true, nothing computed) when the characteristic function
/// has structural zeros on the grid: exact zeros, zero circles or detected
/// crossings. Small but nonzero values are handled by the amplification bound.
DiagonalWeight diagonal_weight(const FockSpace& space, const CMatrix& a, const FiducialState& fiducial,
                               const PhaseGrid& grid, const WeightOptions& options = {});

/// sum_n nbar^n / (1 + nbar)^(n+1) |n><n| on the truncated space.
CMatrix thermal_operator(const FockSpace& space, double nbar);

}  // namespace cohrep::hw
