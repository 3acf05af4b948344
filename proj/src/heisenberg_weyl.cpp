#include "cohrep/heisenberg_weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace cohrep::hw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(double x) {
    std::ostringstream out;
    out.precision(6);
    out << x;
    return out.str();
}

Complex beta_of(double c, double q0, double p0) { return -Complex(q0, p0) / std::sqrt(2.0 * c); }

/// Zero crossings between neighbouring samples of a grid.
std::vector<GridPoint> crossings(const PhaseGrid& g) {
    const CMatrix& v = g.values;
    const int n = g.resolution;
    const double h = g.spacing();
    double vmax = v.cwiseAbs().maxCoeff();
    double imax = v.imag().cwiseAbs().maxCoeff();
    std::vector<GridPoint> out;
    if (vmax == 0.0) {
        return out;
    }
    if (imax <= 1e-12 * vmax) {
        auto check = [&](int i1, int j1, int i2, int j2) {
            const double a = v(i1, j1).real();
            const double b = v(i2, j2).real();
            if (a * b < 0.0) {
                out.push_back({0.5 * (g.coordinate(i1) + g.coordinate(i2)), 0.5 * (g.coordinate(j1) + g.coordinate(j2)), 0.0});
            }
        };
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i + 1 < n) {
                    check(i, j, i + 1, j);
                }
                if (j + 1 < n) {
                    check(i, j, i, j + 1);
                }
            }
        }
        return out;
    }
    for (int i = 0; i + 1 < n; ++i) {
        for (int j = 0; j + 1 < n; ++j) {
            const Complex corners[4] = {v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)};
            if (std::any_of(std::begin(corners), std::end(corners), [](Complex z) { return z == Complex(0.0, 0.0); })) {
                continue;
            }
            double winding = 0.0;
            for (int k = 0; k < 4; ++k) {
                winding += std::arg(corners[(k + 1) % 4] / corners[k]);
            }
            if (std::abs(winding) > std::numbers::pi) {
                out.push_back({g.coordinate(i) + 0.5 * h, g.coordinate(j) + 0.5 * h, 0.0});
            }
        }
    }
    return out;
}

}  // namespace

FockSpace::FockSpace(int cutoff_, double c_) : cutoff(cutoff_), c(c_) {
    if (cutoff < 1) {
        throw Error("Fock cutoff must be positive");
    }
    if (!(c > 0.0)) {
        throw Error("central parameter c must be positive");
    }
}

CMatrix FockSpace::annihilation() const {
    CMatrix a = CMatrix::Zero(cutoff, cutoff);
    for (int n = 1; n < cutoff; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

CMatrix FockSpace::creation() const { return annihilation().adjoint(); }

CMatrix FockSpace::position() const {
    const CMatrix a = annihilation();
    return std::sqrt(c / 2.0) * (a + a.adjoint());
}

CMatrix FockSpace::momentum() const {
    const CMatrix a = annihilation();
    return -kI * std::sqrt(c / 2.0) * (a - a.adjoint());
}

bool FockSpace::in_trust_region(double q0, double p0) const { return (q0 * q0 + p0 * p0) / c <= cutoff / 4.0; }

FiducialState FiducialState::vacuum(const FockSpace& space) { return fock(space, 0); }

FiducialState FiducialState::fock(const FockSpace& space, int n) {
    if (n < 0 || n >= space.cutoff) {
        throw Error("Fock level " + std::to_string(n) + " outside the truncated space of size " +
                    std::to_string(space.cutoff));
    }
    FiducialState f;
    f.kind = n == 0 ? FiducialKind::vacuum : FiducialKind::fock;
    f.n = n;
    f.c = space.c;
    f.vector = CVector::Zero(space.cutoff);
    f.vector(n) = 1.0;
    return f;
}

FiducialState FiducialState::squeezed(const FockSpace& space, double eta) {
    FiducialState f;
    f.kind = FiducialKind::squeezed;
    f.eta = eta;
    f.c = space.c;
    f.vector = CVector::Zero(space.cutoff);
    const double t = -std::tanh(eta);
    // <2k|S(eta)|0> = (-tanh eta)^k sqrt((2k)!) / (2^k k!) / sqrt(cosh eta)
    double coeff = 1.0 / std::sqrt(std::cosh(eta));
    for (int k = 0; 2 * k < space.cutoff; ++k) {
        if (k > 0) {
            coeff *= t * std::sqrt((2.0 * k) * (2.0 * k - 1.0)) / (2.0 * k);
        }
        f.vector(2 * k) = coeff;
    }
    f.vector /= f.vector.norm();
    return f;
}

FiducialState FiducialState::custom(const FockSpace& space, const CVector& coefficients) {
    if (coefficients.size() > space.cutoff) {
        throw Error("custom fiducial has more coefficients than the Fock cutoff");
    }
    const double norm = coefficients.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw Error("custom fiducial must be a nonzero finite vector");
    }
    FiducialState f;
    f.kind = FiducialKind::custom;
    f.c = space.c;
    f.vector = CVector::Zero(space.cutoff);
    f.vector.head(coefficients.size()) = coefficients / norm;
    return f;
}

std::string FiducialState::name() const {
    switch (kind) {
        case FiducialKind::vacuum:
            return "vacuum";
        case FiducialKind::squeezed:
            return "squeezed:" + fmt(eta);
        case FiducialKind::fock:
            return "fock:" + std::to_string(n);
        case FiducialKind::custom:
            return "custom";
    }
    return "unknown";
}

double laguerre(int n, int alpha, double x) {
    if (n < 0) {
        return 0.0;
    }
    double l0 = 1.0;
    if (n == 0) {
        return l0;
    }
    double l1 = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        const double l2 = ((2.0 * k + 1.0 + alpha - x) * l1 - (k + alpha) * l0) / (k + 1.0);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

CMatrix displacement_exact(const FockSpace& space, double q0, double p0) {
    const int n = space.cutoff;
    const Complex beta = beta_of(space.c, q0, p0);
    const double x = std::norm(beta);
    if (x == 0.0) {
        return CMatrix::Identity(n, n);
    }
    const double logb = 0.5 * std::log(x);
    const double phase = std::arg(beta);
    CMatrix u(n, n);
    for (int k = 0; k < n; ++k) {
        // L_j^(k)(x) for j = 0 .. n-1-k by recurrence.
        double l0 = 1.0;
        double l1 = 1.0 + k - x;
        for (int j = 0; j + k < n; ++j) {
            double lj;
            if (j == 0) {
                lj = l0;
            } else if (j == 1) {
                lj = l1;
            } else {
                const double l2 = ((2.0 * (j - 1) + 1.0 + k - x) * l1 - ((j - 1) + k) * l0) / j;
                l0 = l1;
                l1 = l2;
                lj = l2;
            }
            const int m = j + k;
            const double mag = std::exp(k * logb + 0.5 * (std::lgamma(j + 1.0) - std::lgamma(m + 1.0)) - 0.5 * x) * lj;
            u(m, j) = mag * std::polar(1.0, k * phase);
            if (k > 0) {
                // (-beta^*)^k
                u(j, m) = mag * std::polar(1.0, k * (std::numbers::pi - phase));
            }
        }
    }
    return u;
}

Displacement displacement(const FockSpace& space, double q0, double p0) {
    const Complex beta = beta_of(space.c, q0, p0);
    const CMatrix a = space.annihilation();
    Displacement d;
    d.matrix = expm(beta * a.adjoint() - std::conj(beta) * a);
    const CMatrix e = displacement_exact(space, q0, p0);
    d.unitarity_defect = (e.adjoint() * e - CMatrix::Identity(space.cutoff, space.cutoff)).norm();
    d.trusted = space.in_trust_region(q0, p0);
    if (!d.trusted) {
        d.warnings.push_back("displacement (" + fmt(q0) + ", " + fmt(p0) + ") lies outside the trust region |alpha|^2 <= " +
                             fmt(space.cutoff / 4.0) + "; unitarity defect of the projected operator " +
                             fmt(d.unitarity_defect));
    }
    return d;
}

std::optional<Complex> char_function_closed(const FiducialState& f, double q0, double p0) {
    const double c = f.c;
    switch (f.kind) {
        case FiducialKind::vacuum:
            return Complex(std::exp(-(q0 * q0 + p0 * p0) / (4.0 * c)), 0.0);
        case FiducialKind::squeezed:
            return Complex(std::exp(-(std::exp(2.0 * f.eta) * q0 * q0 + std::exp(-2.0 * f.eta) * p0 * p0) / (4.0 * c)), 0.0);
        case FiducialKind::fock: {
            const double x = (q0 * q0 + p0 * p0) / (2.0 * c);
            return Complex(std::exp(-0.5 * x) * laguerre(f.n, 0, x), 0.0);
        }
        case FiducialKind::custom:
            break;
    }
    return std::nullopt;
}

CharValue char_function(const FockSpace& space, const FiducialState& fiducial, double q0, double p0) {
    if (fiducial.vector.size() != space.cutoff) {
        throw Error("fiducial does not live in this Fock space");
    }
    const Displacement d = displacement(space, q0, p0);
    CharValue out;
    out.matrix_value = fiducial.vector.dot(d.matrix * fiducial.vector);
    out.closed_form = char_function_closed(fiducial, q0, p0);
    out.value = out.closed_form ? *out.closed_form : out.matrix_value;
    out.trusted = d.trusted;
    out.unitarity_defect = d.unitarity_defect;
    out.warnings = d.warnings;
    if (out.closed_form && out.trusted && std::abs(*out.closed_form - out.matrix_value) > 1e-8) {
        out.warnings.push_back("closed form and matrix route differ by " +
                               fmt(std::abs(*out.closed_form - out.matrix_value)) + " at (" + fmt(q0) + ", " + fmt(p0) +
                               ")");
    }
    return out;
}

PhaseGrid::PhaseGrid(double extent_, int resolution_) : extent(extent_), resolution(resolution_) {
    if (!(extent > 0.0) || !std::isfinite(extent)) {
        throw Error("grid extent must be positive");
    }
    if (resolution < 3 || resolution % 2 == 0) {
        throw Error("grid resolution must be odd and at least 3");
    }
}

double PhaseGrid::spacing() const { return 2.0 * extent / (resolution - 1); }

double PhaseGrid::coordinate(int i) const { return -extent + i * spacing(); }

std::vector<double> PhaseGrid::axis() const {
    std::vector<double> out(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        out[static_cast<std::size_t>(i)] = coordinate(i);
    }
    return out;
}

PhaseGrid sample_char_function(const FockSpace& space, const FiducialState& fiducial, const PhaseGrid& grid) {
    PhaseGrid out(grid.extent, grid.resolution);
    out.values.resize(grid.resolution, grid.resolution);
    for (int i = 0; i < grid.resolution; ++i) {
        for (int j = 0; j < grid.resolution; ++j) {
            const double q0 = grid.coordinate(i);
            const double p0 = grid.coordinate(j);
            if (auto closed = char_function_closed(fiducial, q0, p0)) {
                out.values(i, j) = *closed;
            } else {
                out.values(i, j) = fiducial.vector.dot(displacement_exact(space, q0, p0) * fiducial.vector);
            }
        }
    }
    return out;
}

ZeroLocus zero_locus(int n, double c, std::optional<double> max_radius) {
    if (n < 0) {
        throw Error("Fock level must be nonnegative");
    }
    ZeroLocus out;
    out.expected = n;
    if (n == 0) {
        return out;
    }
    const double x_max = max_radius ? (*max_radius) * (*max_radius) / (2.0 * c) : 4.0 * n + 6.0;
    const int steps = 400 * (n + 1);
    const double h = x_max / steps;
    double xa = 0.0;
    double fa = laguerre(n, 0, xa);
    for (int s = 1; s <= steps; ++s) {
        const double xb = s * h;
        const double fb = laguerre(n, 0, xb);
        if (fb == 0.0) {
            out.radii.push_back(std::sqrt(2.0 * c * xb));
        } else if (fa * fb < 0.0) {
            double lo = xa;
            double hi = xb;
            double flo = fa;
            for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = laguerre(n, 0, mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (flo * fm < 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            out.radii.push_back(std::sqrt(2.0 * c * 0.5 * (lo + hi)));
        }
        xa = xb;
        fa = fb;
    }
    out.complete = static_cast<int>(out.radii.size()) == n;
    if (!out.complete) {
        out.message = "found " + std::to_string(out.radii.size()) + " of " + std::to_string(n) +
                      " zero circles inside radius " + fmt(std::sqrt(2.0 * c * x_max));
    }
    return out;
}

NonvanishingCondition nonvanishing_condition(const FockSpace& space, const FiducialState& fiducial, const PhaseGrid& grid,
                           double threshold) {
    NonvanishingCondition out;
    out.threshold = threshold;
    out.samples = sample_char_function(space, fiducial, grid);
    const CMatrix& v = out.samples.values;
    out.grid_max = v.cwiseAbs().maxCoeff();
    const double cut = threshold * out.grid_max;
    for (int i = 0; i < grid.resolution; ++i) {
        for (int j = 0; j < grid.resolution; ++j) {
            const double mag = std::abs(v(i, j));
            if (mag < cut || mag == 0.0) {
                out.failing_points.push_back({grid.coordinate(i), grid.coordinate(j), mag});
            }
        }
    }
    if (fiducial.kind == FiducialKind::fock) {
        const double reach = grid.extent * std::sqrt(2.0);
        const ZeroLocus z = zero_locus(fiducial.n, fiducial.c);
        if (!z.complete) {
            out.warnings.push_back(z.message);
        }
        for (double r : z.radii) {
            if (r <= reach) {
                out.zero_circles.push_back(r);
            }
        }
        if (!out.zero_circles.empty() && 2.0 * grid.spacing() > out.zero_circles.front()) {
            out.warnings.push_back("grid spacing " + fmt(grid.spacing()) + " is too coarse to resolve the zero circle at radius " +
                                   fmt(out.zero_circles.front()));
        }
    } else {
        const auto found = crossings(out.samples);
        out.failing_points.insert(out.failing_points.end(), found.begin(), found.end());
    }
    out.holds = out.failing_points.empty() && out.zero_circles.empty();
    return out;
}

WeylCoefficients weyl_coefficients(const FockSpace& space, const CMatrix& a, const PhaseGrid& grid) {
    if (a.rows() != space.cutoff || a.cols() != space.cutoff) {
        throw Error("operator shape does not match the Fock cutoff");
    }
    WeylCoefficients out;
    out.a = PhaseGrid(grid.extent, grid.resolution);
    out.a.values.resize(grid.resolution, grid.resolution);
    const double norm = 1.0 / (kTwoPi * space.c);
    for (int i = 0; i < grid.resolution; ++i) {
        for (int j = 0; j < grid.resolution; ++j) {
            const CMatrix u = displacement_exact(space, grid.coordinate(i), grid.coordinate(j));
            out.a.values(i, j) = norm * (u.conjugate().cwiseProduct(a)).sum();
        }
    }
    const double h = grid.spacing();
    out.trace_norm = (a.adjoint() * a).trace().real();
    out.grid_norm = kTwoPi * space.c * h * h * out.a.values.cwiseAbs2().sum();
    out.parseval_defect = out.trace_norm > 0.0 ? std::abs(out.grid_norm - out.trace_norm) / out.trace_norm : 0.0;
    if (out.parseval_defect > 0.05) {
        out.warnings.push_back("Parseval defect " + fmt(out.parseval_defect) +
                               ": grid extent is too small for the operator's phase-space support");
    }
    return out;
}

CMatrix weyl_synthesize(const FockSpace& space, const PhaseGrid& a) {
    const double h = a.spacing();
    CMatrix out = CMatrix::Zero(space.cutoff, space.cutoff);
    for (int i = 0; i < a.resolution; ++i) {
        for (int j = 0; j < a.resolution; ++j) {
            if (a.values(i, j) != Complex(0.0, 0.0)) {
                out += (h * h * a.values(i, j)) * displacement_exact(space, a.coordinate(i), a.coordinate(j));
            }
        }
    }
    return out;
}

DiagonalWeight diagonal_weight(const FockSpace& space, const CMatrix& a, const FiducialState& fiducial,
                               const PhaseGrid& grid, const WeightOptions& options) {
    DiagonalWeight out;
    out.condition = nonvanishing_condition(space, fiducial, grid, 0.0);
    out.warnings = out.condition.warnings;
    if (!out.condition.holds) {
        out.refused = true;
        std::ostringstream msg;
        msg << "characteristic function of " << fiducial.name() << " vanishes";
        if (!out.condition.zero_circles.empty()) {
            msg << " on circles of radius";
            for (double r : out.condition.zero_circles) {
                msg << " " << fmt(r);
            }
        }
        if (!out.condition.failing_points.empty()) {
            msg << " at " << out.condition.failing_points.size() << " grid locations";
        }
        msg << "; no diagonal weight exists";
        out.warnings.push_back(msg.str());
        return out;
    }

    const int n = grid.resolution;
    const double h = grid.spacing();
    const WeylCoefficients w = weyl_coefficients(space, a, grid);
    out.warnings.insert(out.warnings.end(), w.warnings.begin(), w.warnings.end());
    const CMatrix& chi = out.condition.samples.values;

    CMatrix quotient = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double amp = 1.0 / std::abs(chi(i, j));
            if (amp > options.amplification_bound) {
                ++out.excluded_points;
                continue;
            }
            out.max_amplification = std::max(out.max_amplification, amp);
            quotient(i, j) = w.a.values(i, j) / std::conj(chi(i, j));
        }
    }
    if (out.excluded_points > 0) {
        out.warnings.push_back(std::to_string(out.excluded_points) + " grid points with 1/|chi| above " +
                               fmt(options.amplification_bound) +
                               " were excluded; the weight is in general a distribution and is only approximated");
    }

    // phi[i1, i2] = (c/2pi) h^2 sum_{j,k} e^{i g_{i2} g_j} e^{-i g_{i1} g_k} Q[j, k]
    const std::vector<double> g = grid.axis();
    CMatrix eq(n, n);
    CMatrix ep(n, n);
    for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
            const double x = g[static_cast<std::size_t>(r)] * g[static_cast<std::size_t>(s)];
            eq(r, s) = std::polar(1.0, x);
            ep(r, s) = std::polar(1.0, -x);
        }
    }
    out.phi = PhaseGrid(grid.extent, n);
    out.phi.values = (space.c / kTwoPi) * h * h * (ep * quotient.transpose() * eq.transpose());

    out.reconstruction = CMatrix::Zero(space.cutoff, space.cutoff);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Complex weight = h * h * out.phi.values(i, j);
            if (weight == Complex(0.0, 0.0)) {
                continue;
            }
            const CVector psi = displacement_exact(space, grid.coordinate(i), grid.coordinate(j)) * fiducial.vector;
            out.reconstruction += weight * (psi * psi.adjoint());
        }
    }
    const double an = a.norm();
    out.residual = an > 0.0 ? (out.reconstruction - a).norm() / an : out.reconstruction.norm();
    return out;
}

CMatrix thermal_operator(const FockSpace& space, double nbar) {
    if (!(nbar >= 0.0)) {
        throw Error("mean occupation must be nonnegative");
    }
    CMatrix t = CMatrix::Zero(space.cutoff, space.cutoff);
    for (int n = 0; n < space.cutoff; ++n) {
        t(n, n) = std::pow(nbar, n) / std::pow(1.0 + nbar, n + 1);
    }
    return t;
}

}  // namespace cohrep::hw
