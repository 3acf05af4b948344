#include "cohrep/su2.hpp"

#include "cohrep/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace cohrep::su2 {

namespace {

using boost::multiprecision::cpp_int;

cpp_int factorial(int n) {
    cpp_int f = 1;
    for (int k = 2; k <= n; ++k) {
        f *= k;
    }
    return f;
}

bool valid_pair(int twice_j, int twice_m) {
    return twice_j >= 0 && std::abs(twice_m) <= twice_j && (twice_j + twice_m) % 2 == 0;
}

/// Legendre P_n(x) and its derivative.
std::pair<double, double> legendre(int n, double x) {
    double p0 = 1.0;
    double p1 = x;
    if (n == 0) {
        return {1.0, 0.0};
    }
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

}  // namespace

double ExactCG::value() const {
    if (sign == 0) {
        return 0.0;
    }
    return sign * std::sqrt(static_cast<double>(radicand));
}

std::string ExactCG::to_string() const {
    if (sign == 0) {
        return "0";
    }
    const cpp_int num = boost::multiprecision::numerator(radicand);
    const cpp_int den = boost::multiprecision::denominator(radicand);
    const cpp_int rn = boost::multiprecision::sqrt(num);
    const cpp_int rd = boost::multiprecision::sqrt(den);
    std::ostringstream out;
    if (sign < 0) {
        out << "-";
    }
    if (rn * rn == num && rd * rd == den) {
        out << rn;
        if (rd != 1) {
            out << "/" << rd;
        }
    } else {
        out << "sqrt(" << num;
        if (den != 1) {
            out << "/" << den;
        }
        out << ")";
    }
    return out.str();
}

ExactCG ExactCG::from_rational(const Rational& r) {
    if (r == 0) {
        return {};
    }
    return {r > 0 ? 1 : -1, r * r};
}

ExactCG operator*(const ExactCG& x, const ExactCG& y) {
    if (x.sign == 0 || y.sign == 0) {
        return {};
    }
    return {x.sign * y.sign, x.radicand * y.radicand};
}

ExactCG racah_cg(int tj1, int tm1, int tj2, int tm2, int tj3, int tm3) {
    if (!valid_pair(tj1, tm1) || !valid_pair(tj2, tm2) || !valid_pair(tj3, tm3)) {
        return {};
    }
    if (tm1 + tm2 != tm3 || tj3 < std::abs(tj1 - tj2) || tj3 > tj1 + tj2 || (tj1 + tj2 + tj3) % 2 != 0) {
        return {};
    }
    // Integer combinations (all even sums of twice-values, halved).
    const int a = (tj1 + tj2 - tj3) / 2;
    const int b = (tj1 - tj2 + tj3) / 2;
    const int c = (-tj1 + tj2 + tj3) / 2;
    const int s = (tj1 + tj2 + tj3) / 2;
    const int j1pm = (tj1 + tm1) / 2;
    const int j1mm = (tj1 - tm1) / 2;
    const int j2pm = (tj2 + tm2) / 2;
    const int j2mm = (tj2 - tm2) / 2;
    const int j3pm = (tj3 + tm3) / 2;
    const int j3mm = (tj3 - tm3) / 2;
    const int d1 = (tj3 - tj2 + tm1) / 2;
    const int d2 = (tj3 - tj1 - tm2) / 2;

    Rational prefactor = Rational(cpp_int(tj3 + 1) * factorial(a) * factorial(b) * factorial(c), factorial(s + 1));
    prefactor *= Rational(factorial(j1pm) * factorial(j1mm) * factorial(j2pm) * factorial(j2mm) * factorial(j3pm) *
                          factorial(j3mm));

    const int kmin = std::max({0, -d1, -d2});
    const int kmax = std::min({a, j1mm, j2pm});
    Rational sum = 0;
    for (int k = kmin; k <= kmax; ++k) {
        const cpp_int den = factorial(k) * factorial(a - k) * factorial(j1mm - k) * factorial(j2pm - k) *
                            factorial(d1 + k) * factorial(d2 + k);
        const Rational term(cpp_int(1), den);
        sum += (k % 2 == 0) ? term : Rational(-term);
    }
    if (sum == 0) {
        return {};
    }
    return {sum > 0 ? 1 : -1, prefactor * sum * sum};
}

int basis_index(int twice_j, int twice_m) { return (twice_j - twice_m) / 2; }

std::vector<ExactCG> pi_matrix_example3(int twice_j0, int twice_m0) {
    if (!valid_pair(twice_j0, twice_m0)) {
        throw Error("invalid fiducial label");
    }
    std::vector<ExactCG> out;
    const Rational denom = Rational(twice_j0 + 1) * Rational(twice_j0 + 1);
    for (int j = 0; 2 * j <= 2 * twice_j0; ++j) {
        const ExactCG c = racah_cg(twice_j0, twice_m0, 2 * j, 0, twice_j0, twice_m0);
        const ExactCG scale{1, Rational(2 * j + 1) / denom};
        out.push_back(scale * c);
    }
    return out;
}

std::vector<ExactCG> pi_matrix_example2(int j0) {
    if (j0 < 1) {
        throw Error("example 2 requires an integer J0 >= 1");
    }
    return pi_matrix_example3(2 * j0, 0);
}

std::vector<PiMatrix> pi_matrix_example1(int twice_j0, const CVector& psi0) {
    if (std::abs(psi0.norm() - 1.0) > 1e-12) {
        throw Error("fiducial vector is not a unit vector");
    }
    const Realizer realizer = canonical_realizer();
    const RealizedIrrep j0 = realizer(IrrepLabel::su2_twice(twice_j0));
    std::vector<PiMatrix> out;
    for (int tj = 0; tj <= 2 * twice_j0; tj += 2) {
        out.push_back(compute_pi_matrix(j0, psi0, IrrepLabel::su2_twice(tj), Subgroup::trivial, realizer));
    }
    return out;
}

CVector generic_fiducial(int twice_j0, std::uint64_t seed) {
    Rng rng(seed);
    return rng.unit_vector(twice_j0 + 1);
}

SphereGrid sphere_grid(int order) {
    if (order < 1) {
        throw Error("sphere grid order must be positive");
    }
    SphereGrid g;
    g.order = order;
    std::vector<double> x(static_cast<std::size_t>(order));
    std::vector<double> w(static_cast<std::size_t>(order));
    for (int i = 0; i < order; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        for (int it = 0; it < 100; ++it) {
            const auto [p, dp] = legendre(order, z);
            const double dz = p / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) {
                break;
            }
        }
        const auto [p, dp] = legendre(order, z);
        (void)p;
        x[static_cast<std::size_t>(i)] = z;
        w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    const int naz = 2 * order;
    for (int i = 0; i < order; ++i) {
        for (int k = 0; k < naz; ++k) {
            g.theta.push_back(std::acos(x[static_cast<std::size_t>(i)]));
            g.phi.push_back(2.0 * std::numbers::pi * k / naz);
            g.weight.push_back(0.5 * w[static_cast<std::size_t>(i)] / naz);
        }
    }
    return g;
}

CMatrix section_element(const RealizedIrrep& irrep, double theta, double phi) {
    const int n = irrep.dimension();
    CMatrix rz = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        rz(i, i) = std::exp(-kI * phi * irrep.generators[2](i, i).real());
    }
    return rz * expm(-kI * theta * irrep.generators[1]);
}

CVector harmonics(const RealizedIrrep& irrep, double theta, double phi) {
    if (irrep.label.twice_j() % 2 != 0) {
        throw Error("spherical harmonics need an integer J");
    }
    const int col = basis_index(irrep.label.twice_j(), 0);
    return std::sqrt(static_cast<double>(irrep.dimension())) * section_element(irrep, theta, phi).col(col);
}

CMatrix projector_at(int j0, double theta, double phi) {
    const RealizedIrrep rep = realize_irrep(IrrepLabel::su2_twice(2 * j0));
    const CVector v = section_element(rep, theta, phi).col(basis_index(2 * j0, 0));
    return v * v.adjoint();
}

std::map<int, std::vector<CMatrix>> fourier_oracle_rho(int j0, const SphereGrid& grid, int max_j) {
    if (j0 < 0) {
        throw Error("the oracle needs an integer J0 >= 0");
    }
    if (grid.order < 2 * j0 + 1) {
        throw Error("sphere grid order " + std::to_string(grid.order) + " is below 2 J0 + 1 = " +
                    std::to_string(2 * j0 + 1));
    }
    const RealizedIrrep base = realize_irrep(IrrepLabel::su2_twice(2 * j0));
    std::vector<RealizedIrrep> reps;
    std::map<int, std::vector<CMatrix>> rho;
    const int n0 = base.dimension();
    for (int j = 0; j <= max_j; ++j) {
        reps.push_back(realize_irrep(IrrepLabel::su2_twice(2 * j)));
        rho[j].assign(static_cast<std::size_t>(2 * j + 1), CMatrix::Zero(n0, n0));
    }
    const int fid = basis_index(2 * j0, 0);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const CVector v = section_element(base, grid.theta[k], grid.phi[k]).col(fid);
        const CMatrix r0 = v * v.adjoint();
        for (int j = 0; j <= max_j; ++j) {
            const CVector y = harmonics(reps[static_cast<std::size_t>(j)], grid.theta[k], grid.phi[k]);
            auto& slot = rho[j];
            for (int m = 0; m < y.size(); ++m) {
                slot[static_cast<std::size_t>(m)] += grid.weight[k] * std::conj(y(m)) * r0;
            }
        }
    }
    return rho;
}

CMatrix resynthesize(const std::map<int, std::vector<CMatrix>>& rho, double theta, double phi) {
    CMatrix out;
    for (const auto& [j, comps] : rho) {
        const RealizedIrrep rep = realize_irrep(IrrepLabel::su2_twice(2 * j));
        const CVector y = harmonics(rep, theta, phi);
        for (int m = 0; m < y.size(); ++m) {
            const CMatrix& c = comps[static_cast<std::size_t>(m)];
            if (out.size() == 0) {
                out = CMatrix::Zero(c.rows(), c.cols());
            }
            out += y(m) * c;
        }
    }
    return out;
}

}  // namespace cohrep::su2
