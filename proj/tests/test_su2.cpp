#include "cohrep/clebsch_gordan.hpp"
#include "cohrep/random.hpp"
#include "cohrep/su2.hpp"
#include "cohrep/unit_tensor.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace cohrep;
using namespace cohrep::su2;

TEST(RacahCG, KnownValues) {
    EXPECT_EQ(racah_cg(1, 1, 1, -1, 2, 0).to_string(), "sqrt(1/2)");
    EXPECT_EQ(racah_cg(1, 1, 1, -1, 0, 0).to_string(), "sqrt(1/2)");
    EXPECT_EQ(racah_cg(1, -1, 1, 1, 0, 0).to_string(), "-sqrt(1/2)");
    EXPECT_EQ(racah_cg(2, 2, 2, -2, 0, 0).to_string(), "sqrt(1/3)");
    EXPECT_EQ(racah_cg(2, 0, 2, 0, 0, 0).to_string(), "-sqrt(1/3)");
    EXPECT_TRUE(racah_cg(2, 0, 2, 0, 2, 0).is_zero());
    EXPECT_EQ(racah_cg(2, 0, 2, 0, 4, 0).to_string(), "sqrt(2/3)");
    EXPECT_EQ(racah_cg(2, 0, 4, 0, 2, 0).to_string(), "-sqrt(2/5)");
    EXPECT_EQ(racah_cg(2, 2, 2, 2, 4, 4).to_string(), "1");
}

TEST(RacahCG, InconsistentLabelsAreZero) {
    EXPECT_TRUE(racah_cg(1, 1, 1, 1, 0, 0).is_zero());
    EXPECT_TRUE(racah_cg(2, 0, 2, 0, 6, 0).is_zero());
    EXPECT_TRUE(racah_cg(2, 1, 2, 0, 2, 1).is_zero());
}

TEST(RacahCG, ExactNormalization) {
    for (int j1 = 0; j1 <= 4; ++j1) {
        for (int j2 = 0; j2 <= 4; ++j2) {
            for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2; j3 += 2) {
                for (int m3 = -j3; m3 <= j3; m3 += 2) {
                    Rational sum = 0;
                    for (int m1 = -j1; m1 <= j1; m1 += 2) {
                        const ExactCG c = racah_cg(j1, m1, j2, m3 - m1, j3, m3);
                        sum += c.radicand * (c.sign * c.sign);
                    }
                    EXPECT_EQ(sum, Rational(1)) << j1 << " " << j2 << " " << j3 << " " << m3;
                }
            }
        }
    }
}

TEST(RacahCG, Orthogonality) {
    for (int j1 = 0; j1 <= 4; ++j1) {
        for (int j2 = 0; j2 <= 4; ++j2) {
            for (int m1 = -j1; m1 <= j1; m1 += 2) {
                for (int n1 = -j1; n1 <= j1; n1 += 2) {
                    for (int m2 = -j2; m2 <= j2; m2 += 2) {
                        const int n2 = m1 + m2 - n1;
                        if (std::abs(n2) > j2) {
                            continue;
                        }
                        double sum = 0.0;
                        for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2; j3 += 2) {
                            sum += racah_cg(j1, m1, j2, m2, j3, m1 + m2).value() *
                                   racah_cg(j1, n1, j2, n2, j3, m1 + m2).value();
                        }
                        EXPECT_NEAR(sum, (m1 == n1) ? 1.0 : 0.0, 1e-14);
                    }
                }
            }
        }
    }
}

TEST(RacahCG, ParityRule) {
    for (int j1 = 0; j1 <= 4; ++j1) {
        for (int j2 = 0; j2 <= 4; ++j2) {
            for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2; j3 += 2) {
                for (int m1 = -j1; m1 <= j1; m1 += 2) {
                    for (int m2 = -j2; m2 <= j2; m2 += 2) {
                        const ExactCG x = racah_cg(j1, m1, j2, m2, j3, m1 + m2);
                        const ExactCG y = racah_cg(j1, -m1, j2, -m2, j3, -m1 - m2);
                        const double s = ((j1 + j2 - j3) / 2) % 2 == 0 ? 1.0 : -1.0;
                        EXPECT_EQ(x.radicand, y.radicand);
                        EXPECT_DOUBLE_EQ(x.value(), s * y.value());
                    }
                }
            }
        }
    }
}

TEST(RacahCG, ProductStaysExact) {
    const ExactCG x = racah_cg(2, 0, 4, 0, 2, 0);
    const ExactCG y = racah_cg(2, 0, 2, 0, 0, 0);
    const ExactCG p = x * y;
    EXPECT_EQ(p.sign, 1);
    EXPECT_EQ(p.radicand, Rational(2, 15));
    EXPECT_EQ(ExactCG::from_rational(Rational(-1, 3)).to_string(), "-1/3");
}

TEST(RacahCG, MatchesNumericDecomposition) {
    const Realizer realizer = canonical_realizer();
    for (int j1 = 0; j1 <= 6; ++j1) {
        for (int j2 = 0; j2 <= 6; ++j2) {
            const auto d = tensor_decompose(realizer(IrrepLabel::su2_twice(j1)), realizer(IrrepLabel::su2_twice(j2)),
                                            realizer);
            for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2; j3 += 2) {
                const IrrepLabel l = IrrepLabel::su2_twice(j3);
                for (int m1 = -j1; m1 <= j1; m1 += 2) {
                    for (int m2 = -j2; m2 <= j2; m2 += 2) {
                        const int m3 = m1 + m2;
                        if (std::abs(m3) > j3) {
                            continue;
                        }
                        const Complex num =
                            d.coefficient(l, 1, basis_index(j1, m1), basis_index(j2, m2), basis_index(j3, m3));
                        EXPECT_NEAR(num.real(), racah_cg(j1, m1, j2, m2, j3, m3).value(), 1e-12)
                            << j1 << " " << m1 << " " << j2 << " " << m2 << " " << j3;
                        EXPECT_NEAR(num.imag(), 0.0, 1e-12);
                    }
                }
            }
        }
    }
}

TEST(Examples, SpinOneZeroFiducial) {
    const auto pi = pi_matrix_example2(1);
    ASSERT_EQ(pi.size(), 3u);
    EXPECT_EQ(pi[0].to_string(), "1/3");
    EXPECT_TRUE(pi[1].is_zero());
    EXPECT_EQ(pi[2].to_string(), "-sqrt(2/9)");
}

TEST(Examples, SpinHalfFiducial) {
    const auto pi = pi_matrix_example3(1, 1);
    ASSERT_EQ(pi.size(), 2u);
    EXPECT_EQ(pi[0].to_string(), "1/2");
    EXPECT_EQ(pi[1].to_string(), "1/2");
}

TEST(Examples, ZeroWeightFiducialOddJVanish) {
    // C^{J0 J J0}_{0 0 0} vanishes for odd J0 + J + J0.
    for (int j0 = 1; j0 <= 4; ++j0) {
        const auto pi = pi_matrix_example2(j0);
        ASSERT_EQ(static_cast<int>(pi.size()), 2 * j0 + 1);
        for (int j = 0; j <= 2 * j0; ++j) {
            EXPECT_EQ(pi[static_cast<std::size_t>(j)].is_zero(), j % 2 == 1) << j0 << " " << j;
        }
    }
}

TEST(Examples, Example3NormalizationAtJZero) {
    for (int twice_j0 = 1; twice_j0 <= 6; ++twice_j0) {
        for (int m0 = -twice_j0; m0 <= twice_j0; m0 += 2) {
            EXPECT_NEAR(pi_matrix_example3(twice_j0, m0)[0].value(), 1.0 / (twice_j0 + 1), 1e-15);
        }
    }
}

TEST(Examples, GenericFiducialColumns) {
    for (int twice_j0 = 1; twice_j0 <= 4; ++twice_j0) {
        const CVector psi = generic_fiducial(twice_j0, 1);
        EXPECT_NEAR(psi.norm(), 1.0, 1e-14);
        const auto pis = pi_matrix_example1(twice_j0, psi);
        ASSERT_EQ(static_cast<int>(pis.size()), twice_j0 + 1);
        for (std::size_t k = 0; k < pis.size(); ++k) {
            const int twice_j = 2 * static_cast<int>(k);
            EXPECT_EQ(pis[k].label, IrrepLabel::su2_twice(twice_j));
            EXPECT_EQ(pis[k].rows(), twice_j + 1);
            EXPECT_EQ(pis[k].cols(), 1);
            EXPECT_GT(pis[k].entries.norm(), 1e-6);
        }
        EXPECT_NEAR(pis[0].entries(0, 0).real(), 1.0 / (twice_j0 + 1), 1e-12);
    }
}

TEST(Examples, GenericFiducialIsSeeded) {
    EXPECT_LT((generic_fiducial(4, 5) - generic_fiducial(4, 5)).norm(), 1e-300);
    EXPECT_GT((generic_fiducial(4, 5) - generic_fiducial(4, 6)).norm(), 1e-3);
}

TEST(Examples, BasisFiducialReducesToExample3) {
    // With psi0 = |J0, M0> the M = 0 row of the trivial-stabilizer column is the
    // single entry of the U(1)-adapted matrix.
    for (int twice_j0 = 2; twice_j0 <= 4; twice_j0 += 2) {
        for (int m0 = -twice_j0; m0 <= twice_j0; m0 += 2) {
            CVector psi = CVector::Zero(twice_j0 + 1);
            psi(basis_index(twice_j0, m0)) = 1.0;
            const auto pis = pi_matrix_example1(twice_j0, psi);
            const auto ex3 = pi_matrix_example3(twice_j0, m0);
            for (std::size_t j = 0; j < pis.size(); ++j) {
                const int twice_j = 2 * static_cast<int>(j);
                const Complex v = pis[j].entries(basis_index(twice_j, 0), 0);
                EXPECT_NEAR(std::abs(v), std::abs(ex3[j].value()), 1e-12);
            }
        }
    }
}

TEST(SphereGrid, WeightsAndHarmonicOrthonormality) {
    const SphereGrid grid = sphere_grid(12);
    double total = 0.0;
    for (double w : grid.weight) {
        total += w;
    }
    EXPECT_NEAR(total, 1.0, 1e-14);
    std::vector<RealizedIrrep> reps;
    for (int j = 0; j <= 4; ++j) {
        reps.push_back(realize_irrep(IrrepLabel::su2_twice(2 * j)));
    }
    for (int j = 0; j <= 4; ++j) {
        for (int k = 0; k <= 4; ++k) {
            CMatrix gram = CMatrix::Zero(2 * j + 1, 2 * k + 1);
            for (std::size_t n = 0; n < grid.size(); ++n) {
                const CVector yj = harmonics(reps[static_cast<std::size_t>(j)], grid.theta[n], grid.phi[n]);
                const CVector yk = harmonics(reps[static_cast<std::size_t>(k)], grid.theta[n], grid.phi[n]);
                gram += grid.weight[n] * yj.conjugate() * yk.transpose();
            }
            const CMatrix expected = (j == k) ? CMatrix(CMatrix::Identity(2 * j + 1, 2 * j + 1)) : CMatrix(gram * 0.0);
            EXPECT_LT((gram - expected).norm(), 1e-12) << j << " " << k;
        }
    }
}

TEST(SphereGrid, HarmonicsMatchLegendre) {
    // Y^(J)_0 = sqrt(2J+1) P_J(cos theta) with the normalized measure.
    const RealizedIrrep r = realize_irrep(IrrepLabel::su2_twice(4));
    const double theta = 0.7;
    const double x = std::cos(theta);
    const double p2 = 0.5 * (3 * x * x - 1);
    const CVector y = harmonics(r, theta, 1.3);
    EXPECT_NEAR(y(basis_index(4, 0)).real(), std::sqrt(5.0) * p2, 1e-13);
    EXPECT_NEAR(y(basis_index(4, 0)).imag(), 0.0, 1e-13);
}

TEST(FourierOracle, MatchesPiTimesUnitTensors) {
    const SphereGrid grid = sphere_grid(16);
    for (int j0 = 1; j0 <= 2; ++j0) {
        const Realizer realizer = canonical_realizer();
        const RealizedIrrep base = realizer(IrrepLabel::su2_twice(2 * j0));
        const auto d = tensor_decompose(base, realizer(IrrepLabel::su2_twice(2 * j0)), realizer);
        const UnitTensorSet tensors = unit_tensors(base, d, realizer);
        const auto rho = fourier_oracle_rho(j0, grid, 2 * j0);
        const auto pi = pi_matrix_example2(j0);
        for (int j = 0; j <= 2 * j0; ++j) {
            const IrrepLabel l = IrrepLabel::su2_twice(2 * j);
            for (int m = 0; m <= 2 * j; ++m) {
                const CMatrix expected = pi[static_cast<std::size_t>(j)].value() * tensors.at(l, 1, m).op;
                EXPECT_LT((rho.at(j)[static_cast<std::size_t>(m)] - expected).norm(), 1e-12)
                    << "J0=" << j0 << " J=" << j << " m=" << m;
            }
        }
    }
}

TEST(FourierOracle, HigherComponentsVanish) {
    const auto rho = fourier_oracle_rho(1, sphere_grid(16), 5);
    for (int j = 3; j <= 5; ++j) {
        for (const auto& c : rho.at(j)) {
            EXPECT_LT(c.norm(), 1e-12);
        }
    }
}

TEST(FourierOracle, Resynthesis) {
    Rng rng(42);
    const auto rho = fourier_oracle_rho(2, sphere_grid(16), 4);
    for (int k = 0; k < 50; ++k) {
        const double theta = std::acos(2 * rng.uniform() - 1);
        const double phi = 2 * std::numbers::pi * rng.uniform();
        EXPECT_LT((resynthesize(rho, theta, phi) - projector_at(2, theta, phi)).norm(), 1e-6);
    }
}

TEST(FourierOracle, RotationCovariance) {
    const RealizedIrrep base = realize_irrep(IrrepLabel::su2_twice(4));
    const double delta = 0.9;
    const std::vector<double> coords = {0.0, 0.0, delta};
    const CMatrix g = base.group_element(coords);
    const CMatrix rotated = g * projector_at(2, 0.4, 1.1) * g.adjoint();
    EXPECT_LT((rotated - projector_at(2, 0.4, 1.1 + delta)).norm(), 1e-12);
}

TEST(FourierOracle, CoarseGridThrows) {
    EXPECT_THROW(fourier_oracle_rho(3, sphere_grid(4), 6), Error);
    EXPECT_THROW(fourier_oracle_rho(-1, sphere_grid(4), 1), Error);
}
