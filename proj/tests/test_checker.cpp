#include "cohrep/checker.hpp"
#include "cohrep/su2.hpp"
#include "cohrep/su3.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace cohrep;
using namespace cohrep::checker;

namespace {

CVector basis_state(int twice_j0, int twice_m0) {
    CVector v = CVector::Zero(twice_j0 + 1);
    v(su2::basis_index(twice_j0, twice_m0)) = 1.0;
    return v;
}

CheckReport check_su2(int twice_j0, const CVector& psi) {
    const Realizer realizer = canonical_realizer();
    return check_diagonal_representation(realizer(IrrepLabel::su2_twice(twice_j0)), psi, realizer);
}

CheckReport check_octet(su3::OctetFiducial f) {
    const Realizer realizer = su3::iiy_realizer();
    CVector psi = CVector::Zero(8);
    psi(su3::octet_fiducial_index(f)) = 1.0;
    return check_diagonal_representation(realizer(IrrepLabel::su3(1, 1)), psi, realizer);
}

std::map<std::string, Status> statuses(const Verdict& v) {
    std::map<std::string, Status> out;
    for (const auto& o : v.per_irrep) {
        out[o.label] = o.status;
    }
    return out;
}

PiMatrix make_pi(int rows, int cols, std::initializer_list<Complex> values) {
    PiMatrix p;
    p.label = IrrepLabel::su2_twice(2);
    p.entries = CMatrix::Zero(rows, cols);
    auto it = values.begin();
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            p.entries(r, c) = *it++;
        }
    }
    return p;
}

}  // namespace

TEST(Stabilizer, SU2Examples) {
    const RealizedIrrep one = realize_irrep(IrrepLabel::su2_twice(2));
    const StabilizerSpec zero = stabilizer_of(one, basis_state(2, 0));
    EXPECT_EQ(zero.subgroup, Subgroup::U1_T3);
    EXPECT_EQ(zero.case_tag, StabilizerCase::a);
    EXPECT_EQ(zero.detected_dimension, 1);

    const StabilizerSpec half = stabilizer_of(realize_irrep(IrrepLabel::su2_twice(1)), basis_state(1, 1));
    EXPECT_EQ(half.subgroup, Subgroup::U1_T3);
    EXPECT_EQ(half.case_tag, StabilizerCase::b);

    const StabilizerSpec generic = stabilizer_of(one, su2::generic_fiducial(2, 1));
    EXPECT_EQ(generic.subgroup, Subgroup::trivial);
    EXPECT_EQ(generic.detected_dimension, 0);
}

TEST(Stabilizer, OctetExamples) {
    const Realizer realizer = su3::iiy_realizer();
    const RealizedIrrep octet = realizer(IrrepLabel::su3(1, 1));
    for (auto f : {su3::OctetFiducial::I3Y_charged, su3::OctetFiducial::U2_scalar}) {
        CVector psi = CVector::Zero(8);
        psi(su3::octet_fiducial_index(f)) = 1.0;
        const StabilizerSpec s = stabilizer_of(octet, psi);
        EXPECT_EQ(s.subgroup, su3::octet_stabilizer(f));
        EXPECT_EQ(s.case_tag, StabilizerCase::a);
        EXPECT_EQ(s.detected_dimension, static_cast<int>(subgroup_generators(Group::SU3, s.subgroup).size()));
    }
}

TEST(Stabilizer, RotatedAxisIsUnsupported) {
    const RealizedIrrep one = realize_irrep(IrrepLabel::su2_twice(2));
    const std::vector<double> coords = {0.0, 0.8, 0.0};
    const CVector psi = one.group_element(coords) * basis_state(2, 0);
    const StabilizerSpec s = stabilizer_of(one, psi);
    EXPECT_EQ(s.subgroup, Subgroup::trivial);
    EXPECT_EQ(s.detected_dimension, 1);
    EXPECT_THROW(check_su2(2, psi), UnsupportedError);
}

TEST(Conditions, ConditionOne) {
    const std::vector<std::pair<IrrepLabel, int>> spectrum = {{IrrepLabel::su3(0, 0), 1}, {IrrepLabel::su3(1, 1), 2}};
    const auto out = condition_one(spectrum, [](const IrrepLabel&) { return 1; });
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[0].status, Status::ok);
    EXPECT_EQ(out[1].status, Status::missing_in_induced);
    EXPECT_EQ(out[1].required, 2);
    EXPECT_EQ(out[1].available, 1);
}

TEST(Conditions, ConditionTwo) {
    EXPECT_EQ(condition_two(make_pi(3, 1, {0.1, 0.0, 0.2})).status, Status::ok);
    const Outcome deficient = condition_two(make_pi(2, 2, {1.0, 2.0, 2.0, 4.0}));
    EXPECT_EQ(deficient.status, Status::rank_deficient);
    EXPECT_EQ(deficient.rank, 1);
    EXPECT_EQ(deficient.cols, 2);
    EXPECT_EQ(condition_two(make_pi(1, 2, {1.0, 0.5})).status, Status::rank_deficient);
    EXPECT_EQ(condition_two(make_pi(0, 1, {})).status, Status::rank_deficient);
    EXPECT_EQ(condition_two(make_pi(1, 1, {1.4e-16})).status, Status::rank_deficient);
    EXPECT_EQ(condition_two(make_pi(1, 1, {1e-10})).status, Status::ok);
    EXPECT_EQ(condition_two(make_pi(2, 2, {1.0, 0.0, 0.0, 1e-10})).rank, 1);
    EXPECT_EQ(condition_two(make_pi(2, 2, {1.0, 0.0, 0.0, 1e-10}), 1e-12).rank, 2);
}

TEST(Check, GenericSpinOneExists) {
    const CheckReport r = check_su2(2, su2::generic_fiducial(2, 1));
    EXPECT_TRUE(r.verdict.exists);
    EXPECT_EQ(r.stabilizer.subgroup, Subgroup::trivial);
    EXPECT_EQ(r.verdict.per_irrep.size(), 3u);
}

TEST(Check, SpinOneZeroWeightFails) {
    const CheckReport r = check_su2(2, basis_state(2, 0));
    EXPECT_FALSE(r.verdict.exists);
    const auto s = statuses(r.verdict);
    EXPECT_EQ(s.at("0"), Status::ok);
    EXPECT_EQ(s.at("1"), Status::rank_deficient);
    EXPECT_EQ(s.at("2"), Status::ok);
}

TEST(Check, SpinHalfExists) {
    const CheckReport r = check_su2(1, basis_state(1, 1));
    EXPECT_TRUE(r.verdict.exists);
    EXPECT_EQ(r.stabilizer.case_tag, StabilizerCase::b);
}

TEST(Check, OctetTorusFiducial) {
    const CheckReport r = check_octet(su3::OctetFiducial::I3Y_charged);
    EXPECT_FALSE(r.verdict.exists);
    const auto s = statuses(r.verdict);
    EXPECT_EQ(s.at("(0,0)"), Status::ok);
    EXPECT_EQ(s.at("(1,1)"), Status::rank_deficient);
    EXPECT_EQ(s.at("(3,0)"), Status::rank_deficient);
    EXPECT_EQ(s.at("(0,3)"), Status::rank_deficient);
    EXPECT_EQ(s.at("(2,2)"), Status::ok);
}

TEST(Check, OctetU2Fiducial) {
    const CheckReport r = check_octet(su3::OctetFiducial::U2_scalar);
    EXPECT_FALSE(r.verdict.exists);
    const auto s = statuses(r.verdict);
    EXPECT_EQ(s.at("(0,0)"), Status::ok);
    EXPECT_EQ(s.at("(1,1)"), Status::missing_in_induced);
    EXPECT_EQ(s.at("(3,0)"), Status::missing_in_induced);
    EXPECT_EQ(s.at("(0,3)"), Status::missing_in_induced);
    EXPECT_EQ(s.at("(2,2)"), Status::ok);
    for (const auto& o : r.verdict.per_irrep) {
        if (o.label == "(1,1)") {
            EXPECT_EQ(o.required, 2);
            EXPECT_EQ(o.available, 1);
        } else if (o.status == Status::missing_in_induced) {
            EXPECT_EQ(o.required, 1);
            EXPECT_EQ(o.available, 0);
        }
    }
}

TEST(Check, RejectsBadFiducial) {
    EXPECT_THROW(check_su2(2, CVector::Ones(3)), Error);
    EXPECT_THROW(check_su2(2, CVector::Zero(2)), Error);
}

TEST(Check, VerdictConsistency) {
    for (int twice_j0 = 1; twice_j0 <= 4; ++twice_j0) {
        for (int m0 = -twice_j0; m0 <= twice_j0; m0 += 2) {
            const CheckReport r = check_su2(twice_j0, basis_state(twice_j0, m0));
            bool all_ok = true;
            for (const auto& o : r.verdict.per_irrep) {
                all_ok = all_ok && o.status == Status::ok;
            }
            EXPECT_EQ(r.verdict.exists, all_ok);
            EXPECT_EQ(r.verdict.per_irrep.size(), r.spectrum.size());
            EXPECT_EQ(r.pi.size(), r.spectrum.size());
        }
    }
}

TEST(Check, AgreesWithExactRacahPattern) {
    // With psi0 = |J0, M0> every pi^(J) is one number; the representation exists
    // exactly when none of the exact values vanish.
    for (int twice_j0 = 1; twice_j0 <= 6; ++twice_j0) {
        for (int m0 = -twice_j0; m0 <= twice_j0; m0 += 2) {
            const CheckReport r = check_su2(twice_j0, basis_state(twice_j0, m0));
            const auto exact = su2::pi_matrix_example3(twice_j0, m0);
            bool nonzero = true;
            for (const auto& e : exact) {
                nonzero = nonzero && !e.is_zero();
            }
            EXPECT_EQ(r.verdict.exists, nonzero) << twice_j0 << " " << m0;
        }
    }
}

TEST(Check, AgreesWithQuadratureOracle) {
    const su2::SphereGrid grid = su2::sphere_grid(16);
    for (int j0 = 1; j0 <= 2; ++j0) {
        const auto rho = su2::fourier_oracle_rho(j0, grid, 2 * j0);
        const CheckReport r = check_su2(2 * j0, basis_state(2 * j0, 0));
        const auto s = statuses(r.verdict);
        for (int j = 0; j <= 2 * j0; ++j) {
            double weight = 0.0;
            for (const auto& c : rho.at(j)) {
                weight += c.squaredNorm();
            }
            const bool oracle_ok = weight > 1e-18;
            EXPECT_EQ(s.at(IrrepLabel::su2_twice(2 * j).to_string()) == Status::ok, oracle_ok) << j0 << " " << j;
        }
    }
}

TEST(CheckHeisenbergWeyl, VacuumExists) {
    const hw::FockSpace space(32);
    const Verdict v = check_heisenberg_weyl(hw::nonvanishing_condition(space, hw::FiducialState::vacuum(space), hw::PhaseGrid(4.0, 65)));
    EXPECT_TRUE(v.exists);
    ASSERT_EQ(v.per_irrep.size(), 1u);
    EXPECT_EQ(v.per_irrep[0].label, "phase-plane");
    EXPECT_NEAR(v.per_irrep[0].singular_values[0], std::exp(-8.0), 1e-15);
}

TEST(CheckHeisenbergWeyl, FockCirclesReported) {
    const hw::FockSpace space(32);
    const Verdict v =
        check_heisenberg_weyl(hw::nonvanishing_condition(space, hw::FiducialState::fock(space, 2), hw::PhaseGrid(4.0, 65)));
    EXPECT_FALSE(v.exists);
    int circles = 0;
    for (const auto& o : v.per_irrep) {
        EXPECT_EQ(o.status, Status::rank_deficient);
        circles += o.label.rfind("circle", 0) == 0 ? 1 : 0;
    }
    EXPECT_EQ(circles, 2);
}
