#include "cohrep/su3.hpp"

#include <algorithm>
#include <sstream>

namespace cohrep::su3 {

namespace {

std::string half(int twice) {
    if (twice % 2 == 0) {
        return std::to_string(twice / 2);
    }
    return std::to_string(twice) + "/2";
}

std::string third(int thrice) {
    if (thrice % 3 == 0) {
        return std::to_string(thrice / 3);
    }
    return std::to_string(thrice) + "/3";
}

}  // namespace

std::string to_string(const IIYLabel& s) {
    return "I=" + half(s.twice_i) + ",I3=" + half(s.twice_i3) + ",Y=" + third(s.three_y);
}

IsospinBasis iiy_basis(const RealizedIrrep& irrep) { return isospin_adapt(irrep); }

Realizer iiy_realizer(RealizeOptions options) {
    return [options](const IrrepLabel& label) {
        if (label.group != Group::SU3) {
            throw UnsupportedError("the isospin realizer only handles SU(3) irreps");
        }
        return isospin_adapt(realize_irrep(label, options)).irrep;
    };
}

int InducedContent::multiplicity(int p, int q) const {
    if (p < 0 || q < 0) {
        return 0;
    }
    switch (subgroup) {
        case Subgroup::U1xU1:
            return (p - q) % 3 == 0 ? std::min(p + 1, q + 1) : 0;
        case Subgroup::U2_in_SU3:
            return p == q ? 1 : 0;
        default:
            break;
    }
    throw UnsupportedError("no closed-form induced content for subgroup " + cohrep::to_string(subgroup));
}

InducedContent induced_content(Subgroup s) {
    if (s != Subgroup::U1xU1 && s != Subgroup::U2_in_SU3) {
        throw UnsupportedError("no closed-form induced content for subgroup " + cohrep::to_string(s));
    }
    return {s};
}

int octet_fiducial_index(OctetFiducial f) {
    const IsospinBasis b = isospin_adapt(realize_irrep(IrrepLabel::su3(1, 1)));
    const IIYLabel want = f == OctetFiducial::I3Y_charged ? IIYLabel{2, 0, 0} : IIYLabel{0, 0, 0};
    const auto it = std::find(b.states.begin(), b.states.end(), want);
    if (it == b.states.end()) {
        throw Error("octet basis lacks the requested fiducial state");
    }
    return static_cast<int>(it - b.states.begin());
}

Subgroup octet_stabilizer(OctetFiducial f) {
    return f == OctetFiducial::I3Y_charged ? Subgroup::U1xU1 : Subgroup::U2_in_SU3;
}

std::vector<PiMatrix> pi_matrices_octet(OctetFiducial f) {
    const Realizer realizer = iiy_realizer();
    const IrrepLabel octet = IrrepLabel::su3(1, 1);
    const RealizedIrrep j0 = realizer(octet);
    const Subgroup h = octet_stabilizer(f);
    CVector psi0 = CVector::Zero(j0.dimension());
    psi0(octet_fiducial_index(f)) = 1.0;

    for (const auto& coeffs : subgroup_generators(Group::SU3, h)) {
        if ((j0.combine(coeffs) * psi0).norm() > 1e-10) {
            throw Error("octet fiducial is not invariant under the declared stabilizer " + cohrep::to_string(h));
        }
    }

    const CGDecomposition d = tensor_decompose(j0, realizer(octet.conjugate()), realizer);
    std::vector<PiMatrix> out;
    for (const auto& [label, kappa] : d.spectrum()) {
        (void)kappa;
        out.push_back(compute_pi_matrix(j0, psi0, label, h, realizer));
    }
    return out;
}

}  // namespace cohrep::su3
