#include "cohrep/pi_matrix.hpp"

#include <cmath>

namespace cohrep {

RVector PiMatrix::singular_values() const {
    if (entries.size() == 0) {
        return RVector();
    }
    Eigen::JacobiSVD<CMatrix> svd(entries);
    return svd.singularValues();
}

PiMatrix compute_pi_matrix(const RealizedIrrep& j0, const CVector& psi0, const IrrepLabel& j, Subgroup h,
                           const Realizer& realizer) {
    const int n0 = j0.dimension();
    if (psi0.size() != n0) {
        throw Error("fiducial vector has length " + std::to_string(psi0.size()) + ", expected " + std::to_string(n0));
    }
    if (std::abs(psi0.norm() - 1.0) > 1e-12) {
        throw Error("fiducial vector is not a unit vector");
    }
    const RealizedIrrep rep = realizer(j);
    const AdaptedBasis adapted = adapt_basis(rep, h);
    const std::vector<int> scalars = adapted.scalar_states();

    DecomposeOptions only;
    only.only = j0.label;
    const CGDecomposition d = tensor_decompose(j0, rep, realizer, only);
    const int kappa = d.multiplicity(j0.label);
    if (kappa > 0) {
        const RealizedIrrep& back = d.target(j0.label);
        for (std::size_t k = 0; k < j0.generators.size(); ++k) {
            if ((back.generators[k] - j0.generators[k]).norm() > 1e-9) {
                throw Error("pi matrix: realizer does not reproduce the basis of " + j0.label.to_string());
            }
        }
    }

    const int nj = rep.dimension();
    // bra(lambda) = psi0 (x) s_lambda in the product basis.
    CMatrix bras(static_cast<Eigen::Index>(n0) * nj, static_cast<Eigen::Index>(scalars.size()));
    for (std::size_t l = 0; l < scalars.size(); ++l) {
        bras.col(static_cast<Eigen::Index>(l)) = kron(psi0, adapted.change.col(scalars[l]));
    }

    PiMatrix pi;
    pi.label = j;
    pi.entries = CMatrix::Zero(static_cast<Eigen::Index>(scalars.size()), kappa);
    const double scale = std::sqrt(static_cast<double>(nj)) / n0;
    for (int lambda = 1; lambda <= kappa; ++lambda) {
        const CVector image = d.block(j0.label, lambda).isometry * psi0;
        pi.entries.col(lambda - 1) = scale * (bras.adjoint() * image);
    }
    return pi;
}

}  // namespace cohrep
