#pragma once

#include "cohrep/clebsch_gordan.hpp"
#include "cohrep/subgroup.hpp"

namespace cohrep {

/// pi^(J): rows are the H-scalar states of J (multiplicity lambda), columns
/// the copies Lambda of J0 inside J0 (x) J.
struct PiMatrix {
    IrrepLabel label;
    CMatrix entries;

    int rows() const { return static_cast<int>(entries.rows()); }
    int cols() const { return static_cast<int>(entries.cols()); }
    /// Singular values in descending order (empty for an empty matrix).
    RVector singular_values() const;
};

/// pi^(J)_{lambda Lambda} = sqrt(N_J) / N_J0 * <psi0 (x) s_lambda | W_Lambda psi0>,
/// where W_Lambda is the J0 -> J0 (x) J isometry of copy Lambda and s_lambda
/// runs over the H-invariant vectors of the H-adapted basis of J.
///
/// `j0` and `psi0` must be expressed in the basis `realizer` produces for J0.
PiMatrix compute_pi_matrix(const RealizedIrrep& j0, const CVector& psi0, const IrrepLabel& j, Subgroup h,
                           const Realizer& realizer);

}  // namespace cohrep
