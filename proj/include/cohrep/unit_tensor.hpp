#pragma once

#include "cohrep/clebsch_gordan.hpp"

#include <vector>

namespace cohrep {

/// U^{J Lambda}_M acting on the base irrep space.
struct UnitTensor {
    IrrepLabel label;
    int lambda = 1;
    int m = 0;
    CMatrix op;
};

/// Complete trace-orthogonal operator basis on the space of a base irrep J0.
struct UnitTensorSet {
    IrrepLabel base;
    std::vector<UnitTensor> entries;

    const UnitTensor& at(const IrrepLabel& label, int lambda, int m) const;
    std::size_t size() const { return entries.size(); }
};

/// Builds U^{J Lambda}_M = sum conj(C^{J0 J J0 Lambda}_{M0 M M0'}) |M0'><M0| for
/// every J of the J0 (x) J0* spectrum carried by `conj_product`. The J0 (x) J
/// couplings are computed here; `realizer` must reproduce `j0` for label J0.
UnitTensorSet unit_tensors(const RealizedIrrep& j0, const CGDecomposition& conj_product, const Realizer& realizer);

/// a^{J Lambda}_M = (N_J / N_J0) Tr(U^dagger A), one entry per tensor in set order.
std::vector<Complex> expand_operator(const CMatrix& a, const UnitTensorSet& tensors);

/// sum a^{J Lambda}_M U^{J Lambda}_M.
CMatrix synthesize_operator(const std::vector<Complex>& coefficients, const UnitTensorSet& tensors);

/// Largest deviation of Tr(U'^dagger U) from (N_J0/N_J) delta over all pairs.
double trace_gram_defect(const UnitTensorSet& tensors);

}  // namespace cohrep
