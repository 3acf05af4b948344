#pragma once

#include "cohrep/irrep.hpp"

#include <optional>
#include <vector>

namespace cohrep {

/// One copy (multiplicity index `lambda`, 1-based) of `label` inside a tensor
/// product, as an isometry from the target irrep into the product space.
///
/// isometry(i * N2 + j, k) = C^{J1 J2 J3 Lambda}_{i j k}.
struct CGBlock {
    IrrepLabel label;
    int lambda = 1;
    CMatrix isometry;
};

/// Clebsch-Gordan decomposition of J1 (x) J2.
struct CGDecomposition {
    IrrepLabel first;
    IrrepLabel second;
    /// Realized targets the blocks map from, one per distinct label.
    std::vector<RealizedIrrep> targets;
    /// Blocks in spectrum order, copies of one label adjacent.
    std::vector<CGBlock> blocks;

    /// Multiplicity of `label` in the product.
    int multiplicity(const IrrepLabel& label) const;
    /// Distinct labels with multiplicities, in spectrum order.
    std::vector<std::pair<IrrepLabel, int>> spectrum() const;
    const CGBlock& block(const IrrepLabel& label, int lambda) const;
    const RealizedIrrep& target(const IrrepLabel& label) const;
    /// C^{J1 J2 J3 Lambda}_{M1 M2 M3}, indices into the factor and target bases.
    Complex coefficient(const IrrepLabel& label, int lambda, int m1, int m2, int m3) const;
    /// All blocks side by side: a square matrix, unitary when the decomposition is complete.
    CMatrix stacked() const;
};

struct DecomposeOptions {
    /// Relative gap used to decide that Casimir eigenvalues of highest-weight
    /// vectors belong to one cluster.
    double degeneracy_gap = 1e-6;
    /// When set, only blocks of this label are built.
    std::optional<IrrepLabel> only;
};

/// Decomposes a (x) b into irreducible blocks.
///
/// Highest-weight vectors of each weight sector are the common null space of
/// the raising operators; copies are Gram-Schmidt orthonormalized in product
/// basis order and each is phased so its first nonzero component is real
/// positive. Each copy is lowered in lockstep with the target's highest-weight
/// vector to obtain the full intertwiner.
///
/// Throws DegeneracyError when a highest-weight cluster does not carry a single
/// Casimir eigenvalue.
CGDecomposition tensor_decompose(const RealizedIrrep& a, const RealizedIrrep& b, const Realizer& realizer,
                                 const DecomposeOptions& options = {});

/// Generators of the product representation, T_a (x) 1 + 1 (x) T_b.
std::vector<CMatrix> product_generators(const RealizedIrrep& a, const RealizedIrrep& b);

/// Largest Frobenius residual of (T^{12} X - X T^{3}) over generators and blocks.
double intertwining_residual(const RealizedIrrep& a, const RealizedIrrep& b, const CGDecomposition& d);

}  // namespace cohrep
