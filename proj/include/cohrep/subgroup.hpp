#pragma once

#include "cohrep/irrep.hpp"

#include <string>
#include <vector>

namespace cohrep {

/// Stabilizer subgroups the library can reduce to.
enum class Subgroup { trivial, U1_T3, U1xU1, U2_in_SU3, U1_center_HW };

std::string to_string(Subgroup s);

/// Whether psi0 is fixed strictly by its stabilizer (a) or only up to a
/// U(1) phase (b).
enum class StabilizerCase { a, b };

struct StabilizerSpec {
    Subgroup subgroup = Subgroup::trivial;
    StabilizerCase case_tag = StabilizerCase::a;
    /// Dimension of the detected stabilizer algebra of psi0 psi0^dagger; equals
    /// the subgroup dimension whenever the stabilizer is fully captured.
    int detected_dimension = 0;
};

/// Subgroup generators as coefficient vectors over the algebra basis T_a.
std::vector<std::vector<Complex>> subgroup_generators(Group g, Subgroup s);

/// Label of a UIR of a supported subgroup. U1_T3: (2M, 0); U1xU1: (2 I3, 3 Y);
/// U2_in_SU3: (2 I, 3 Y); trivial: (0, 0).
struct SubIrrep {
    int a = 0;
    int b = 0;
    bool operator==(const SubIrrep&) const = default;
};

/// Multiplicity of `sub` in the restriction of `irrep` to `s`, counted from
/// weights (tori) or from I^2 eigenvalues inside a weight sector (U(2)). By
/// reciprocity this is the multiplicity of `irrep` in the representation
/// induced from `sub`.
int branching_multiplicity(const RealizedIrrep& irrep, Subgroup s, const SubIrrep& sub = {});

/// Position of one basis vector relative to the subgroup: multiplicity index
/// mu (1-based), subgroup irrep j, and internal label m (2 I3 for U(2), else 0).
struct AdaptedIndex {
    int mu = 1;
    SubIrrep j;
    int m = 0;
};

struct AdaptedBasis {
    RealizedIrrep irrep;
    std::vector<AdaptedIndex> index;
    /// Columns are the adapted basis vectors in the input basis.
    CMatrix change;

    /// Indices of subgroup-invariant basis vectors, ordered by mu.
    std::vector<int> scalar_states() const;
};

/// Unitary change of basis that block-diagonalizes the subgroup generators.
AdaptedBasis adapt_basis(const RealizedIrrep& irrep, Subgroup s);

/// (2I, 2I3, 3Y) for one SU(3) basis state.
struct IsospinState {
    int twice_i = 0;
    int twice_i3 = 0;
    int three_y = 0;
    bool operator==(const IsospinState&) const = default;
};

struct IsospinBasis {
    RealizedIrrep irrep;
    std::vector<IsospinState> states;
    CMatrix change;
};

/// Isospin-hypercharge basis of an SU(3) irrep in weight basis. Multiplet tops
/// (I3 = I) span the null space of I+ in each weight sector; the rest of each
/// multiplet follows by I- with positive coefficients. Ordering Y desc, I desc,
/// I3 desc.
IsospinBasis isospin_adapt(const RealizedIrrep& irrep);

}  // namespace cohrep
