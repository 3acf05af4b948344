#pragma once

#include "cohrep/linalg.hpp"

#include <array>
#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace cohrep {

enum class Group { SU2, SU3 };

/// Identifies a UIR of SU(2) or SU(3).
///
/// SU(2) labels store twice the spin in `a` (b is zero); SU(3) labels store the
/// Dynkin pair (p, q) in (a, b).
struct IrrepLabel {
    Group group = Group::SU2;
    int a = 0;
    int b = 0;

    static IrrepLabel su2_twice(int twice_j) { return {Group::SU2, twice_j, 0}; }
    static IrrepLabel su3(int p, int q) { return {Group::SU3, p, q}; }

    int twice_j() const { return a; }
    int p() const { return a; }
    int q() const { return b; }

    /// N_J: 2J+1 for SU(2), (p+1)(q+1)(p+q+2)/2 for SU(3).
    int dimension() const;
    /// Eigenvalue of sum_a T_a T_a with T normalized as spin matrices / Gell-Mann halves.
    double casimir() const;
    IrrepLabel conjugate() const;
    bool valid() const;
    /// "1/2", "1", "(1,1)".
    std::string to_string() const;

    auto operator<=>(const IrrepLabel&) const = default;
};

/// Ordering used when listing irreps in a decomposition: by dimension, then by
/// descending p, so (3,0) precedes (0,3).
bool spectrum_order(const IrrepLabel& x, const IrrepLabel& y);

/// Weight of a basis vector: (2 M, 0) for SU(2); (2 I3, 3 Y) for SU(3).
using Weight = std::array<int, 2>;

enum class BasisTag { canonical, adapted, conjugated };

/// A UIR with explicit Hermitian generators in a weight basis (the Cartan
/// generators are diagonal).
struct RealizedIrrep {
    IrrepLabel label;
    std::vector<CMatrix> generators;
    std::vector<Weight> weights;
    BasisTag basis_tag = BasisTag::canonical;

    int dimension() const { return label.dimension(); }
    CMatrix casimir_matrix() const;
    /// exp(-i sum_a coords[a] T_a).
    CMatrix group_element(std::span<const double> coords) const;
    /// Generator combination sum_a coeffs[a] T_a.
    CMatrix combine(std::span<const Complex> coeffs) const;
};

/// A ladder operator as a complex combination of generators plus the weight
/// shift it produces.
struct LadderOperator {
    std::vector<Complex> coeffs;
    Weight shift;
};

int algebra_dimension(Group g);

/// Raising operators that annihilate exactly the highest-weight vectors:
/// T+ for SU(2); I+, U+, V+ for SU(3).
const std::vector<LadderOperator>& raising_operators(Group g);

/// Hermitian conjugates of the raising operators.
std::vector<LadderOperator> lowering_operators(Group g);

/// Structure constants f_abc with [T_a, T_b] = i f_abc T_c.
const std::vector<double>& structure_constants(Group g);

/// Largest Frobenius residual of [T_a, T_b] - i f_abc T_c over all pairs.
double structure_residual(const RealizedIrrep& irrep);

Weight highest_weight(const IrrepLabel& label);
IrrepLabel label_from_highest_weight(Group g, const Weight& w);
/// True when w is the highest weight of some irrep.
bool is_dominant(Group g, const Weight& w);

struct RealizeOptions {
    int dimension_cap = 300;
};

/// Builds generator matrices in the canonical basis.
///
/// SU(2): angular momentum matrices, basis ordered M = J, J-1, ..., -J.
/// SU(3): the (p,q) component of fund^p (x) antifund^q generated from its
/// highest-weight vector by lowering, orthonormalized weight sector by weight
/// sector. Basis ordered by (Y desc, I3 desc), then generation order.
RealizedIrrep realize_irrep(const IrrepLabel& label, const RealizeOptions& options = {});

/// Conjugate representation with generators -T^T.
RealizedIrrep conjugate(const RealizedIrrep& irrep);

/// Supplies the realization used for irreps appearing as targets of a
/// decomposition.
using Realizer = std::function<RealizedIrrep(const IrrepLabel&)>;

Realizer canonical_realizer(RealizeOptions options = {});

/// Reads weights off the diagonal of the Cartan generators.
std::vector<Weight> weights_from_generators(Group g, const std::vector<CMatrix>& generators);

}  // namespace cohrep
