#pragma once

#include "cohrep/heisenberg_weyl.hpp"
#include "cohrep/pi_matrix.hpp"
#include "cohrep/subgroup.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cohrep::checker {

enum class Status { ok, missing_in_induced, rank_deficient };

std::string to_string(Status s);

/// Outcome for one irrep J (or, for Heisenberg-Weyl, one phase-plane locus).
struct Outcome {
    std::string label;
    Status status = Status::ok;
    /// missing_in_induced: CG multiplicity required and induced multiplicity available.
    int required = 0;
    int available = 0;
    /// rank_deficient: numerical rank, column count and singular values.
    int rank = 0;
    int cols = 0;
    std::vector<double> singular_values;
    /// Free-form note (used for phase-plane loci).
    std::string note;
};

struct Verdict {
    bool exists = true;
    std::vector<Outcome> per_irrep;
};

/// exists is recomputed from the entries.
Verdict make_verdict(std::vector<Outcome> outcomes);

/// Detects the stabilizer algebra of psi0 psi0^dagger, i.e. real combinations
/// X of generators with (1 - psi0 psi0^dagger) X psi0 = 0, and matches it to
/// the largest supported subgroup whose generators it contains. Case a when
/// every matched generator annihilates psi0, case b otherwise. Falls back to
/// the trivial subgroup; detected_dimension records the full algebra.
StabilizerSpec stabilizer_of(const RealizedIrrep& irrep, const CVector& psi0);

/// Condition (i): each J with CG multiplicity kappa in J0 (x) J0* must occur at
/// least kappa times in the induced representation.
std::vector<Outcome> condition_one(const std::vector<std::pair<IrrepLabel, int>>& spectrum,
                                   const std::function<int(const IrrepLabel&)>& induced_multiplicity);

/// Condition (ii): rows >= cols and numerical rank equal to cols. Singular
/// values count when above tol * sigma_max and above the absolute floor
/// `noise`, which keeps round-off sized matrices (|pi| ~ 1e-16) at rank 0.
Outcome condition_two(const PiMatrix& pi, double tol = 1e-9, double noise = 1e-12);

struct CheckReport {
    IrrepLabel j0;
    CVector psi0;
    StabilizerSpec stabilizer;
    std::vector<std::pair<IrrepLabel, int>> spectrum;
    std::vector<PiMatrix> pi;
    Verdict verdict;
};

/// Full decision procedure for a compact group. `j0` and `psi0` must be in
/// the basis `realizer` produces; the realizer's bases are also the ones the
/// stabilizer generators are read in.
///
/// Throws UnsupportedError when the stabilizer algebra is not one of the
/// supported subgroups.
CheckReport check_diagonal_representation(const RealizedIrrep& j0, const CVector& psi0, const Realizer& realizer);

/// Heisenberg-Weyl: condition (i) always holds; condition (ii) reduces to the
/// nonvanishing of the characteristic function. Each zero circle and each
/// failing grid location becomes a rank-deficient entry with the magnitude of
/// chi as its single singular value.
Verdict check_heisenberg_weyl(const hw::NonvanishingCondition& condition);

}  // namespace cohrep::checker
