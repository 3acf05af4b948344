#pragma once

#include "cohrep/pi_matrix.hpp"
#include "cohrep/subgroup.hpp"

#include <vector>

namespace cohrep::su3 {

/// Isospin, its third component and hypercharge of one basis state, stored
/// as (2I, 2I3, 3Y).
using IIYLabel = IsospinState;

/// "I=1/2,I3=-1/2,Y=1/3".
std::string to_string(const IIYLabel& s);

/// Isospin-hypercharge adapted basis of an SU(3) irrep, ordered Y desc,
/// I desc, I3 desc.
IsospinBasis iiy_basis(const RealizedIrrep& irrep);

/// Realizer producing every SU(3) irrep directly in its isospin-hypercharge basis.
Realizer iiy_realizer(RealizeOptions options = {});

/// Closed-form multiplicity of (p,q) in the representation induced from the
/// trivial irrep of a torus (U1xU1) or of U(2).
struct InducedContent {
    Subgroup subgroup = Subgroup::U1xU1;
    int multiplicity(int p, int q) const;
};

InducedContent induced_content(Subgroup s);

/// The two octet fiducials: Psi_{I=1,I3=0,Y=0} with torus stabilizer, and
/// Psi_{I=0,I3=0,Y=0} with U(2) stabilizer.
enum class OctetFiducial { I3Y_charged, U2_scalar };

/// Basis index of the fiducial inside the isospin-adapted octet.
int octet_fiducial_index(OctetFiducial f);

Subgroup octet_stabilizer(OctetFiducial f);

/// pi matrices for every irrep of octet (x) octet, in spectrum order.
std::vector<PiMatrix> pi_matrices_octet(OctetFiducial f);

}  // namespace cohrep::su3
