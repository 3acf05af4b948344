#include "cohrep/unit_tensor.hpp"

#include <algorithm>
#include <cmath>

namespace cohrep {

const UnitTensor& UnitTensorSet::at(const IrrepLabel& label, int lambda, int m) const {
    for (const auto& e : entries) {
        if (e.label == label && e.lambda == lambda && e.m == m) {
            return e;
        }
    }
    throw Error("no unit tensor " + label.to_string() + " copy " + std::to_string(lambda) + " component " +
                std::to_string(m));
}

UnitTensorSet unit_tensors(const RealizedIrrep& j0, const CGDecomposition& conj_product, const Realizer& realizer) {
    if (!(conj_product.first == j0.label) || !(conj_product.second == j0.label.conjugate())) {
        throw Error("unit_tensors: decomposition is not J0 (x) J0*");
    }
    UnitTensorSet set;
    set.base = j0.label;
    const int n0 = j0.dimension();
    DecomposeOptions only;
    only.only = j0.label;
    for (const auto& [label, kappa] : conj_product.spectrum()) {
        const RealizedIrrep rep = realizer(label);
        const CGDecomposition d = tensor_decompose(j0, rep, realizer, only);
        if (d.multiplicity(j0.label) != kappa) {
            throw Error("unit_tensors: multiplicity of J0 in J0 (x) " + label.to_string() +
                        " differs from the J0 (x) J0* multiplicity");
        }
        const RealizedIrrep& back = d.target(j0.label);
        for (std::size_t k = 0; k < j0.generators.size(); ++k) {
            if ((back.generators[k] - j0.generators[k]).norm() > 1e-9) {
                throw Error("unit_tensors: realizer does not reproduce the basis of " + j0.label.to_string());
            }
        }
        const int nj = rep.dimension();
        for (int lambda = 1; lambda <= kappa; ++lambda) {
            const CMatrix& iso = d.block(j0.label, lambda).isometry;
            for (int m = 0; m < nj; ++m) {
                CMatrix u = CMatrix::Zero(n0, n0);
                for (int m0 = 0; m0 < n0; ++m0) {
                    for (int m0p = 0; m0p < n0; ++m0p) {
                        u(m0p, m0) = std::conj(iso(m0 * nj + m, m0p));
                    }
                }
                set.entries.push_back({label, lambda, m, std::move(u)});
            }
        }
    }
    return set;
}

std::vector<Complex> expand_operator(const CMatrix& a, const UnitTensorSet& tensors) {
    const double n0 = tensors.base.dimension();
    if (a.rows() != a.cols() || a.rows() != static_cast<Eigen::Index>(n0)) {
        throw Error("expand_operator: operator shape does not match the base irrep");
    }
    std::vector<Complex> out;
    out.reserve(tensors.size());
    for (const auto& e : tensors.entries) {
        const double nj = e.label.dimension();
        out.push_back((nj / n0) * (e.op.adjoint() * a).trace());
    }
    return out;
}

CMatrix synthesize_operator(const std::vector<Complex>& coefficients, const UnitTensorSet& tensors) {
    const int n0 = tensors.base.dimension();
    CMatrix a = CMatrix::Zero(n0, n0);
    for (std::size_t k = 0; k < tensors.size() && k < coefficients.size(); ++k) {
        a += coefficients[k] * tensors.entries[k].op;
    }
    return a;
}

double trace_gram_defect(const UnitTensorSet& tensors) {
    const double n0 = tensors.base.dimension();
    double worst = 0.0;
    for (std::size_t i = 0; i < tensors.size(); ++i) {
        for (std::size_t j = 0; j < tensors.size(); ++j) {
            const Complex g = (tensors.entries[i].op.adjoint() * tensors.entries[j].op).trace();
            const double expected = i == j ? n0 / tensors.entries[i].label.dimension() : 0.0;
            worst = std::max(worst, std::abs(g - expected));
        }
    }
    return worst;
}

}  // namespace cohrep
