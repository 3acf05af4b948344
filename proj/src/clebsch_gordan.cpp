#include "cohrep/clebsch_gordan.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>

namespace cohrep {

namespace {

CMatrix ladder_matrix(const std::vector<CMatrix>& gens, const std::vector<Complex>& coeffs) {
    CMatrix m = CMatrix::Zero(gens[0].rows(), gens[0].cols());
    for (std::size_t a = 0; a < gens.size(); ++a) {
        if (coeffs[a] != Complex(0.0, 0.0)) {
            m += coeffs[a] * gens[a];
        }
    }
    return m;
}

/// Highest-weight vectors of the product living in one weight sector.
std::vector<CVector> highest_weight_vectors(const std::vector<CMatrix>& raisers, const std::vector<int>& sector,
                                            Eigen::Index full_dim) {
    const auto s = static_cast<Eigen::Index>(sector.size());
    CMatrix stacked(static_cast<Eigen::Index>(raisers.size()) * full_dim, s);
    for (std::size_t k = 0; k < raisers.size(); ++k) {
        for (Eigen::Index c = 0; c < s; ++c) {
            stacked.block(static_cast<Eigen::Index>(k) * full_dim, c, full_dim, 1) = raisers[k].col(sector[static_cast<std::size_t>(c)]);
        }
    }
    const CMatrix v0 = null_space(stacked, 1e-10);
    std::vector<CVector> out;
    if (v0.cols() == 0) {
        return out;
    }
    const CMatrix proj = v0 * v0.adjoint();
    for (Eigen::Index k = 0; k < s && static_cast<Eigen::Index>(out.size()) < v0.cols(); ++k) {
        CVector v = proj.col(k);
        orthogonalize_against(v, out);
        const double nv = v.norm();
        if (nv < 1e-8) {
            continue;
        }
        v /= nv;
        fix_phase_first_nonzero(v);
        out.push_back(v);
    }
    if (static_cast<Eigen::Index>(out.size()) != v0.cols()) {
        throw DegeneracyError("could not orthonormalize highest-weight vectors of a product sector");
    }
    std::vector<CVector> full;
    for (const auto& v : out) {
        CVector f = CVector::Zero(full_dim);
        for (Eigen::Index c = 0; c < s; ++c) {
            f(sector[static_cast<std::size_t>(c)]) = v(c);
        }
        full.push_back(f);
    }
    return full;
}

/// Builds X with X e_hw = v and X T3 = T12 X by lowering both sides in lockstep.
CMatrix lockstep_intertwiner(const RealizedIrrep& target, int hw_index, const CVector& v,
                             const std::vector<CMatrix>& target_lowers, const std::vector<CMatrix>& product_lowers) {
    const int n3 = target.dimension();
    std::vector<CVector> q3;
    std::vector<CVector> z;
    CVector e = CVector::Zero(n3);
    e(hw_index) = 1.0;
    q3.push_back(e);
    z.push_back(v);
    std::deque<std::size_t> queue{0};
    while (!queue.empty() && static_cast<int>(q3.size()) < n3) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < target_lowers.size(); ++k) {
            CVector u = target_lowers[k] * q3[cur];
            CVector y = product_lowers[k] * z[cur];
            const double before = u.norm();
            if (before < 1e-12) {
                continue;
            }
            const CVector c = orthogonalize_against(u, q3);
            for (std::size_t i = 0; i < q3.size(); ++i) {
                y -= c(static_cast<Eigen::Index>(i)) * z[i];
            }
            const double after = u.norm();
            if (after < 1e-8 * std::max(1.0, before)) {
                continue;
            }
            q3.push_back(u / after);
            z.push_back(y / after);
            queue.push_back(q3.size() - 1);
        }
    }
    if (static_cast<int>(q3.size()) != n3) {
        throw DegeneracyError("lowering did not span target irrep " + target.label.to_string());
    }
    CMatrix qm(n3, n3);
    CMatrix zm(v.size(), n3);
    for (int i = 0; i < n3; ++i) {
        qm.col(i) = q3[static_cast<std::size_t>(i)];
        zm.col(i) = z[static_cast<std::size_t>(i)];
    }
    return zm * qm.adjoint();
}

}  // namespace

std::vector<CMatrix> product_generators(const RealizedIrrep& a, const RealizedIrrep& b) {
    const CMatrix ia = CMatrix::Identity(a.dimension(), a.dimension());
    const CMatrix ib = CMatrix::Identity(b.dimension(), b.dimension());
    std::vector<CMatrix> out;
    for (std::size_t k = 0; k < a.generators.size(); ++k) {
        out.push_back(kron(a.generators[k], ib) + kron(ia, b.generators[k]));
    }
    return out;
}

int CGDecomposition::multiplicity(const IrrepLabel& label) const {
    return static_cast<int>(std::count_if(blocks.begin(), blocks.end(), [&](const CGBlock& b) { return b.label == label; }));
}

std::vector<std::pair<IrrepLabel, int>> CGDecomposition::spectrum() const {
    std::vector<std::pair<IrrepLabel, int>> out;
    for (const auto& b : blocks) {
        if (out.empty() || !(out.back().first == b.label)) {
            out.emplace_back(b.label, 0);
        }
        ++out.back().second;
    }
    return out;
}

const CGBlock& CGDecomposition::block(const IrrepLabel& label, int lambda) const {
    for (const auto& b : blocks) {
        if (b.label == label && b.lambda == lambda) {
            return b;
        }
    }
    throw Error("no CG block " + label.to_string() + " copy " + std::to_string(lambda));
}

const RealizedIrrep& CGDecomposition::target(const IrrepLabel& label) const {
    for (const auto& t : targets) {
        if (t.label == label) {
            return t;
        }
    }
    throw Error("no target irrep " + label.to_string());
}

Complex CGDecomposition::coefficient(const IrrepLabel& label, int lambda, int m1, int m2, int m3) const {
    const int n2 = second.dimension();
    return block(label, lambda).isometry(m1 * n2 + m2, m3);
}

CMatrix CGDecomposition::stacked() const {
    const int n = first.dimension() * second.dimension();
    int cols = 0;
    for (const auto& b : blocks) {
        cols += static_cast<int>(b.isometry.cols());
    }
    CMatrix out(n, cols);
    int c = 0;
    for (const auto& b : blocks) {
        out.middleCols(c, b.isometry.cols()) = b.isometry;
        c += static_cast<int>(b.isometry.cols());
    }
    return out;
}

CGDecomposition tensor_decompose(const RealizedIrrep& a, const RealizedIrrep& b, const Realizer& realizer,
                                 const DecomposeOptions& options) {
    if (a.label.group != b.label.group) {
        throw Error("tensor_decompose: factors belong to different groups");
    }
    const Group g = a.label.group;
    const int na = a.dimension();
    const int nb = b.dimension();
    const Eigen::Index n = static_cast<Eigen::Index>(na) * nb;
    const auto gens = product_generators(a, b);

    std::map<Weight, std::vector<int>> sectors;
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < nb; ++j) {
            const Weight& wa = a.weights[static_cast<std::size_t>(i)];
            const Weight& wb = b.weights[static_cast<std::size_t>(j)];
            sectors[{wa[0] + wb[0], wa[1] + wb[1]}].push_back(i * nb + j);
        }
    }

    std::vector<CMatrix> raisers;
    std::vector<CMatrix> lowers;
    for (const auto& op : raising_operators(g)) {
        raisers.push_back(ladder_matrix(gens, op.coeffs));
    }
    for (const auto& op : lowering_operators(g)) {
        lowers.push_back(ladder_matrix(gens, op.coeffs));
    }

    CGDecomposition out;
    out.first = a.label;
    out.second = b.label;

    for (const auto& [w, sector] : sectors) {
        if (!is_dominant(g, w)) {
            continue;
        }
        const IrrepLabel label = label_from_highest_weight(g, w);
        if (options.only && !(*options.only == label)) {
            continue;
        }
        const auto hws = highest_weight_vectors(raisers, sector, n);
        if (hws.empty()) {
            continue;
        }

        // Casimir cluster check on the highest-weight copies.
        CMatrix v(n, static_cast<Eigen::Index>(hws.size()));
        for (std::size_t k = 0; k < hws.size(); ++k) {
            v.col(static_cast<Eigen::Index>(k)) = hws[k];
        }
        CMatrix cv = CMatrix::Zero(n, v.cols());
        for (const auto& t : gens) {
            cv += t * (t * v);
        }
        const CMatrix gram = v.adjoint() * cv;
        Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
        const double expected = label.casimir();
        for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
            const double ev = es.eigenvalues()(k);
            if (std::abs(ev - expected) > options.degeneracy_gap * std::max(1.0, std::abs(expected))) {
                std::ostringstream msg;
                msg << "Casimir cluster for " << label.to_string() << " at weight (" << w[0] << "," << w[1]
                    << ") not resolved: eigenvalues";
                for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j) {
                    msg << " " << es.eigenvalues()(j);
                }
                msg << ", expected " << expected;
                throw DegeneracyError(msg.str());
            }
        }

        RealizedIrrep target = realizer(label);
        int hw_index = -1;
        for (int i = 0; i < target.dimension(); ++i) {
            if (target.weights[static_cast<std::size_t>(i)] == w) {
                hw_index = i;
                break;
            }
        }
        if (hw_index < 0) {
            throw Error("target realization of " + label.to_string() + " has no highest-weight state");
        }
        std::vector<CMatrix> target_lowers;
        for (const auto& op : lowering_operators(g)) {
            target_lowers.push_back(ladder_matrix(target.generators, op.coeffs));
        }
        int lambda = 1;
        for (const auto& hw : hws) {
            out.blocks.push_back({label, lambda++, lockstep_intertwiner(target, hw_index, hw, target_lowers, lowers)});
        }
        out.targets.push_back(std::move(target));
    }

    std::stable_sort(out.blocks.begin(), out.blocks.end(), [](const CGBlock& x, const CGBlock& y) {
        if (x.label == y.label) {
            return x.lambda < y.lambda;
        }
        return spectrum_order(x.label, y.label);
    });
    std::sort(out.targets.begin(), out.targets.end(),
              [](const RealizedIrrep& x, const RealizedIrrep& y) { return spectrum_order(x.label, y.label); });
    return out;
}

double intertwining_residual(const RealizedIrrep& a, const RealizedIrrep& b, const CGDecomposition& d) {
    const auto gens = product_generators(a, b);
    double worst = 0.0;
    for (const auto& blk : d.blocks) {
        const RealizedIrrep& t = d.target(blk.label);
        for (std::size_t k = 0; k < gens.size(); ++k) {
            worst = std::max(worst, (gens[k] * blk.isometry - blk.isometry * t.generators[k]).norm());
        }
    }
    return worst;
}

}  // namespace cohrep
