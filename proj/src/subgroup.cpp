#include "cohrep/subgroup.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace cohrep {

namespace {

std::map<Weight, std::vector<int>> weight_sectors(const RealizedIrrep& irrep) {
    std::map<Weight, std::vector<int>> out;
    for (int i = 0; i < irrep.dimension(); ++i) {
        out[irrep.weights[static_cast<std::size_t>(i)]].push_back(i);
    }
    return out;
}

CMatrix restrict(const CMatrix& op, const std::vector<int>& rows, const std::vector<int>& cols) {
    CMatrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = op(rows[r], cols[c]);
        }
    }
    return out;
}

CMatrix isospin_squared(const RealizedIrrep& irrep) {
    const auto& t = irrep.generators;
    return t[0] * t[0] + t[1] * t[1] + t[2] * t[2];
}

void require_group(const RealizedIrrep& irrep, Group g, Subgroup s) {
    if (irrep.label.group != g) {
        throw UnsupportedError("subgroup " + to_string(s) + " is not supported for this group");
    }
}

}  // namespace

std::string to_string(Subgroup s) {
    switch (s) {
        case Subgroup::trivial:
            return "trivial";
        case Subgroup::U1_T3:
            return "U1_T3";
        case Subgroup::U1xU1:
            return "U1xU1";
        case Subgroup::U2_in_SU3:
            return "U2_in_SU3";
        case Subgroup::U1_center_HW:
            return "U1_center_HW";
    }
    return "unknown";
}

std::vector<std::vector<Complex>> subgroup_generators(Group g, Subgroup s) {
    auto unit = [g](int a) {
        std::vector<Complex> v(static_cast<std::size_t>(algebra_dimension(g)), 0.0);
        v[static_cast<std::size_t>(a)] = 1.0;
        return v;
    };
    switch (s) {
        case Subgroup::trivial:
            return {};
        case Subgroup::U1_T3:
            if (g == Group::SU2) {
                return {unit(2)};
            }
            break;
        case Subgroup::U1xU1:
            if (g == Group::SU3) {
                return {unit(2), unit(7)};
            }
            break;
        case Subgroup::U2_in_SU3:
            if (g == Group::SU3) {
                return {unit(0), unit(1), unit(2), unit(7)};
            }
            break;
        case Subgroup::U1_center_HW:
            break;
    }
    throw UnsupportedError("subgroup " + to_string(s) + " is not supported for this group");
}

int branching_multiplicity(const RealizedIrrep& irrep, Subgroup s, const SubIrrep& sub) {
    switch (s) {
        case Subgroup::trivial:
            if (!(sub == SubIrrep{})) {
                throw UnsupportedError("the trivial subgroup has only the trivial irrep");
            }
            return irrep.dimension();
        case Subgroup::U1_T3: {
            require_group(irrep, Group::SU2, s);
            return static_cast<int>(std::count_if(irrep.weights.begin(), irrep.weights.end(),
                                                  [&](const Weight& w) { return w[0] == sub.a; }));
        }
        case Subgroup::U1xU1: {
            require_group(irrep, Group::SU3, s);
            return static_cast<int>(std::count_if(irrep.weights.begin(), irrep.weights.end(),
                                                  [&](const Weight& w) { return w[0] == sub.a && w[1] == sub.b; }));
        }
        case Subgroup::U2_in_SU3: {
            require_group(irrep, Group::SU3, s);
            if (sub.a < 0) {
                return 0;
            }
            // Multiplets (I, Y) are counted at their top state I3 = I.
            std::vector<int> sector;
            for (int i = 0; i < irrep.dimension(); ++i) {
                const Weight& w = irrep.weights[static_cast<std::size_t>(i)];
                if (w[0] == sub.a && w[1] == sub.b) {
                    sector.push_back(i);
                }
            }
            if (sector.empty()) {
                return 0;
            }
            const CMatrix block = restrict(isospin_squared(irrep), sector, sector);
            Eigen::SelfAdjointEigenSolver<CMatrix> es(block);
            const double i = 0.5 * sub.a;
            const double target = i * (i + 1.0);
            int count = 0;
            for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
                if (std::abs(es.eigenvalues()(k) - target) < 1e-8) {
                    ++count;
                }
            }
            return count;
        }
        case Subgroup::U1_center_HW:
            break;
    }
    throw UnsupportedError("branching to " + to_string(s) + " is not supported");
}

std::vector<int> AdaptedBasis::scalar_states() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(index.size()); ++i) {
        if (index[static_cast<std::size_t>(i)].j == SubIrrep{}) {
            out.push_back(i);
        }
    }
    std::stable_sort(out.begin(), out.end(), [this](int x, int y) {
        return index[static_cast<std::size_t>(x)].mu < index[static_cast<std::size_t>(y)].mu;
    });
    return out;
}

IsospinBasis isospin_adapt(const RealizedIrrep& irrep) {
    if (irrep.label.group != Group::SU3) {
        throw UnsupportedError("isospin basis requires an SU(3) irrep");
    }
    const int n = irrep.dimension();
    const auto& t = irrep.generators;
    const CMatrix iplus = t[0] + kI * t[1];
    const CMatrix iminus = t[0] - kI * t[1];
    const auto sectors = weight_sectors(irrep);

    struct Multiplet {
        int twice_i;
        int three_y;
        std::vector<CVector> states;  // I3 descending
    };
    std::vector<Multiplet> multiplets;
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        all[static_cast<std::size_t>(i)] = i;
    }
    for (const auto& [w, sector] : sectors) {
        if (w[0] < 0) {
            continue;
        }
        const CMatrix raise = restrict(iplus, all, sector);
        const CMatrix null = null_space(raise, 1e-10);
        if (null.cols() == 0) {
            continue;
        }
        const CMatrix proj = null * null.adjoint();
        std::vector<CVector> tops;
        for (Eigen::Index k = 0; k < proj.cols() && static_cast<Eigen::Index>(tops.size()) < null.cols(); ++k) {
            CVector v = proj.col(k);
            orthogonalize_against(v, tops);
            const double nv = v.norm();
            if (nv < 1e-8) {
                continue;
            }
            v /= nv;
            fix_phase_first_nonzero(v);
            tops.push_back(v);
        }
        for (const auto& top_local : tops) {
            CVector top = CVector::Zero(n);
            for (std::size_t c = 0; c < sector.size(); ++c) {
                top(sector[c]) = top_local(static_cast<Eigen::Index>(c));
            }
            Multiplet m{w[0], w[1], {top}};
            for (int k = 0; k < w[0]; ++k) {
                CVector next = iminus * m.states.back();
                next /= next.norm();
                m.states.push_back(next);
            }
            multiplets.push_back(std::move(m));
        }
    }
    std::stable_sort(multiplets.begin(), multiplets.end(), [](const Multiplet& x, const Multiplet& y) {
        if (x.three_y != y.three_y) {
            return x.three_y > y.three_y;
        }
        return x.twice_i > y.twice_i;
    });

    IsospinBasis out;
    out.change = CMatrix::Zero(n, n);
    int col = 0;
    for (const auto& m : multiplets) {
        for (std::size_t k = 0; k < m.states.size(); ++k) {
            if (col >= n) {
                throw DegeneracyError("isospin adaptation produced too many states for " + irrep.label.to_string());
            }
            out.change.col(col++) = m.states[k];
            out.states.push_back({m.twice_i, m.twice_i - 2 * static_cast<int>(k), m.three_y});
        }
    }
    if (col != n) {
        std::ostringstream msg;
        msg << "isospin adaptation of " << irrep.label.to_string() << " found " << col << " of " << n << " states";
        throw DegeneracyError(msg.str());
    }
    const CMatrix gram = out.change.adjoint() * out.change;
    if ((gram - CMatrix::Identity(n, n)).norm() > 1e-9) {
        throw DegeneracyError("isospin basis of " + irrep.label.to_string() + " is not orthonormal");
    }

    out.irrep.label = irrep.label;
    out.irrep.basis_tag = BasisTag::adapted;
    for (const auto& g : irrep.generators) {
        out.irrep.generators.push_back(out.change.adjoint() * g * out.change);
    }
    out.irrep.weights = weights_from_generators(Group::SU3, out.irrep.generators);

    const CMatrix i2 = isospin_squared(out.irrep);
    for (int k = 0; k < n; ++k) {
        const double i = 0.5 * out.states[static_cast<std::size_t>(k)].twice_i;
        if (std::abs(i2(k, k).real() - i * (i + 1.0)) > 1e-9) {
            throw DegeneracyError("isospin basis state is not an I^2 eigenvector");
        }
    }
    return out;
}

AdaptedBasis adapt_basis(const RealizedIrrep& irrep, Subgroup s) {
    const int n = irrep.dimension();
    AdaptedBasis out;
    switch (s) {
        case Subgroup::trivial:
            out.irrep = irrep;
            out.change = CMatrix::Identity(n, n);
            for (int k = 0; k < n; ++k) {
                out.index.push_back({k + 1, {}, 0});
            }
            return out;
        case Subgroup::U1_T3:
            require_group(irrep, Group::SU2, s);
            out.irrep = irrep;
            out.irrep.basis_tag = BasisTag::adapted;
            out.change = CMatrix::Identity(n, n);
            for (int k = 0; k < n; ++k) {
                out.index.push_back({1, {irrep.weights[static_cast<std::size_t>(k)][0], 0}, 0});
            }
            return out;
        case Subgroup::U1xU1:
        case Subgroup::U2_in_SU3: {
            require_group(irrep, Group::SU3, s);
            IsospinBasis iso = isospin_adapt(irrep);
            out.irrep = std::move(iso.irrep);
            out.change = std::move(iso.change);
            // Multiplicity label: ascending I among states sharing the same subgroup irrep.
            std::map<std::pair<int, int>, std::vector<int>> groups;
            for (int k = 0; k < n; ++k) {
                const auto& st = iso.states[static_cast<std::size_t>(k)];
                const std::pair<int, int> key =
                    s == Subgroup::U1xU1 ? std::pair{st.twice_i3, st.three_y} : std::pair{st.twice_i, st.three_y};
                groups[key].push_back(k);
            }
            out.index.assign(static_cast<std::size_t>(n), {});
            for (auto& [key, members] : groups) {
                if (s == Subgroup::U1xU1) {
                    std::stable_sort(members.begin(), members.end(), [&](int x, int y) {
                        return iso.states[static_cast<std::size_t>(x)].twice_i <
                               iso.states[static_cast<std::size_t>(y)].twice_i;
                    });
                    for (std::size_t r = 0; r < members.size(); ++r) {
                        out.index[static_cast<std::size_t>(members[r])] = {static_cast<int>(r) + 1, {key.first, key.second}, 0};
                    }
                } else {
                    // Each multiplet occupies 2I+1 consecutive states; mu counts multiplets.
                    const int size = key.first + 1;
                    for (std::size_t r = 0; r < members.size(); ++r) {
                        const int k = members[r];
                        out.index[static_cast<std::size_t>(k)] = {static_cast<int>(r) / size + 1, {key.first, key.second},
                                                                  iso.states[static_cast<std::size_t>(k)].twice_i3};
                    }
                }
            }
            return out;
        }
        case Subgroup::U1_center_HW:
            break;
    }
    throw UnsupportedError("basis adaptation to " + to_string(s) + " is not supported");
}

}  // namespace cohrep
