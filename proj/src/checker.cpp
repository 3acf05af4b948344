#include "cohrep/checker.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cohrep::checker {

namespace {

std::string coord(double x) {
    std::ostringstream out;
    out.precision(10);
    out << x;
    return out.str();
}

std::vector<Subgroup> candidates(Group g) {
    if (g == Group::SU2) {
        return {Subgroup::U1_T3};
    }
    return {Subgroup::U2_in_SU3, Subgroup::U1xU1};
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::ok:
            return "ok";
        case Status::missing_in_induced:
            return "missing_in_induced";
        case Status::rank_deficient:
            return "rank_deficient";
    }
    return "unknown";
}

Verdict make_verdict(std::vector<Outcome> outcomes) {
    Verdict v;
    v.per_irrep = std::move(outcomes);
    v.exists = std::all_of(v.per_irrep.begin(), v.per_irrep.end(), [](const Outcome& o) { return o.status == Status::ok; });
    return v;
}

StabilizerSpec stabilizer_of(const RealizedIrrep& irrep, const CVector& psi0) {
    const int n = irrep.dimension();
    const int dim = algebra_dimension(irrep.label.group);
    const CMatrix proj = CMatrix::Identity(n, n) - psi0 * psi0.adjoint();
    RMatrix system(2 * n, dim);
    for (int a = 0; a < dim; ++a) {
        const CVector col = proj * (irrep.generators[static_cast<std::size_t>(a)] * psi0);
        system.block(0, a, n, 1) = col.real();
        system.block(n, a, n, 1) = col.imag();
    }
    const RMatrix algebra = real_null_space(system, 1e-9);

    StabilizerSpec spec;
    spec.detected_dimension = static_cast<int>(algebra.cols());
    for (Subgroup s : candidates(irrep.label.group)) {
        const auto gens = subgroup_generators(irrep.label.group, s);
        bool contained = true;
        for (const auto& g : gens) {
            RVector x(dim);
            for (int a = 0; a < dim; ++a) {
                x(a) = g[static_cast<std::size_t>(a)].real();
            }
            const RVector rest = x - algebra * (algebra.transpose() * x);
            if (rest.norm() > 1e-8) {
                contained = false;
                break;
            }
        }
        if (!contained) {
            continue;
        }
        spec.subgroup = s;
        spec.case_tag = StabilizerCase::a;
        for (const auto& g : gens) {
            if ((irrep.combine(g) * psi0).norm() > 1e-9) {
                spec.case_tag = StabilizerCase::b;
            }
        }
        return spec;
    }
    return spec;
}

std::vector<Outcome> condition_one(const std::vector<std::pair<IrrepLabel, int>>& spectrum,
                                   const std::function<int(const IrrepLabel&)>& induced_multiplicity) {
    std::vector<Outcome> out;
    for (const auto& [label, kappa] : spectrum) {
        Outcome o;
        o.label = label.to_string();
        o.required = kappa;
        o.available = induced_multiplicity(label);
        o.status = o.available >= kappa ? Status::ok : Status::missing_in_induced;
        out.push_back(std::move(o));
    }
    return out;
}

Outcome condition_two(const PiMatrix& pi, double tol, double noise) {
    Outcome o;
    o.label = pi.label.to_string();
    o.cols = pi.cols();
    const RVector sv = pi.singular_values();
    o.singular_values.assign(sv.data(), sv.data() + sv.size());
    o.rank = numerical_rank(sv, tol, noise);
    o.status = (pi.rows() >= pi.cols() && o.rank == pi.cols()) ? Status::ok : Status::rank_deficient;
    return o;
}

CheckReport check_diagonal_representation(const RealizedIrrep& j0, const CVector& psi0, const Realizer& realizer) {
    if (psi0.size() != j0.dimension()) {
        throw Error("fiducial vector has length " + std::to_string(psi0.size()) + ", expected " +
                    std::to_string(j0.dimension()));
    }
    if (std::abs(psi0.norm() - 1.0) > 1e-12) {
        throw Error("fiducial vector is not a unit vector");
    }
    CheckReport report;
    report.j0 = j0.label;
    report.psi0 = psi0;
    report.stabilizer = stabilizer_of(j0, psi0);
    const auto& gens = subgroup_generators(j0.label.group, report.stabilizer.subgroup);
    if (report.stabilizer.detected_dimension != static_cast<int>(gens.size())) {
        throw UnsupportedError("the fiducial's stabilizer algebra has dimension " +
                               std::to_string(report.stabilizer.detected_dimension) +
                               " and is not one of the supported subgroups (largest supported match: " +
                               cohrep::to_string(report.stabilizer.subgroup) + ")");
    }
    const Subgroup h = report.stabilizer.subgroup;

    const CGDecomposition product = tensor_decompose(j0, realizer(j0.label.conjugate()), realizer);
    report.spectrum = product.spectrum();

    std::vector<RealizedIrrep> reps;
    for (const auto& entry : report.spectrum) {
        reps.push_back(realizer(entry.first));
    }
    auto induced = [&](const IrrepLabel& label) {
        for (const auto& r : reps) {
            if (r.label == label) {
                return branching_multiplicity(r, h);
            }
        }
        return branching_multiplicity(realizer(label), h);
    };
    std::vector<Outcome> first = condition_one(report.spectrum, induced);

    std::vector<Outcome> outcomes;
    for (std::size_t k = 0; k < report.spectrum.size(); ++k) {
        PiMatrix pi = compute_pi_matrix(j0, psi0, report.spectrum[k].first, h, realizer);
        if (first[k].status == Status::ok) {
            Outcome o = condition_two(pi);
            o.required = first[k].required;
            o.available = first[k].available;
            outcomes.push_back(std::move(o));
        } else {
            outcomes.push_back(first[k]);
        }
        report.pi.push_back(std::move(pi));
    }
    report.verdict = make_verdict(std::move(outcomes));
    return report;
}

Verdict check_heisenberg_weyl(const hw::NonvanishingCondition& condition) {
    std::vector<Outcome> outcomes;
    for (double r : condition.zero_circles) {
        Outcome o;
        o.label = "circle r=" + coord(r);
        o.status = Status::rank_deficient;
        o.cols = 1;
        o.singular_values = {0.0};
        o.note = "characteristic function vanishes on this circle";
        outcomes.push_back(std::move(o));
    }
    for (const auto& p : condition.failing_points) {
        Outcome o;
        o.label = "point (" + coord(p.q0) + "," + coord(p.p0) + ")";
        o.status = Status::rank_deficient;
        o.cols = 1;
        o.singular_values = {p.magnitude};
        o.note = p.magnitude == 0.0 ? "characteristic function vanishes here" : "characteristic function below threshold";
        outcomes.push_back(std::move(o));
    }
    if (outcomes.empty()) {
        Outcome o;
        o.label = "phase-plane";
        o.rank = 1;
        o.cols = 1;
        o.singular_values = {condition.samples.values.size() > 0 ? condition.samples.values.cwiseAbs().minCoeff() : 0.0};
        o.note = "characteristic function nonzero on the sampled grid; singular value is its smallest magnitude";
        outcomes.push_back(std::move(o));
    }
    return make_verdict(std::move(outcomes));
}

}  // namespace cohrep::checker
