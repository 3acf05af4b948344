#include "cohrep/irrep.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>

namespace cohrep {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

std::vector<CMatrix> gell_mann_halves() {
    std::vector<CMatrix> t(8, CMatrix::Zero(3, 3));
    t[0](0, 1) = t[0](1, 0) = 1.0;
    t[1](0, 1) = -kI;
    t[1](1, 0) = kI;
    t[2](0, 0) = 1.0;
    t[2](1, 1) = -1.0;
    t[3](0, 2) = t[3](2, 0) = 1.0;
    t[4](0, 2) = -kI;
    t[4](2, 0) = kI;
    t[5](1, 2) = t[5](2, 1) = 1.0;
    t[6](1, 2) = -kI;
    t[6](2, 1) = kI;
    t[7](0, 0) = t[7](1, 1) = 1.0 / kSqrt3;
    t[7](2, 2) = -2.0 / kSqrt3;
    for (auto& m : t) {
        m *= 0.5;
    }
    return t;
}

std::vector<CMatrix> spin_matrices(int twice_j) {
    const int n = twice_j + 1;
    const double j = 0.5 * twice_j;
    CMatrix tp = CMatrix::Zero(n, n);
    CMatrix t3 = CMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        const double m = j - k;
        t3(k, k) = m;
        if (k > 0) {
            // <m+1| T+ |m>
            tp(k - 1, k) = std::sqrt((j - m) * (j + m + 1.0));
        }
    }
    CMatrix tm = tp.adjoint();
    return {(tp + tm) / 2.0, (tp - tm) / (2.0 * kI), t3};
}

/// Sum over sites of a 3x3 operator acting on each tensor factor.
CVector apply_site_sum(const CVector& v, int nsites, const std::vector<const CMatrix*>& site_ops) {
    CVector out = CVector::Zero(v.size());
    long stride = 1;
    for (int s = nsites - 1; s >= 0; --s) {
        const CMatrix& op = *site_ops[static_cast<std::size_t>(s)];
        for (long idx = 0; idx < v.size(); ++idx) {
            const Complex x = v(idx);
            if (x == Complex(0.0, 0.0)) {
                continue;
            }
            const int d = static_cast<int>((idx / stride) % 3);
            for (int t = 0; t < 3; ++t) {
                const Complex c = op(t, d);
                if (c != Complex(0.0, 0.0)) {
                    out(idx + (t - d) * stride) += c * x;
                }
            }
        }
        stride *= 3;
    }
    return out;
}

RealizedIrrep realize_su2(const IrrepLabel& label) {
    RealizedIrrep r;
    r.label = label;
    r.generators = spin_matrices(label.twice_j());
    r.weights = weights_from_generators(Group::SU2, r.generators);
    r.basis_tag = BasisTag::canonical;
    return r;
}

RealizedIrrep realize_su3(const IrrepLabel& label) {
    const int p = label.p();
    const int q = label.q();
    const int nsites = p + q;
    const int n = label.dimension();
    RealizedIrrep r;
    r.label = label;
    r.basis_tag = BasisTag::canonical;
    if (nsites == 0) {
        r.generators.assign(8, CMatrix::Zero(1, 1));
        r.weights = {Weight{0, 0}};
        return r;
    }

    const auto fund = gell_mann_halves();
    std::vector<CMatrix> anti(8);
    for (int a = 0; a < 8; ++a) {
        anti[static_cast<std::size_t>(a)] = -fund[static_cast<std::size_t>(a)].transpose();
    }
    const auto lowers = lowering_operators(Group::SU3);
    std::vector<CMatrix> fund_low;
    std::vector<CMatrix> anti_low;
    for (const auto& op : lowers) {
        CMatrix f = CMatrix::Zero(3, 3);
        CMatrix g = CMatrix::Zero(3, 3);
        for (int a = 0; a < 8; ++a) {
            f += op.coeffs[static_cast<std::size_t>(a)] * fund[static_cast<std::size_t>(a)];
            g += op.coeffs[static_cast<std::size_t>(a)] * anti[static_cast<std::size_t>(a)];
        }
        fund_low.push_back(f);
        anti_low.push_back(g);
    }

    long dim = 1;
    for (int s = 0; s < nsites; ++s) {
        dim *= 3;
    }
    // Highest weight vector u^p sbar^q.
    long hw_index = 0;
    for (int s = 0; s < nsites; ++s) {
        hw_index = hw_index * 3 + (s < p ? 0 : 2);
    }
    CVector hw = CVector::Zero(dim);
    hw(hw_index) = 1.0;

    struct Item {
        CVector vec;
        Weight w;
    };
    std::map<Weight, std::vector<CVector>> sectors;
    std::vector<Item> generated;
    std::deque<std::size_t> queue;
    const Weight top = highest_weight(label);
    sectors[top].push_back(hw);
    generated.push_back({hw, top});
    queue.push_back(0);

    std::vector<std::vector<const CMatrix*>> site_ops(lowers.size());
    for (std::size_t k = 0; k < lowers.size(); ++k) {
        for (int s = 0; s < nsites; ++s) {
            site_ops[k].push_back(s < p ? &fund_low[k] : &anti_low[k]);
        }
    }

    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < lowers.size(); ++k) {
            CVector v = apply_site_sum(generated[cur].vec, nsites, site_ops[k]);
            const double before = v.norm();
            if (before < 1e-12) {
                continue;
            }
            const Weight w{generated[cur].w[0] + lowers[k].shift[0], generated[cur].w[1] + lowers[k].shift[1]};
            auto& sec = sectors[w];
            orthogonalize_against(v, sec);
            const double after = v.norm();
            if (after < 1e-8 * std::max(1.0, before)) {
                continue;
            }
            v /= after;
            sec.push_back(v);
            generated.push_back({v, w});
            queue.push_back(generated.size() - 1);
        }
    }
    if (static_cast<int>(generated.size()) != n) {
        std::ostringstream msg;
        msg << "SU(3) realization of " << label.to_string() << " produced " << generated.size()
            << " states, expected " << n;
        throw DegeneracyError(msg.str());
    }

    // Order: Y descending, then I3 descending, then generation order.
    std::vector<Weight> keys;
    for (const auto& [w, vecs] : sectors) {
        keys.push_back(w);
    }
    std::sort(keys.begin(), keys.end(), [](const Weight& x, const Weight& y) {
        if (x[1] != y[1]) {
            return x[1] > y[1];
        }
        return x[0] > y[0];
    });
    std::vector<CVector> basis;
    std::vector<Weight> weights;
    for (const auto& w : keys) {
        for (const auto& v : sectors[w]) {
            basis.push_back(v);
            weights.push_back(w);
        }
    }
    std::map<Weight, std::vector<int>> index_of;
    for (int i = 0; i < n; ++i) {
        index_of[weights[static_cast<std::size_t>(i)]].push_back(i);
    }

    std::vector<CMatrix> low_mats;
    for (std::size_t k = 0; k < lowers.size(); ++k) {
        CMatrix m = CMatrix::Zero(n, n);
        for (int j = 0; j < n; ++j) {
            const CVector img = apply_site_sum(basis[static_cast<std::size_t>(j)], nsites, site_ops[k]);
            const Weight& wj = weights[static_cast<std::size_t>(j)];
            const Weight w{wj[0] + lowers[k].shift[0], wj[1] + lowers[k].shift[1]};
            auto it = index_of.find(w);
            if (it == index_of.end()) {
                continue;
            }
            for (int i : it->second) {
                m(i, j) = basis[static_cast<std::size_t>(i)].dot(img);
            }
        }
        low_mats.push_back(m);
    }
    // lowers are I-, U-, V-; rebuild the Hermitian generators.
    const CMatrix& im = low_mats[0];
    const CMatrix& um = low_mats[1];
    const CMatrix& vm = low_mats[2];
    r.generators.assign(8, CMatrix::Zero(n, n));
    r.generators[0] = (im.adjoint() + im) / 2.0;
    r.generators[1] = (im.adjoint() - im) / (2.0 * kI);
    r.generators[3] = (vm.adjoint() + vm) / 2.0;
    r.generators[4] = (vm.adjoint() - vm) / (2.0 * kI);
    r.generators[5] = (um.adjoint() + um) / 2.0;
    r.generators[6] = (um.adjoint() - um) / (2.0 * kI);
    for (int i = 0; i < n; ++i) {
        const Weight& w = weights[static_cast<std::size_t>(i)];
        r.generators[2](i, i) = 0.5 * w[0];
        r.generators[7](i, i) = w[1] / (2.0 * kSqrt3);
    }
    r.weights = weights;
    return r;
}

std::vector<double> compute_structure_constants(const std::vector<CMatrix>& t, double trace_norm) {
    const std::size_t d = t.size();
    std::vector<double> f(d * d * d, 0.0);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            const CMatrix comm = t[a] * t[b] - t[b] * t[a];
            for (std::size_t c = 0; c < d; ++c) {
                // Tr([Ta,Tb] Tc) = i f_abc trace_norm
                const Complex tr = (comm * t[c]).trace();
                f[(a * d + b) * d + c] = (tr / (kI * trace_norm)).real();
            }
        }
    }
    return f;
}

}  // namespace

int IrrepLabel::dimension() const {
    if (group == Group::SU2) {
        return a + 1;
    }
    return (a + 1) * (b + 1) * (a + b + 2) / 2;
}

double IrrepLabel::casimir() const {
    if (group == Group::SU2) {
        const double j = 0.5 * a;
        return j * (j + 1.0);
    }
    const double p = a;
    const double q = b;
    return (p * p + q * q + p * q + 3.0 * p + 3.0 * q) / 3.0;
}

IrrepLabel IrrepLabel::conjugate() const {
    if (group == Group::SU2) {
        return *this;
    }
    return IrrepLabel::su3(b, a);
}

bool IrrepLabel::valid() const {
    if (group == Group::SU2) {
        return a >= 0 && b == 0;
    }
    return a >= 0 && b >= 0;
}

std::string IrrepLabel::to_string() const {
    std::ostringstream s;
    if (group == Group::SU2) {
        if (a % 2 == 0) {
            s << a / 2;
        } else {
            s << a << "/2";
        }
    } else {
        s << "(" << a << "," << b << ")";
    }
    return s.str();
}

bool spectrum_order(const IrrepLabel& x, const IrrepLabel& y) {
    if (x.group != y.group) {
        return x.group < y.group;
    }
    if (x.dimension() != y.dimension()) {
        return x.dimension() < y.dimension();
    }
    if (x.a != y.a) {
        return x.a > y.a;
    }
    return x.b < y.b;
}

CMatrix RealizedIrrep::casimir_matrix() const {
    const int n = dimension();
    CMatrix c = CMatrix::Zero(n, n);
    for (const auto& t : generators) {
        c += t * t;
    }
    return c;
}

CMatrix RealizedIrrep::group_element(std::span<const double> coords) const {
    const int n = dimension();
    CMatrix x = CMatrix::Zero(n, n);
    for (std::size_t a = 0; a < generators.size() && a < coords.size(); ++a) {
        x += coords[a] * generators[a];
    }
    return expm(-kI * x);
}

CMatrix RealizedIrrep::combine(std::span<const Complex> coeffs) const {
    const int n = dimension();
    CMatrix x = CMatrix::Zero(n, n);
    for (std::size_t a = 0; a < generators.size() && a < coeffs.size(); ++a) {
        if (coeffs[a] != Complex(0.0, 0.0)) {
            x += coeffs[a] * generators[a];
        }
    }
    return x;
}

int algebra_dimension(Group g) { return g == Group::SU2 ? 3 : 8; }

const std::vector<LadderOperator>& raising_operators(Group g) {
    static const std::vector<LadderOperator> su2{{{1.0, kI, 0.0}, {2, 0}}};
    static const std::vector<LadderOperator> su3{
        // I+ = T1 + i T2
        {{1.0, kI, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, {2, 0}},
        // U+ = T6 + i T7
        {{0.0, 0.0, 0.0, 0.0, 0.0, 1.0, kI, 0.0}, {-1, 3}},
        // V+ = T4 + i T5
        {{0.0, 0.0, 0.0, 1.0, kI, 0.0, 0.0, 0.0}, {1, 3}},
    };
    return g == Group::SU2 ? su2 : su3;
}

std::vector<LadderOperator> lowering_operators(Group g) {
    std::vector<LadderOperator> out;
    for (const auto& op : raising_operators(g)) {
        LadderOperator low;
        for (const auto& c : op.coeffs) {
            low.coeffs.push_back(std::conj(c));
        }
        low.shift = {-op.shift[0], -op.shift[1]};
        out.push_back(low);
    }
    return out;
}

const std::vector<double>& structure_constants(Group g) {
    static const std::vector<double> su2 = compute_structure_constants(spin_matrices(1), 0.5);
    static const std::vector<double> su3 = compute_structure_constants(gell_mann_halves(), 0.5);
    return g == Group::SU2 ? su2 : su3;
}

double structure_residual(const RealizedIrrep& irrep) {
    const auto& f = structure_constants(irrep.label.group);
    const auto& t = irrep.generators;
    const std::size_t d = t.size();
    double worst = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            CMatrix r = t[a] * t[b] - t[b] * t[a];
            for (std::size_t c = 0; c < d; ++c) {
                const double fabc = f[(a * d + b) * d + c];
                if (fabc != 0.0) {
                    r -= kI * fabc * t[c];
                }
            }
            worst = std::max(worst, r.norm());
        }
    }
    return worst;
}

Weight highest_weight(const IrrepLabel& label) {
    if (label.group == Group::SU2) {
        return {label.a, 0};
    }
    return {label.p(), label.p() + 2 * label.q()};
}

bool is_dominant(Group g, const Weight& w) {
    if (g == Group::SU2) {
        return w[0] >= 0;
    }
    return w[0] >= 0 && w[1] >= w[0] && (w[1] - w[0]) % 2 == 0;
}

IrrepLabel label_from_highest_weight(Group g, const Weight& w) {
    if (!is_dominant(g, w)) {
        throw Error("weight is not dominant");
    }
    if (g == Group::SU2) {
        return IrrepLabel::su2_twice(w[0]);
    }
    return IrrepLabel::su3(w[0], (w[1] - w[0]) / 2);
}

RealizedIrrep realize_irrep(const IrrepLabel& label, const RealizeOptions& options) {
    if (!label.valid()) {
        throw Error("invalid irrep label " + label.to_string());
    }
    if (label.dimension() > options.dimension_cap) {
        std::ostringstream msg;
        msg << "irrep " << label.to_string() << " has dimension " << label.dimension() << " above the cap "
            << options.dimension_cap;
        throw Error(msg.str());
    }
    return label.group == Group::SU2 ? realize_su2(label) : realize_su3(label);
}

RealizedIrrep conjugate(const RealizedIrrep& irrep) {
    RealizedIrrep c;
    c.label = irrep.label.conjugate();
    for (const auto& t : irrep.generators) {
        c.generators.push_back(-t.transpose());
    }
    for (const auto& w : irrep.weights) {
        c.weights.push_back({-w[0], -w[1]});
    }
    c.basis_tag = BasisTag::conjugated;
    return c;
}

Realizer canonical_realizer(RealizeOptions options) {
    return [options](const IrrepLabel& label) { return realize_irrep(label, options); };
}

std::vector<Weight> weights_from_generators(Group g, const std::vector<CMatrix>& generators) {
    const CMatrix& t3 = generators[2];
    const Eigen::Index n = t3.rows();
    std::vector<Weight> w(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        const int twice_i3 = static_cast<int>(std::lround(2.0 * t3(i, i).real()));
        int y3 = 0;
        if (g == Group::SU3) {
            y3 = static_cast<int>(std::lround(2.0 * kSqrt3 * generators[7](i, i).real()));
        }
        w[static_cast<std::size_t>(i)] = {twice_i3, y3};
    }
    return w;
}

}  // namespace cohrep
