#include "cohrep/cli.hpp"

#include "cohrep/checker.hpp"
#include "cohrep/heisenberg_weyl.hpp"
#include "cohrep/random.hpp"
#include "cohrep/su2.hpp"
#include "cohrep/su3.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <locale>
#include <sstream>
#include <stdexcept>

namespace cohrep::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Output of one command in every format it supports.
struct Report {
    Json json;
    std::string text;
    std::optional<std::string> csv;
    int exit_code = 0;
};

double parse_double(std::string_view s) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end || s.empty()) {
        throw std::invalid_argument("not a number: '" + std::string(s) + "'");
    }
    return v;
}

int parse_int(std::string_view s) {
    int v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end || s.empty()) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

/// Integer multiple k * value for inputs "a/b" (b dividing k) or decimals.
int parse_scaled(const std::string& text, int k) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const int num = parse_int(std::string_view(text).substr(0, slash));
        const int den = parse_int(std::string_view(text).substr(slash + 1));
        if (den <= 0 || (k * num) % den != 0) {
            throw std::invalid_argument("'" + text + "' is not a multiple of 1/" + std::to_string(k));
        }
        return k * num / den;
    }
    const double v = parse_double(text) * k;
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9) {
        throw std::invalid_argument("'" + text + "' is not a multiple of 1/" + std::to_string(k));
    }
    return static_cast<int>(r);
}

std::pair<double, double> parse_pair(const std::string& text, const std::string& what) {
    const auto parts = split(text, ',');
    if (parts.size() != 2) {
        throw std::invalid_argument(what + " must be given as two comma-separated numbers");
    }
    return {parse_double(parts[0]), parse_double(parts[1])};
}

std::string describe_complex(Complex z) {
    std::string s = format_number(z.real());
    const double im = z.imag();
    s += (im < 0.0 || (im == 0.0 && std::signbit(im))) ? "-" : "+";
    s += format_number(std::abs(im)) + "i";
    return s;
}

std::string short_number(double x) {
    std::ostringstream o;
    o.imbue(std::locale::classic());
    o.precision(12);
    o << x;
    return o.str();
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json matrix_json(const CMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(complex_json(m(i, j)));
        }
        rows.push_back(row);
    }
    return rows;
}

bool is_hw_outcome(const checker::Outcome& o) { return !o.note.empty(); }

Json outcome_detail(const checker::Outcome& o) {
    Json d = Json::object();
    if (!is_hw_outcome(o)) {
        d["required"] = o.required;
        d["available"] = o.available;
    }
    if (o.status != checker::Status::missing_in_induced) {
        d["rank"] = o.rank;
        d["cols"] = o.cols;
        d["singular_values"] = o.singular_values;
    }
    if (!o.note.empty()) {
        d["note"] = o.note;
    }
    return d;
}

Json verdict_json(const checker::Verdict& v) {
    Json per = Json::array();
    for (const auto& o : v.per_irrep) {
        per.push_back({{"label", o.label}, {"status", checker::to_string(o.status)}, {"detail", outcome_detail(o)}});
    }
    return {{"exists", v.exists}, {"per_irrep", per}};
}

std::string outcome_text(const checker::Outcome& o, bool compact_group) {
    std::ostringstream t;
    t << (compact_group ? "J=" : "") << o.label << ": " << checker::to_string(o.status);
    if (o.status == checker::Status::missing_in_induced) {
        t << " (induced multiplicity " << o.available << " < required " << o.required << ")";
    } else {
        t << " (";
        if (compact_group) {
            t << "multiplicity " << o.available << " >= " << o.required << ", ";
        }
        t << "rank " << o.rank << " of " << o.cols << " columns; singular values";
        if (o.singular_values.empty()) {
            t << " none";
        }
        for (double s : o.singular_values) {
            t << " " << short_number(s);
        }
        t << ")";
    }
    if (!o.note.empty()) {
        t << " - " << o.note;
    }
    return t.str();
}

std::string verdict_csv(const checker::Verdict& v) {
    std::ostringstream c;
    c << "label,status,required,available,rank,cols,singular_values\n";
    for (const auto& o : v.per_irrep) {
        c << '"' << o.label << "\"," << checker::to_string(o.status) << "," << o.required << "," << o.available << ","
          << o.rank << "," << o.cols << ",";
        for (std::size_t k = 0; k < o.singular_values.size(); ++k) {
            c << (k ? ";" : "") << format_number(o.singular_values[k]);
        }
        c << "\n";
    }
    return c.str();
}

std::string pi_text(const PiMatrix& pi) {
    std::ostringstream t;
    t << "pi^(" << pi.label.to_string() << ") [" << pi.rows() << " x " << pi.cols() << "]";
    if (pi.entries.size() == 0) {
        t << " (empty)\n";
        return t.str();
    }
    t << ":\n";
    for (int i = 0; i < pi.rows(); ++i) {
        t << "  ";
        for (int j = 0; j < pi.cols(); ++j) {
            const Complex z = pi.entries(i, j);
            t << (j ? "  " : "") << short_number(z.real());
            if (std::abs(z.imag()) > 1e-15) {
                t << (z.imag() < 0 ? "-" : "+") << short_number(std::abs(z.imag())) << "i";
            }
        }
        t << "\n";
    }
    return t.str();
}

Json pi_json(const PiMatrix& pi) {
    const RVector sv = pi.singular_values();
    return {{"label", pi.label.to_string()},
            {"rows", pi.rows()},
            {"cols", pi.cols()},
            {"entries", matrix_json(pi.entries)},
            {"singular_values", std::vector<double>(sv.data(), sv.data() + sv.size())}};
}

CVector parse_custom(const std::string& body, int n) {
    const auto parts = split(body, ',');
    if (static_cast<int>(parts.size()) != n) {
        throw std::invalid_argument("custom fiducial needs " + std::to_string(n) + " comma-separated components, got " +
                                    std::to_string(parts.size()));
    }
    CVector v(n);
    for (int i = 0; i < n; ++i) {
        v(i) = parse_complex(parts[static_cast<std::size_t>(i)]);
    }
    const double norm = v.norm();
    if (!(norm > 0.0)) {
        throw std::invalid_argument("custom fiducial must be nonzero");
    }
    return v / norm;
}

struct CompactSetup {
    RealizedIrrep j0;
    CVector psi0;
    Realizer realizer;
    Json config;
};

IrrepLabel compact_label(const RunConfig& cfg) {
    if (cfg.group == "su2") {
        if (cfg.j0.empty()) {
            throw std::invalid_argument("su2 requires --j0");
        }
        const int tj = parse_twice(cfg.j0);
        if (tj < 0) {
            throw std::invalid_argument("--j0 must be nonnegative");
        }
        return IrrepLabel::su2_twice(tj);
    }
    if (cfg.irrep.empty()) {
        throw std::invalid_argument("su3 requires --irrep p,q");
    }
    const auto parts = split(cfg.irrep, ',');
    if (parts.size() != 2) {
        throw std::invalid_argument("--irrep must be given as p,q");
    }
    const int p = parse_int(parts[0]);
    const int q = parse_int(parts[1]);
    if (p < 0 || q < 0) {
        throw std::invalid_argument("--irrep components must be nonnegative");
    }
    return IrrepLabel::su3(p, q);
}

CompactSetup compact_setup(const RunConfig& cfg, bool need_fiducial) {
    CompactSetup s;
    const IrrepLabel label = compact_label(cfg);
    s.realizer = cfg.group == "su2" ? canonical_realizer() : su3::iiy_realizer();
    s.j0 = s.realizer(label);
    s.config["group"] = cfg.group;
    if (cfg.group == "su2") {
        s.config["j0"] = label.to_string();
    } else {
        s.config["irrep"] = label.to_string();
    }
    if (!need_fiducial) {
        return s;
    }
    const int n = s.j0.dimension();
    const std::string& f = cfg.fiducial;
    const auto colon = f.find(':');
    const std::string kind = f.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : f.substr(colon + 1);
    std::uint64_t seed = cfg.seed;
    if (kind == "generic") {
        if (!arg.empty()) {
            seed = static_cast<std::uint64_t>(parse_int(arg));
        }
        Rng rng(seed);
        s.psi0 = rng.unit_vector(n);
        s.config["fiducial"] = "generic";
        s.config["seed"] = seed;
        return s;
    }
    s.config["fiducial"] = f;
    if (kind == "custom") {
        s.psi0 = parse_custom(arg, n);
        return s;
    }
    s.psi0 = CVector::Zero(n);
    if (cfg.group == "su2") {
        if (kind != "canonical" || arg.empty()) {
            throw std::invalid_argument("su2 fiducials: canonical:M, generic[:seed], custom:c1,c2,...");
        }
        const int tm = parse_twice(arg);
        if (std::abs(tm) > label.twice_j() || (label.twice_j() + tm) % 2 != 0) {
            throw std::invalid_argument("M=" + arg + " is not a weight of J0=" + label.to_string());
        }
        s.psi0(su2::basis_index(label.twice_j(), tm)) = 1.0;
        return s;
    }
    IsospinState want;
    if (kind == "i3y-charged") {
        want = {2, 0, 0};
    } else if (kind == "u2-scalar") {
        want = {0, 0, 0};
    } else if (kind == "iiy") {
        const auto parts = split(arg, ',');
        if (parts.size() != 3) {
            throw std::invalid_argument("iiy fiducial must be given as iiy:I,I3,Y");
        }
        want = {parse_twice(parts[0]), parse_twice(parts[1]), parse_thrice(parts[2])};
    } else {
        throw std::invalid_argument(
            "su3 fiducials: i3y-charged, u2-scalar, iiy:I,I3,Y, generic[:seed], custom:c1,c2,...");
    }
    const IsospinBasis iso = isospin_adapt(realize_irrep(label));
    int found = -1;
    for (int i = 0; i < n; ++i) {
        if (iso.states[static_cast<std::size_t>(i)] == want) {
            if (found >= 0) {
                throw std::invalid_argument("state " + su3::to_string(want) + " occurs more than once in " +
                                            label.to_string() + "; use custom:");
            }
            found = i;
        }
    }
    if (found < 0) {
        throw std::invalid_argument("irrep " + label.to_string() + " has no state " + su3::to_string(want));
    }
    s.psi0(found) = 1.0;
    return s;
}

std::string spectrum_text(const std::vector<std::pair<IrrepLabel, int>>& spectrum) {
    std::ostringstream t;
    bool first = true;
    for (const auto& [label, mult] : spectrum) {
        for (int k = 0; k < mult; ++k) {
            t << (first ? "" : " ") << label.to_string();
            first = false;
        }
    }
    return t.str();
}

Json spectrum_json(const std::vector<std::pair<IrrepLabel, int>>& spectrum) {
    Json arr = Json::array();
    for (const auto& [label, mult] : spectrum) {
        arr.push_back({{"label", label.to_string()}, {"multiplicity", mult}, {"dimension", label.dimension()}});
    }
    return arr;
}

Report cmd_check_compact(const RunConfig& cfg, bool pi_only) {
    const CompactSetup s = compact_setup(cfg, true);
    const checker::CheckReport r = checker::check_diagonal_representation(s.j0, s.psi0, s.realizer);
    Report rep;
    rep.json["command"] = pi_only ? "pi" : "check";
    rep.json["config"] = s.config;
    rep.json["verdict"] = verdict_json(r.verdict);
    Json artifacts = Json::object();
    artifacts["stabilizer"] = {{"subgroup", to_string(r.stabilizer.subgroup)},
                               {"case", r.stabilizer.case_tag == StabilizerCase::a ? "a" : "b"},
                               {"detected_dimension", r.stabilizer.detected_dimension}};
    artifacts["spectrum"] = spectrum_json(r.spectrum);
    const bool show_pi = pi_only || cfg.show_pi;
    if (show_pi) {
        Json pis = Json::array();
        for (const auto& p : r.pi) {
            pis.push_back(pi_json(p));
        }
        artifacts["pi_matrices"] = pis;
    }
    rep.json["artifacts"] = artifacts;

    std::ostringstream t;
    t << "group: " << cfg.group << "\n";
    t << (cfg.group == "su2" ? "J0: " : "irrep: ") << r.j0.to_string() << "\n";
    t << "fiducial: " << s.config["fiducial"].get<std::string>();
    if (s.config.contains("seed")) {
        t << " (seed " << s.config["seed"].get<std::uint64_t>() << ")";
    }
    t << "\n";
    t << "stabilizer: " << to_string(r.stabilizer.subgroup) << ", case "
      << (r.stabilizer.case_tag == StabilizerCase::a ? "a" : "b") << "\n";
    t << "spectrum: " << spectrum_text(r.spectrum) << "\n";
    if (show_pi) {
        for (const auto& p : r.pi) {
            t << pi_text(p);
        }
    }
    for (const auto& o : r.verdict.per_irrep) {
        t << outcome_text(o, true) << "\n";
    }
    t << "exists: " << (r.verdict.exists ? "true" : "false") << "\n";
    rep.text = t.str();
    rep.csv = verdict_csv(r.verdict);
    rep.exit_code = pi_only ? 0 : (r.verdict.exists ? kExitExists : kExitNotExists);
    return rep;
}

Report cmd_spectrum(const RunConfig& cfg) {
    if (cfg.group == "hw") {
        throw std::invalid_argument("spectrum supports su2 and su3");
    }
    const CompactSetup s = compact_setup(cfg, false);
    const CGDecomposition d = tensor_decompose(s.j0, s.realizer(s.j0.label.conjugate()), s.realizer);
    const auto spectrum = d.spectrum();
    Report rep;
    rep.json["command"] = "spectrum";
    rep.json["config"] = s.config;
    rep.json["artifacts"] = {{"spectrum", spectrum_json(spectrum)}};
    rep.text = "spectrum of " + s.j0.label.to_string() + " (x) " + s.j0.label.conjugate().to_string() + ": " +
               spectrum_text(spectrum) + "\n";
    std::ostringstream c;
    c << "label,multiplicity,dimension\n";
    for (const auto& [label, mult] : spectrum) {
        c << '"' << label.to_string() << "\"," << mult << "," << label.dimension() << "\n";
    }
    rep.csv = c.str();
    return rep;
}

hw::FockSpace fock_space(const RunConfig& cfg) { return hw::FockSpace(cfg.cutoff, cfg.c); }

hw::FiducialState parse_state(const RunConfig& cfg, const hw::FockSpace& space) {
    const std::string& s = cfg.state;
    const auto colon = s.find(':');
    const std::string kind = s.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
    if (kind == "vacuum" && arg.empty()) {
        return hw::FiducialState::vacuum(space);
    }
    if (kind == "squeezed" && !arg.empty()) {
        return hw::FiducialState::squeezed(space, parse_double(arg));
    }
    if (kind == "fock" && !arg.empty()) {
        return hw::FiducialState::fock(space, parse_int(arg));
    }
    if (kind == "custom" && !arg.empty()) {
        const auto parts = split(arg, ',');
        CVector v(static_cast<Eigen::Index>(parts.size()));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            v(static_cast<Eigen::Index>(i)) = parse_complex(parts[i]);
        }
        return hw::FiducialState::custom(space, v);
    }
    throw std::invalid_argument("states: vacuum, squeezed:eta, fock:n, custom:c0,c1,...");
}

hw::PhaseGrid parse_grid(const RunConfig& cfg, const std::string& fallback) {
    const std::string& g = cfg.grid.empty() ? fallback : cfg.grid;
    const auto [extent, res] = parse_pair(g, "--grid");
    if (std::abs(res - std::round(res)) > 0.0) {
        throw std::invalid_argument("--grid resolution must be an integer");
    }
    return hw::PhaseGrid(extent, static_cast<int>(res));
}

Json grid_config(const hw::PhaseGrid& g) { return {{"extent", g.extent}, {"resolution", g.resolution}}; }

std::string grid_csv(const hw::PhaseGrid& g) {
    std::string s = "q0,p0,re,im\n";
    for (int i = 0; i < g.resolution; ++i) {
        for (int j = 0; j < g.resolution; ++j) {
            const Complex z = g.values(i, j);
            s += format_number(g.coordinate(i)) + "," + format_number(g.coordinate(j)) + "," + format_number(z.real()) +
                 "," + format_number(z.imag()) + "\n";
        }
    }
    return s;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    f << content;
    if (!f) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

Json hw_config(const RunConfig& cfg, const hw::FiducialState& f) {
    return {{"group", "hw"}, {"state", f.name()}, {"cutoff", cfg.cutoff}, {"c", cfg.c}};
}

Report condition_report(const RunConfig& cfg, const std::string& command, const hw::FiducialState& f,
                        const hw::NonvanishingCondition& cond, std::vector<std::string>& warnings) {
    const checker::Verdict v = checker::check_heisenberg_weyl(cond);
    Report rep;
    rep.json["command"] = command;
    Json config = hw_config(cfg, f);
    config["grid"] = grid_config(cond.samples);
    config["threshold"] = cfg.threshold;
    rep.json["config"] = config;
    rep.json["verdict"] = verdict_json(v);
    Json artifacts = Json::object();
    artifacts["zero_circles"] = cond.zero_circles;
    artifacts["grid_max"] = cond.grid_max;
    rep.json["artifacts"] = artifacts;
    warnings.insert(warnings.end(), cond.warnings.begin(), cond.warnings.end());

    std::ostringstream t;
    t << "state: " << f.name() << "\n";
    t << "grid: extent " << short_number(cond.samples.extent) << ", " << cond.samples.resolution << " points per axis\n";
    const std::size_t shown = std::min<std::size_t>(v.per_irrep.size(), 20);
    for (std::size_t k = 0; k < shown; ++k) {
        t << outcome_text(v.per_irrep[k], false) << "\n";
    }
    if (shown < v.per_irrep.size()) {
        t << "... " << (v.per_irrep.size() - shown) << " more failing locations\n";
    }
    t << "exists: " << (v.exists ? "true" : "false") << "\n";
    rep.text = t.str();
    rep.csv = verdict_csv(v);
    rep.exit_code = v.exists ? kExitExists : kExitNotExists;
    return rep;
}

Report cmd_check_hw(const RunConfig& cfg, std::vector<std::string>& warnings) {
    const hw::FockSpace space = fock_space(cfg);
    const hw::FiducialState f = parse_state(cfg, space);
    const hw::NonvanishingCondition cond = hw::nonvanishing_condition(space, f, parse_grid(cfg, "4,65"), cfg.threshold);
    return condition_report(cfg, "check", f, cond, warnings);
}

Report cmd_hw_char(const RunConfig& cfg, std::vector<std::string>& warnings) {
    const hw::FockSpace space = fock_space(cfg);
    const hw::FiducialState f = parse_state(cfg, space);
    if (!cfg.point.empty()) {
        const auto [q0, p0] = parse_pair(cfg.point, "--point");
        const hw::CharValue v = hw::char_function(space, f, q0, p0);
        warnings.insert(warnings.end(), v.warnings.begin(), v.warnings.end());
        Report rep;
        rep.json["command"] = "hw char";
        Json config = hw_config(cfg, f);
        config["point"] = {q0, p0};
        rep.json["config"] = config;
        Json value = {{"q0", q0},
                      {"p0", p0},
                      {"value", complex_json(v.value)},
                      {"matrix_route", complex_json(v.matrix_value)},
                      {"trusted", v.trusted},
                      {"unitarity_defect", v.unitarity_defect}};
        if (v.closed_form) {
            value["closed_form"] = complex_json(*v.closed_form);
        }
        rep.json["artifacts"] = {{"values", Json::array({value})}};
        std::ostringstream t;
        t << "chi(" << short_number(q0) << ", " << short_number(p0) << ") = " << describe_complex(v.value) << "\n";
        t << "matrix route: " << describe_complex(v.matrix_value) << (v.trusted ? "" : " (outside trust region)") << "\n";
        rep.text = t.str();
        rep.csv = "q0,p0,re,im\n" + format_number(q0) + "," + format_number(p0) + "," + format_number(v.value.real()) +
                  "," + format_number(v.value.imag()) + "\n";
        return rep;
    }
    const hw::NonvanishingCondition cond = hw::nonvanishing_condition(space, f, parse_grid(cfg, "4,65"), cfg.threshold);
    Report rep = condition_report(cfg, "hw char", f, cond, warnings);
    rep.exit_code = 0;
    rep.csv = grid_csv(cond.samples);
    return rep;
}

Report cmd_hw_zeros(const RunConfig& cfg, std::vector<std::string>& warnings) {
    if (cfg.fock < 0) {
        throw std::invalid_argument("hw zeros requires --fock n with n >= 0");
    }
    const hw::ZeroLocus z = hw::zero_locus(cfg.fock, cfg.c, cfg.max_radius);
    if (!z.complete) {
        warnings.push_back(z.message);
    }
    Report rep;
    rep.json["command"] = "hw zeros";
    Json config = {{"group", "hw"}, {"fock", cfg.fock}, {"c", cfg.c}};
    if (cfg.max_radius) {
        config["max_radius"] = *cfg.max_radius;
    }
    rep.json["config"] = config;
    rep.json["artifacts"] = {{"radii", z.radii}, {"complete", z.complete}};
    std::ostringstream t;
    t << "fock " << cfg.fock << ": " << z.radii.size() << " zero circle" << (z.radii.size() == 1 ? "" : "s") << "\n";
    std::string c = "index,radius\n";
    for (std::size_t k = 0; k < z.radii.size(); ++k) {
        t << "r" << (k + 1) << " = " << format_number(z.radii[k]) << "\n";
        c += std::to_string(k + 1) + "," + format_number(z.radii[k]) + "\n";
    }
    rep.text = t.str();
    rep.csv = c;
    return rep;
}

CMatrix parse_operator(const RunConfig& cfg, const hw::FockSpace& space) {
    const std::string& s = cfg.op;
    const auto colon = s.find(':');
    const std::string kind = s.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
    if (kind == "thermal" && !arg.empty()) {
        return hw::thermal_operator(space, parse_double(arg));
    }
    int level = -1;
    if (kind == "vacuum-projector" && arg.empty()) {
        level = 0;
    } else if (kind == "fock" && !arg.empty()) {
        level = parse_int(arg);
    }
    if (level < 0 || level >= space.cutoff) {
        throw std::invalid_argument("operators: thermal:nbar, vacuum-projector, fock:n (n below the cutoff)");
    }
    CMatrix a = CMatrix::Zero(space.cutoff, space.cutoff);
    a(level, level) = 1.0;
    return a;
}

Report cmd_hw_weight(const RunConfig& cfg, std::vector<std::string>& warnings) {
    const hw::FockSpace space = fock_space(cfg);
    const hw::FiducialState f = parse_state(cfg, space);
    const CMatrix a = parse_operator(cfg, space);
    hw::WeightOptions opts;
    opts.amplification_bound = cfg.bound;
    const hw::PhaseGrid grid = parse_grid(cfg, "4,65");
    const hw::DiagonalWeight w = hw::diagonal_weight(space, a, f, grid, opts);
    warnings.insert(warnings.end(), w.warnings.begin(), w.warnings.end());
    const checker::Verdict v = checker::check_heisenberg_weyl(w.condition);

    Report rep;
    rep.json["command"] = "hw weight";
    Json config = hw_config(cfg, f);
    config["operator"] = cfg.op;
    config["grid"] = grid_config(grid);
    config["amplification_bound"] = cfg.bound;
    rep.json["config"] = config;
    rep.json["verdict"] = verdict_json(v);
    Json artifacts = {{"refused", w.refused}};
    if (!w.refused) {
        artifacts["reconstruction_residual"] = w.residual;
        artifacts["excluded_points"] = w.excluded_points;
        artifacts["max_amplification"] = w.max_amplification;
    } else {
        artifacts["zero_circles"] = w.condition.zero_circles;
    }
    rep.json["artifacts"] = artifacts;
    std::ostringstream t;
    t << "state: " << f.name() << "\noperator: " << cfg.op << "\n";
    if (w.refused) {
        t << "refused: " << w.warnings.back() << "\n";
    } else {
        t << "reconstruction residual: " << short_number(w.residual) << "\n";
        t << "excluded points: " << w.excluded_points << "\n";
    }
    t << "exists: " << (v.exists ? "true" : "false") << "\n";
    rep.text = t.str();
    if (!w.refused) {
        rep.csv = grid_csv(w.phi);
    }
    return rep;
}

}  // namespace

int parse_twice(const std::string& text) { return parse_scaled(text, 2); }

int parse_thrice(const std::string& text) { return parse_scaled(text, 3); }

Complex parse_complex(const std::string& raw) {
    std::string text;
    for (char ch : raw) {
        if (ch != ' ') {
            text.push_back(ch);
        }
    }
    if (text.empty()) {
        throw std::invalid_argument("empty complex number");
    }
    if (text.back() != 'i') {
        return {parse_double(text), 0.0};
    }
    const std::string body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not an exponent sign or leading.
    std::size_t split_at = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split_at = k;
            break;
        }
    }
    auto imag_of = [](const std::string& s) {
        if (s.empty() || s == "+") {
            return 1.0;
        }
        if (s == "-") {
            return -1.0;
        }
        return parse_double(s[0] == '+' ? s.substr(1) : s);
    };
    if (split_at == std::string::npos) {
        return {0.0, imag_of(body)};
    }
    return {parse_double(body.substr(0, split_at)), imag_of(body.substr(split_at))};
}

std::string format_number(double x) {
    std::ostringstream o;
    o.imbue(std::locale::classic());
    o.precision(17);
    o << x;
    return o.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Decides whether generalized coherent states admit a diagonal representation", "cohrep"};
    app.require_subcommand(1);

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", cfg.out, "Write the report (or, for hw grids, the CSV samples) to this file");
    };
    auto add_compact = [&](CLI::App* sub, bool with_fiducial) {
        sub->add_option("--j0", cfg.j0, "SU(2) spin J0, decimal or fraction");
        sub->add_option("--irrep", cfg.irrep, "SU(3) irrep p,q");
        if (with_fiducial) {
            sub->add_option("--fiducial", cfg.fiducial,
                            "canonical:M | i3y-charged | u2-scalar | iiy:I,I3,Y | generic[:seed] | custom:c1,c2,...");
            sub->add_option("--seed", cfg.seed, "Seed for the generic fiducial");
        }
    };
    auto add_hw = [&](CLI::App* sub) {
        sub->add_option("--state", cfg.state, "vacuum | squeezed:eta | fock:n | custom:c0,c1,...");
        sub->add_option("--grid", cfg.grid, "Phase-plane grid as extent,points (odd)");
        sub->add_option("--cutoff", cfg.cutoff, "Fock-space truncation");
        sub->add_option("--c", cfg.c, "Central parameter c");
    };

    CLI::App* check = app.add_subcommand("check", "Decide existence of the diagonal representation");
    check->add_option("group", cfg.group, "su2 | su3 | hw")->required()->check(CLI::IsMember({"su2", "su3", "hw"}));
    add_compact(check, true);
    check->add_flag("--show-pi", cfg.show_pi, "Include the pi matrices");
    add_hw(check);
    check->add_option("--threshold", cfg.threshold, "Relative threshold on |chi| (hw)");
    add_output(check);

    CLI::App* spectrum = app.add_subcommand("spectrum", "Irreps of J0 (x) J0*");
    spectrum->add_option("group", cfg.group, "su2 | su3")->required()->check(CLI::IsMember({"su2", "su3"}));
    add_compact(spectrum, false);
    add_output(spectrum);

    CLI::App* pi = app.add_subcommand("pi", "pi matrices for every irrep of J0 (x) J0*");
    pi->add_option("group", cfg.group, "su2 | su3")->required()->check(CLI::IsMember({"su2", "su3"}));
    add_compact(pi, true);
    add_output(pi);

    CLI::App* hw = app.add_subcommand("hw", "Heisenberg-Weyl phase-plane tools");
    hw->require_subcommand(1);
    CLI::App* hw_char = hw->add_subcommand("char", "Characteristic function at a point or over a grid");
    add_hw(hw_char);
    hw_char->add_option("--point", cfg.point, "Single point q0,p0");
    hw_char->add_option("--threshold", cfg.threshold, "Relative threshold on |chi|");
    add_output(hw_char);
    CLI::App* hw_zeros = hw->add_subcommand("zeros", "Zero circles of a Fock-state characteristic function");
    hw_zeros->add_option("--fock", cfg.fock, "Fock level n")->required();
    hw_zeros->add_option("--max-radius", cfg.max_radius, "Search window radius");
    hw_zeros->add_option("--c", cfg.c, "Central parameter c");
    add_output(hw_zeros);
    CLI::App* hw_weight = hw->add_subcommand("weight", "Diagonal weight of an operator and its reconstruction");
    add_hw(hw_weight);
    hw_weight->add_option("--operator", cfg.op, "thermal:nbar | vacuum-projector | fock:n");
    hw_weight->add_option("--bound", cfg.bound, "Amplification bound on 1/|chi|");
    add_output(hw_weight);

    std::vector<std::string> argv_store{"cohrep"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) {
        argv.push_back(s.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    std::vector<std::string> warnings;
    Report rep;
    bool grid_csv_to_file = false;
    try {
        if (check->parsed()) {
            rep = cfg.group == "hw" ? cmd_check_hw(cfg, warnings) : cmd_check_compact(cfg, false);
        } else if (spectrum->parsed()) {
            rep = cmd_spectrum(cfg);
        } else if (pi->parsed()) {
            rep = cmd_check_compact(cfg, true);
        } else if (hw_char->parsed()) {
            rep = cmd_hw_char(cfg, warnings);
            grid_csv_to_file = cfg.point.empty();
        } else if (hw_zeros->parsed()) {
            rep = cmd_hw_zeros(cfg, warnings);
        } else if (hw_weight->parsed()) {
            rep = cmd_hw_weight(cfg, warnings);
            grid_csv_to_file = rep.csv.has_value();
        }

        if (grid_csv_to_file && !cfg.out.empty() && cfg.format != "csv") {
            write_file(cfg.out, *rep.csv);
            rep.json["artifacts"]["csv_paths"] = Json::array({cfg.out});
            rep.text += "samples written to " + cfg.out + "\n";
        }
        if (!warnings.empty()) {
            rep.json["artifacts"]["warnings"] = warnings;
        }
        std::string body;
        if (cfg.format == "json") {
            body = rep.json.dump(2) + "\n";
        } else if (cfg.format == "csv") {
            if (!rep.csv) {
                throw std::invalid_argument("this command has no CSV output");
            }
            body = *rep.csv;
        } else {
            body = rep.text;
        }
        if (!cfg.out.empty() && !(grid_csv_to_file && cfg.format != "csv")) {
            write_file(cfg.out, body);
        } else {
            out << body;
        }
        for (const auto& w : warnings) {
            err << "warning: " << w << "\n";
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return rep.exit_code;
}

}  // namespace cohrep::cli
