// Command-line front end: each verification suite in the library is a named
// command emitting deterministic CSV/JSON. Exit codes: 0 ok, 1 numeric
// failure or failed check (JSON report on stdout), 2 usage error.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "specpot/dos.hpp"
#include "specpot/herglotz.hpp"
#include "specpot/jacobi.hpp"
#include "specpot/measure.hpp"
#include "specpot/model_io.hpp"
#include "specpot/parallel.hpp"
#include "specpot/potential.hpp"

namespace {

using namespace specpot;
using io::fmt15;
using io::ordered_json;

int g_check_failed = 0;  // a declared pass/fail check came out false

// ---- config file: JSON object whose keys mirror the long flags ----------

struct Cfg {
    std::string path;
    std::vector<std::function<void(const ordered_json&)>> fills;

    template <class T>
    void bind(CLI::Option* opt, std::string key, T* dst) {
        fills.push_back([opt, key = std::move(key), dst](const ordered_json& j) {
            if (opt->count() == 0 && j.contains(key)) *dst = j.at(key).get<T>();
        });
    }

    // Command-line flags win; config supplies the rest.
    void apply() const {
        if (path.empty()) return;
        std::ifstream f(path);
        if (!f) throw std::invalid_argument("cannot read config file " + path);
        ordered_json j;
        try {
            f >> j;
        } catch (const std::exception& e) {
            throw std::invalid_argument("config " + path + " is not valid JSON: " + e.what());
        }
        if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
        for (const auto& fill : fills) fill(j);
    }
};

template <class T>
CLI::Option* opt(CLI::App* cmd, Cfg& cfg, const std::string& flag, T& dst,
                 const std::string& desc) {
    CLI::Option* o = cmd->add_option(flag, dst, desc);
    cfg.bind(o, flag.substr(flag.find_first_not_of('-')), &dst);
    return o;
}

void add_config_flag(CLI::App* cmd, Cfg& cfg) {
    cmd->add_option("--config", cfg.path, "JSON file whose keys mirror the long flags");
}

// ---- small parsers and emitters ------------------------------------------

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    f << text;
    if (!f) throw std::runtime_error("cannot write " + out_path);
}

void emit_json(const ordered_json& j, const std::string& out_path) {
    emit(j.dump(2) + "\n", out_path);
}

ordered_json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read " + path);
    ordered_json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + ": " + std::string(e.what()));
    }
    return j;
}

cxd parse_z(const std::string& s) {
    try {
        std::size_t used = 0;
        double re = std::stod(s, &used);
        double im = 0.0;
        if (used < s.size()) {
            if (s[used] != ',') throw std::invalid_argument("separator");
            std::string rest = s.substr(used + 1);
            std::size_t u2 = 0;
            im = std::stod(rest, &u2);
            if (u2 != rest.size()) throw std::invalid_argument("trailing");
        }
        return {re, im};
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse point '" + s + "'; expected \"re\" or \"re,im\"");
    }
}

// "lo:hi:count" inclusive linspace
std::vector<double> parse_linspace(const std::string& s) {
    auto fail = [&]() -> void {
        throw std::invalid_argument("cannot parse grid '" + s + "'; expected \"lo:hi:count\"");
    };
    double lo = 0.0, hi = 0.0;
    long count = 0;
    try {
        std::size_t u1 = 0, u2 = 0, u3 = 0;
        lo = std::stod(s, &u1);
        if (u1 >= s.size() || s[u1] != ':') fail();
        std::string rest = s.substr(u1 + 1);
        hi = std::stod(rest, &u2);
        if (u2 >= rest.size() || rest[u2] != ':') fail();
        std::string tail = rest.substr(u2 + 1);
        count = std::stol(tail, &u3);
        if (u3 != tail.size()) fail();
    } catch (const std::invalid_argument&) {
        fail();
    } catch (const std::out_of_range&) {
        fail();
    }
    if (count < 1) throw std::invalid_argument("grid count must be >= 1");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        out.push_back(lo);
        return out;
    }
    for (long i = 0; i < count; ++i)
        out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
    return out;
}

ordered_json zj(cxd z) { return ordered_json::array({z.real(), z.imag()}); }

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// ---- dos ------------------------------------------------------------------

struct DosCmd {
    Cfg cfg;
    std::string model, out;
    int N = 0;
};

void run_dos(DosCmd& c) {
    c.cfg.apply();
    require(!c.model.empty(), "--model is required");
    require(c.N >= 1, "--N must be >= 1");
    CoeffModel m = io::parse_model(c.model);
    DosResult d = dos_measure(m, c.N);

    std::string csv = "lambda,weight,cdf\n";
    double cum = 0.0;
    for (const auto& [pos, w] : d.dk.atoms()) {
        cum += w;
        csv += fmt15(pos);
        csv += ',';
        csv += fmt15(w);
        csv += ',';
        csv += fmt15(cum);
        csv += '\n';
    }
    emit(csv, c.out);
    if (!c.out.empty()) {
        ordered_json j{{"command", "dos"},
                       {"model", io::model_to_json(m)},
                       {"N", c.N},
                       {"A", d.A},
                       {"atoms", d.dk.atoms().size()},
                       {"out", c.out}};
        emit_json(j, "");
    }
}

// ---- lyapunov ---------------------------------------------------------------

struct LyapCmd {
    Cfg cfg;
    std::string model, z, grid, out;
    int N = 1000;
    double imag = 0.0;
};

void run_lyapunov(LyapCmd& c) {
    c.cfg.apply();
    require(!c.model.empty(), "--model is required");
    require(c.N >= 1, "--N must be >= 1");
    CoeffModel m = io::parse_model(c.model);

    std::vector<cxd> pts;
    if (!c.z.empty()) {
        pts.push_back(parse_z(c.z));
    } else if (!c.grid.empty()) {
        for (double x : parse_linspace(c.grid)) pts.push_back({x, c.imag});
    } else {
        throw std::invalid_argument("need --z or --grid");
    }

    std::vector<double> gamma(pts.size());
    par::parallel_for(static_cast<int>(pts.size()), [&](int i) {
        gamma[i] = pts[i].imag() == 0.0 ? lyapunov(m, pts[i].real(), c.N)
                                        : lyapunov(m, pts[i], c.N);
    });

    std::string csv = "re,im,gamma\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        csv += fmt15(pts[i].real());
        csv += ',';
        csv += fmt15(pts[i].imag());
        csv += ',';
        csv += fmt15(gamma[i]);
        csv += '\n';
    }
    emit(csv, c.out);
}

// ---- thouless-check ---------------------------------------------------------

struct ThoulessCmd {
    Cfg cfg;
    std::string model, grid = "default", out;
    int N = 500;
    double imag = 0.5, tol = 1e-9;
};

void run_thouless(ThoulessCmd& c) {
    c.cfg.apply();
    require(!c.model.empty(), "--model is required");
    require(c.N >= 1, "--N must be >= 1");
    require(c.tol > 0, "--tol must be > 0");
    CoeffModel m = io::parse_model(c.model);

    std::vector<cxd> zs;
    if (c.grid == "default") {
        for (int i = 0; i < 10; ++i) {
            double re = -2.5 + 5.0 * i / 9.0;
            zs.push_back({re, 0.1});
            zs.push_back({re, 1.0});
        }
    } else {
        require(c.imag > 0, "--imag must be > 0 off the default grid");
        for (double x : parse_linspace(c.grid)) zs.push_back({x, c.imag});
    }

    DosResult d = dos_measure(m, c.N);
    std::vector<double> ly(zs.size()), th(zs.size());
    par::parallel_for(static_cast<int>(zs.size()), [&](int i) {
        ly[i] = lyapunov(m, zs[i], c.N);
        th[i] = thouless_rhs(d, zs[i]);
    });

    ordered_json points = ordered_json::array();
    double max_rel = 0.0;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        double rel = std::abs(ly[i] - th[i]) / std::max(1.0, std::abs(th[i]));
        max_rel = std::max(max_rel, rel);
        points.push_back(ordered_json{{"z", zj(zs[i])},
                                      {"lyapunov", ly[i]},
                                      {"thouless_rhs", th[i]},
                                      {"rel_err", rel}});
    }
    bool pass = max_rel <= c.tol;
    ordered_json j{{"command", "thouless-check"}, {"model", io::model_to_json(m)},
                   {"N", c.N},                    {"tol", c.tol},
                   {"points", points},            {"max_rel_err", max_rel},
                   {"pass", pass}};
    emit_json(j, c.out);
    if (!pass) g_check_failed = 1;
}

// ---- identities -------------------------------------------------------------

struct IdentCmd {
    Cfg cfg;
    std::string model, grid = "default", out;
    std::vector<int> N{500};
    double imag = 1.0;
    double tol_wsum = 0.05, tol_deriv = 0.05, tol_moment = 1e-8;
};

void run_identities(IdentCmd& c) {
    c.cfg.apply();
    require(!c.model.empty(), "--model is required");
    require(!c.N.empty(), "--N needs at least one entry");
    CoeffModel m = io::parse_model(c.model);

    std::vector<cxd> zs;
    if (c.grid == "default") {
        zs = {{0.0, 1.0}, {1.0, 1.0}, {-1.0, 1.0}, {2.0, 0.5}, {-2.0, 0.5}, {0.3, 2.0}};
    } else {
        require(c.imag >= 0.5, "--imag must be >= 0.5 (identity checks need height)");
        for (double x : parse_linspace(c.grid)) zs.push_back({x, c.imag});
    }

    std::vector<IdentityRow> rows = check_identities(m, zs, c.N);
    int maxN = *std::max_element(c.N.begin(), c.N.end());
    double w0 = 0.0, d0 = 0.0, m0 = 0.0;
    ordered_json jrows = ordered_json::array();
    for (const IdentityRow& r : rows) {
        jrows.push_back(ordered_json{{"z", zj(r.z)},
                                     {"N", r.N},
                                     {"wsum_residual", r.wsum_residual},
                                     {"deriv_residual", r.deriv_residual},
                                     {"moment_residual", r.moment_residual}});
        if (r.N == maxN) {
            w0 = std::max(w0, r.wsum_residual);
            d0 = std::max(d0, r.deriv_residual);
            m0 = std::max(m0, r.moment_residual);
        }
    }
    bool pass = w0 <= c.tol_wsum && d0 <= c.tol_deriv && m0 <= c.tol_moment;
    ordered_json j{{"command", "identities"},
                   {"model", io::model_to_json(m)},
                   {"rows", jrows},
                   {"at_largest_N",
                    ordered_json{{"N", maxN},
                                 {"wsum_residual", w0},
                                 {"deriv_residual", d0},
                                 {"moment_residual", m0}}},
                   {"tol", ordered_json{{"wsum", c.tol_wsum},
                                        {"deriv", c.tol_deriv},
                                        {"moment", c.tol_moment}}},
                   {"pass", pass}};
    emit_json(j, c.out);
    if (!pass) g_check_failed = 1;
}

// ---- w-pair -------------------------------------------------------------------

struct WPairCmd {
    Cfg cfg;
    std::string model, z, out;
    int N = 500, M = 0;
};

void run_wpair(WPairCmd& c) {
    c.cfg.apply();
    require(!c.model.empty(), "--model is required");
    require(!c.z.empty(), "--z is required");
    require(c.N >= 1, "--N must be >= 1");
    CoeffModel m = io::parse_model(c.model);
    cxd z = parse_z(c.z);
    require(z.imag() > 0, "--z needs positive imaginary part");

    WPair w = w_pair(m, z, c.N, c.M);
    cxd sum = w.w_plus + w.w_minus;
    constexpr double pi = 3.14159265358979323846;
    ordered_json j{{"command", "w-pair"},
                   {"model", io::model_to_json(m)},
                   {"N", c.N},
                   {"z", zj(z)},
                   {"w_plus", zj(w.w_plus)},
                   {"w_minus", zj(w.w_minus)},
                   {"sum", zj(sum)},
                   {"sum_minus_ipi_abs", std::abs(sum - cxd(0.0, pi))},
                   {"tail_error", w.tail_error}};
    emit_json(j, c.out);
}

// ---- equilibrium / capacity ----------------------------------------------------

struct EquilibriumCmd {
    Cfg cfg;
    std::string set, out;
    int nodes = 48;
    int probes = 100;
};

void run_equilibrium(EquilibriumCmd& c) {
    c.cfg.apply();
    require(!c.set.empty(), "--set is required");
    SetUnion E = io::parse_set(c.set);
    EquilibriumResult eq = equilibrium(E, c.nodes);
    double cap = E.parts().size() == 1 ? E.parts()[0].length() / 4.0 : std::exp(eq.robin);
    ordered_json j{{"command", "equilibrium"},
                   {"set", io::set_to_json(E)},
                   {"nodes", c.nodes},
                   {"robin", eq.robin},
                   {"capacity", cap},
                   {"residual", eq.residual},
                   {"frostman", frostman_residual(eq, E, c.probes)},
                   {"mass", eq.omega.total_mass()},
                   {"omega", io::measure_to_json(eq.omega)}};
    emit_json(j, c.out);
}

struct CapacityCmd {
    Cfg cfg;
    std::string set, out;
};

void run_capacity(CapacityCmd& c) {
    c.cfg.apply();
    require(!c.set.empty(), "--set is required");
    SetUnion E = io::parse_set(c.set);
    ordered_json j{{"command", "capacity"},
                   {"set", io::set_to_json(E)},
                   {"capacity", capacity(E)}};
    emit_json(j, c.out);
}

// ---- reflectionless --------------------------------------------------------------

struct ReflCmd {
    Cfg cfg;
    std::string set, xi, out;
    double c0 = 0.0, tol = 1e-6;
    int per_interval = 64;
};

void run_reflectionless(ReflCmd& c) {
    c.cfg.apply();
    require(!c.set.empty(), "--set is required");
    SetUnion E = io::parse_set(c.set);

    ReflectionlessReport rep;
    std::string source;
    if (!c.xi.empty()) {
        KreinFn xi = io::krein_from_json(read_json_file(c.xi));
        rep = is_reflectionless(from_krein(xi, c.c0), E, c.per_interval, c.tol);
        source = c.xi;
    } else {
        // Default subject: the Cauchy transform of the equilibrium measure,
        // which should have vanishing real part inside the set.
        EquilibriumResult eq = equilibrium(E);
        Measure om = eq.omega;
        HerglotzEval F(std::function<cxd(cxd)>(
            [om](cxd z) { return measures::cauchy_transform(om, z); }));
        rep = is_reflectionless(F, E, c.per_interval, c.tol);
        source = "equilibrium";
    }

    ordered_json j{{"command", "reflectionless"},
                   {"set", io::set_to_json(E)},
                   {"source", source},
                   {"tested", rep.tested},
                   {"max_abs_re", rep.max_abs_re},
                   {"worst_point", rep.worst_point},
                   {"unconverged", rep.unconverged},
                   {"tol", rep.tol},
                   {"pass", rep.pass}};
    emit_json(j, c.out);
    if (!rep.pass) g_check_failed = 1;
}

// ---- krein from-xi / to-xi ----------------------------------------------------------

struct KreinFromCmd {
    Cfg cfg;
    std::string xi, z, grid, out;
    double c0 = 0.0, imag = 1e-3;
};

void run_krein_from(KreinFromCmd& c) {
    c.cfg.apply();
    require(!c.xi.empty(), "--xi is required");
    KreinFn xi = io::krein_from_json(read_json_file(c.xi));
    HerglotzEval G = from_krein(xi, c.c0);

    std::vector<cxd> pts;
    if (!c.z.empty()) {
        pts.push_back(parse_z(c.z));
    } else if (!c.grid.empty()) {
        require(c.imag > 0, "--imag must be > 0");
        for (double x : parse_linspace(c.grid)) pts.push_back({x, c.imag});
    } else {
        throw std::invalid_argument("need --z or --grid");
    }
    for (const cxd& z : pts)
        require(z.imag() > 0, "evaluation points need positive imaginary part");

    std::vector<cxd> vals(pts.size());
    par::parallel_for(static_cast<int>(pts.size()), [&](int i) { vals[i] = G(pts[i]); });

    std::string csv = "re,im,F_re,F_im\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        csv += fmt15(pts[i].real());
        csv += ',';
        csv += fmt15(pts[i].imag());
        csv += ',';
        csv += fmt15(vals[i].real());
        csv += ',';
        csv += fmt15(vals[i].imag());
        csv += '\n';
    }
    emit(csv, c.out);
}

struct KreinToCmd {
    Cfg cfg;
    std::string xi, out;
    double c0 = 0.0, tol = 1e-4;
};

void run_krein_to(KreinToCmd& c) {
    c.cfg.apply();
    require(!c.xi.empty(), "--xi is required");
    KreinFn xi = io::krein_from_json(read_json_file(c.xi));
    HerglotzEval G = from_krein(xi, c.c0);

    // Recover the phase at one continuity point per constant region: the
    // midpoints of the bounded pieces, and one probe into each tail.
    const std::vector<double>& br = xi.breaks();
    std::vector<double> pts;
    pts.push_back(br.front() - 1.0);
    for (std::size_t i = 0; i + 1 < br.size(); ++i) pts.push_back(0.5 * (br[i] + br[i + 1]));
    pts.push_back(br.back() + 1.0);

    std::vector<XiReport> reps(pts.size());
    par::parallel_for(static_cast<int>(pts.size()),
                      [&](int i) { reps[i] = krein_xi(G, pts[i]); });

    ordered_json points = ordered_json::array();
    double max_diff = 0.0;
    int unconverged = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double truth = xi(pts[i]);
        bool ok = reps[i].status == LimitStatus::Converged;
        if (!ok) ++unconverged;
        double diff = std::abs(reps[i].xi - truth);
        if (ok) max_diff = std::max(max_diff, diff);
        points.push_back(ordered_json{{"x", pts[i]},
                                      {"xi", truth},
                                      {"recovered", reps[i].xi},
                                      {"diff", diff},
                                      {"converged", ok}});
    }
    bool pass = unconverged == 0 && max_diff <= c.tol;
    ordered_json j{{"command", "krein to-xi"}, {"c", c.c0},        {"points", points},
                   {"max_diff", max_diff},     {"unconverged", unconverged},
                   {"tol", c.tol},             {"pass", pass}};
    emit_json(j, c.out);
    if (!pass) g_check_failed = 1;
}

// ---- pointmass -----------------------------------------------------------------------

struct PointmassCmd {
    Cfg cfg;
    std::string set, out;
    double x = 0.0;
};

void run_pointmass(PointmassCmd& c) {
    c.cfg.apply();
    require(!c.set.empty(), "--set is required");
    SetUnion E = io::parse_set(c.set);
    bool possible = pointmass_possible(E, c.x);
    ordered_json j{{"command", "pointmass"},
                   {"set", io::set_to_json(E)},
                   {"x", c.x},
                   {"possible", possible}};
    if (possible) {
        KreinFn xi = atom_constructor(E, c.x);
        HerglotzEval G = from_krein(xi);
        RealLimit pm = point_mass(G, c.x);
        ReflectionlessReport rr = is_reflectionless(G, E, 48, 1e-3);
        j["point_mass"] = pm.value;
        j["mass_converged"] = pm.ok();
        j["reflectionless"] = ordered_json{{"max_abs_re", rr.max_abs_re},
                                           {"unconverged", rr.unconverged},
                                           {"pass", rr.pass}};
    }
    emit_json(j, c.out);
}

// ---- dap-check -----------------------------------------------------------------------

struct DapCmd {
    Cfg cfg;
    std::string model, out;
    double x = 0.0, resolution = 0.0, tol = 0.0;
    int N = 10000;
};

void run_dapcheck(DapCmd& c) {
    c.cfg.apply();
    require(!c.model.empty(), "--model is required");
    require(c.N >= 1, "--N must be >= 1");
    CoeffModel m = io::parse_model(c.model);
    DapReport r = check_dap_gamma(m, c.x, c.N, c.resolution);
    ordered_json j{{"command", "dap-check"},
                   {"model", io::model_to_json(m)},
                   {"x", c.x},
                   {"N", c.N},
                   {"has_derivative", r.has_derivative},
                   {"d_ap", r.d_ap},
                   {"neg_re_g", r.neg_re_g},
                   {"difference", r.difference}};
    if (c.tol > 0) {
        bool pass = r.has_derivative && std::abs(r.difference) <= c.tol;
        j["tol"] = c.tol;
        j["pass"] = pass;
        if (!pass) g_check_failed = 1;
    }
    emit_json(j, c.out);
}

// ---- inequalities ----------------------------------------------------------------------

struct IneqCmd {
    Cfg cfg;
    std::string model, inner, outer = "hull", out;
    int N = 1000;
    double tol = 1e-9;
};

void run_inequalities(IneqCmd& c) {
    c.cfg.apply();
    require(!c.model.empty(), "--model is required");
    require(!c.inner.empty(), "--inner is required");
    require(c.N >= 1, "--N must be >= 1");
    CoeffModel m = io::parse_model(c.model);
    DosResult d = dos_measure(m, c.N);
    SetUnion inner = io::parse_set(c.inner);
    SetUnion outer = c.outer == "hull"
                         ? SetUnion::single(d.dk.atoms().front().first, d.dk.atoms().back().first)
                         : io::parse_set(c.outer);

    CapacityBoundsReport r = check_capacity_bounds(d, inner, outer, c.tol);
    ordered_json j{{"command", "inequalities"},
                   {"model", io::model_to_json(m)},
                   {"N", c.N},
                   {"inner", io::set_to_json(inner)},
                   {"outer", io::set_to_json(outer)},
                   {"cap_inner", r.cap_inner},
                   {"A", r.A},
                   {"cap_outer", r.cap_outer},
                   {"inner_length", r.inner_length},
                   {"four_A", r.four_A},
                   {"cap_inner_le_A", r.inner_le_A},
                   {"A_le_cap_outer", r.A_le_outer},
                   {"length_le_4A", r.length_le_4A},
                   {"pass", r.pass}};
    emit_json(j, c.out);
    if (!r.pass) g_check_failed = 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Half-line Jacobi / Herglotz function toolkit"};
    app.fallthrough();
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads,
                   "cap worker threads (default: SPECPOT_THREADS or hardware)");

    DosCmd dos_args;
    CLI::App* c_dos = app.add_subcommand("dos", "density of states of the N-site truncation");
    opt(c_dos, dos_args.cfg, "--model", dos_args.model, "model descriptor");
    opt(c_dos, dos_args.cfg, "--N", dos_args.N, "truncation size");
    opt(c_dos, dos_args.cfg, "--out", dos_args.out, "CSV output path (stdout if omitted)");
    add_config_flag(c_dos, dos_args.cfg);

    LyapCmd ly_args;
    CLI::App* c_ly = app.add_subcommand("lyapunov", "Lyapunov exponent on a grid");
    opt(c_ly, ly_args.cfg, "--model", ly_args.model, "model descriptor");
    opt(c_ly, ly_args.cfg, "--N", ly_args.N, "number of transfer steps");
    opt(c_ly, ly_args.cfg, "--z", ly_args.z, "single point \"re\" or \"re,im\"");
    opt(c_ly, ly_args.cfg, "--grid", ly_args.grid, "real grid \"lo:hi:count\"");
    opt(c_ly, ly_args.cfg, "--imag", ly_args.imag, "imaginary part added to grid points");
    opt(c_ly, ly_args.cfg, "--out", ly_args.out, "CSV output path");
    add_config_flag(c_ly, ly_args.cfg);

    ThoulessCmd th_args;
    CLI::App* c_th = app.add_subcommand(
        "thouless-check", "finite-N identity: growth rate vs potential of the dos");
    opt(c_th, th_args.cfg, "--model", th_args.model, "model descriptor");
    opt(c_th, th_args.cfg, "--N", th_args.N, "truncation size");
    opt(c_th, th_args.cfg, "--grid", th_args.grid, "\"default\" or \"lo:hi:count\"");
    opt(c_th, th_args.cfg, "--imag", th_args.imag, "height for non-default grids");
    opt(c_th, th_args.cfg, "--tol", th_args.tol, "relative tolerance");
    opt(c_th, th_args.cfg, "--out", th_args.out, "JSON output path");
    add_config_flag(c_th, th_args.cfg);

    IdentCmd id_args;
    CLI::App* c_id = app.add_subcommand("identities", "trace, derivative and pair identities");
    opt(c_id, id_args.cfg, "--model", id_args.model, "model descriptor");
    opt(c_id, id_args.cfg, "--N", id_args.N, "truncation sizes (comma list)")->delimiter(',');
    opt(c_id, id_args.cfg, "--grid", id_args.grid, "\"default\" or \"lo:hi:count\"");
    opt(c_id, id_args.cfg, "--imag", id_args.imag, "height for non-default grids (>= 0.5)");
    opt(c_id, id_args.cfg, "--tol-wsum", id_args.tol_wsum, "budget for the pair-sum residual");
    opt(c_id, id_args.cfg, "--tol-deriv", id_args.tol_deriv, "budget for the derivative residual");
    opt(c_id, id_args.cfg, "--tol-moment", id_args.tol_moment, "budget for the moment residual");
    opt(c_id, id_args.cfg, "--out", id_args.out, "JSON output path");
    add_config_flag(c_id, id_args.cfg);

    WPairCmd wp_args;
    CLI::App* c_wp = app.add_subcommand("w-pair", "half-line growth pair at one point");
    opt(c_wp, wp_args.cfg, "--model", wp_args.model, "model descriptor");
    opt(c_wp, wp_args.cfg, "--N", wp_args.N, "number of sites averaged");
    opt(c_wp, wp_args.cfg, "--M", wp_args.M, "tail depth (0 = automatic)");
    opt(c_wp, wp_args.cfg, "--z", wp_args.z, "point \"re,im\" with im > 0");
    opt(c_wp, wp_args.cfg, "--out", wp_args.out, "JSON output path");
    add_config_flag(c_wp, wp_args.cfg);

    EquilibriumCmd eq_args;
    CLI::App* c_eq = app.add_subcommand("equilibrium", "equilibrium measure of an interval union");
    opt(c_eq, eq_args.cfg, "--set", eq_args.set, "interval union \"[lo,hi],[lo,hi],...\"");
    opt(c_eq, eq_args.cfg, "--nodes", eq_args.nodes, "collocation nodes per interval");
    opt(c_eq, eq_args.cfg, "--probes", eq_args.probes, "off-node probes per interval");
    opt(c_eq, eq_args.cfg, "--out", eq_args.out, "JSON output path");
    add_config_flag(c_eq, eq_args.cfg);

    CapacityCmd cap_args;
    CLI::App* c_cap = app.add_subcommand("capacity", "logarithmic capacity of an interval union");
    opt(c_cap, cap_args.cfg, "--set", cap_args.set, "interval union \"[lo,hi],...\"");
    opt(c_cap, cap_args.cfg, "--out", cap_args.out, "JSON output path");
    add_config_flag(c_cap, cap_args.cfg);

    ReflCmd re_args;
    CLI::App* c_re = app.add_subcommand(
        "reflectionless", "vanishing real boundary part on a set");
    opt(c_re, re_args.cfg, "--set", re_args.set, "interval union \"[lo,hi],...\"");
    opt(c_re, re_args.cfg, "--xi", re_args.xi,
        "phase-function JSON; default checks the equilibrium Cauchy transform");
    opt(c_re, re_args.cfg, "--c", re_args.c0, "real constant in the exponential representation");
    opt(c_re, re_args.cfg, "--per-interval", re_args.per_interval, "probe count per interval");
    opt(c_re, re_args.cfg, "--tol", re_args.tol, "max |Re F| allowed");
    opt(c_re, re_args.cfg, "--out", re_args.out, "JSON output path");
    add_config_flag(c_re, re_args.cfg);

    CLI::App* c_kr = app.add_subcommand("krein", "exponential representation with a step phase");
    c_kr->require_subcommand(1);
    KreinFromCmd kf_args;
    CLI::App* c_kf = c_kr->add_subcommand("from-xi", "evaluate the represented function");
    opt(c_kf, kf_args.cfg, "--xi", kf_args.xi, "phase-function JSON {breaks, values}");
    opt(c_kf, kf_args.cfg, "--c", kf_args.c0, "real constant in the representation");
    opt(c_kf, kf_args.cfg, "--z", kf_args.z, "single point \"re,im\"");
    opt(c_kf, kf_args.cfg, "--grid", kf_args.grid, "real grid \"lo:hi:count\"");
    opt(c_kf, kf_args.cfg, "--imag", kf_args.imag, "height added to grid points");
    opt(c_kf, kf_args.cfg, "--out", kf_args.out, "CSV output path");
    add_config_flag(c_kf, kf_args.cfg);

    KreinToCmd kt_args;
    CLI::App* c_kt = c_kr->add_subcommand("to-xi", "recover the phase at continuity points");
    opt(c_kt, kt_args.cfg, "--xi", kt_args.xi, "phase-function JSON {breaks, values}");
    opt(c_kt, kt_args.cfg, "--c", kt_args.c0, "real constant in the representation");
    opt(c_kt, kt_args.cfg, "--tol", kt_args.tol, "max recovery error allowed");
    opt(c_kt, kt_args.cfg, "--out", kt_args.out, "JSON output path");
    add_config_flag(c_kt, kt_args.cfg);

    PointmassCmd pm_args;
    CLI::App* c_pm = app.add_subcommand("pointmass", "point mass of the plateau construction");
    opt(c_pm, pm_args.cfg, "--set", pm_args.set, "interval union \"[lo,hi],...\"");
    opt(c_pm, pm_args.cfg, "--x", pm_args.x, "candidate atom position");
    opt(c_pm, pm_args.cfg, "--out", pm_args.out, "JSON output path");
    add_config_flag(c_pm, pm_args.cfg);

    DapCmd dap_args;
    CLI::App* c_dap = app.add_subcommand(
        "dap-check", "approximate derivative of the integrated dos vs -Re g");
    opt(c_dap, dap_args.cfg, "--model", dap_args.model, "model descriptor");
    opt(c_dap, dap_args.cfg, "--x", dap_args.x, "evaluation point");
    opt(c_dap, dap_args.cfg, "--N", dap_args.N, "truncation size");
    opt(c_dap, dap_args.cfg, "--resolution", dap_args.resolution, "grid step (0 = automatic)");
    opt(c_dap, dap_args.cfg, "--tol", dap_args.tol, "if > 0, fail when |difference| exceeds it");
    opt(c_dap, dap_args.cfg, "--out", dap_args.out, "JSON output path");
    add_config_flag(c_dap, dap_args.cfg);

    IneqCmd iq_args;
    CLI::App* c_iq = app.add_subcommand("inequalities", "capacity bounds on the mean off-diagonal");
    opt(c_iq, iq_args.cfg, "--model", iq_args.model, "model descriptor");
    opt(c_iq, iq_args.cfg, "--N", iq_args.N, "truncation size");
    opt(c_iq, iq_args.cfg, "--inner", iq_args.inner, "inner set (ac spectrum / band union)");
    opt(c_iq, iq_args.cfg, "--outer", iq_args.outer, "outer set, or \"hull\" for the computed one");
    opt(c_iq, iq_args.cfg, "--tol", iq_args.tol, "relative slack on the inequalities");
    opt(c_iq, iq_args.cfg, "--out", iq_args.out, "JSON output path");
    add_config_flag(c_iq, iq_args.cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        par::set_thread_cap(threads);
        if (c_dos->parsed()) run_dos(dos_args);
        else if (c_ly->parsed()) run_lyapunov(ly_args);
        else if (c_th->parsed()) run_thouless(th_args);
        else if (c_id->parsed()) run_identities(id_args);
        else if (c_wp->parsed()) run_wpair(wp_args);
        else if (c_eq->parsed()) run_equilibrium(eq_args);
        else if (c_cap->parsed()) run_capacity(cap_args);
        else if (c_re->parsed()) run_reflectionless(re_args);
        else if (c_kr->parsed()) {
            if (c_kf->parsed()) run_krein_from(kf_args);
            else run_krein_to(kt_args);
        }
        else if (c_pm->parsed()) run_pointmass(pm_args);
        else if (c_dap->parsed()) run_dapcheck(dap_args);
        else if (c_iq->parsed()) run_inequalities(iq_args);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        ordered_json err{{"error", e.what()}};
        std::printf("%s\n", err.dump(2).c_str());
        return 1;
    }
    return g_check_failed;
}
