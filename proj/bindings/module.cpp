// Python bindings: thin wrappers that accept model descriptor strings and
// interval lists, returning plain Python structures.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <utility>
#include <vector>

#include "specpot/dos.hpp"
#include "specpot/herglotz.hpp"
#include "specpot/jacobi.hpp"
#include "specpot/measure.hpp"
#include "specpot/model_io.hpp"
#include "specpot/potential.hpp"

namespace py = pybind11;
using namespace specpot;
using measures::Measure;

namespace {

using IntervalList = std::vector<std::pair<double, double>>;

SetUnion to_set(const IntervalList& parts) {
    std::vector<Interval> ivs;
    ivs.reserve(parts.size());
    for (const auto& [lo, hi] : parts) ivs.emplace_back(lo, hi);
    return SetUnion(ivs);
}

IntervalList from_set(const SetUnion& E) {
    IntervalList out;
    for (const Interval& iv : E.parts()) out.emplace_back(iv.lo, iv.hi);
    return out;
}

KreinFn to_krein(const std::vector<double>& breaks, const std::vector<double>& values) {
    return KreinFn(breaks, values);
}

py::dict measure_dict(const Measure& mu) {
    py::dict d;
    d["atoms"] = mu.atoms();
    d["total_mass"] = mu.total_mass();
    d["json"] = io::measure_to_json(mu).dump();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Half-line Jacobi operators, Herglotz boundary behaviour, and "
                "logarithmic potential theory";
    mod.attr("__version__") = "0.1.0";

    // --- models and spectra ---------------------------------------------
    mod.def(
        "coefficients",
        [](const std::string& model, std::int64_t n_max) {
            CoeffModel m = io::parse_model(model);
            std::vector<std::pair<double, double>> out;
            for (std::int64_t n = 1; n <= n_max; ++n) {
                Coeff c = coeffs(m, n);
                out.emplace_back(c.a, c.b);
            }
            return out;
        },
        py::arg("model"), py::arg("n_max"),
        "(a(n), b(n)) for n = 1..n_max of a model given in text form.");

    mod.def(
        "eigenvalues",
        [](const std::string& model, int N) {
            return eigenvalues(truncate(io::parse_model(model), N));
        },
        py::arg("model"), py::arg("N"),
        "Ascending eigenvalues of the N-site truncation.");

    mod.def(
        "dos",
        [](const std::string& model, int N) {
            DosResult d = dos_measure(io::parse_model(model), N);
            py::dict out = measure_dict(d.dk);
            out["A"] = d.A;
            out["N"] = d.N;
            return out;
        },
        py::arg("model"), py::arg("N"),
        "Eigenvalue counting measure of the N-site truncation plus the "
        "geometric coefficient mean A.");

    mod.def(
        "lyapunov",
        [](const std::string& model, std::complex<double> z, int N) {
            return lyapunov(io::parse_model(model), z, N);
        },
        py::arg("model"), py::arg("z"), py::arg("N"),
        "Finite-volume growth rate (1/N) ln |f_-(N+1, z)|.");

    mod.def(
        "thouless_rhs",
        [](const std::string& model, std::complex<double> z, int N) {
            return thouless_rhs(dos_measure(io::parse_model(model), N), z);
        },
        py::arg("model"), py::arg("z"), py::arg("N"),
        "-ln A + int ln|t - z| dk(t) for the N-site counting measure.");

    mod.def(
        "m_plus",
        [](const std::string& model, std::complex<double> z, int M) {
            MPlusResult r = m_plus(io::parse_model(model), z, M);
            return py::make_tuple(r.value, r.tail_error);
        },
        py::arg("model"), py::arg("z"), py::arg("M") = 4000,
        "Half-line m-function at z and the reported tail error.");

    mod.def(
        "green_avg",
        [](const std::string& model, std::complex<double> z, int N) {
            GreenAvg r = green_avg(io::parse_model(model), z, N);
            return py::make_tuple(r.value, r.tail_error);
        },
        py::arg("model"), py::arg("z"), py::arg("N"),
        "Average of the first N diagonal resolvent entries.");

    mod.def(
        "w_pair",
        [](const std::string& model, std::complex<double> z, int N) {
            WPair r = w_pair(io::parse_model(model), z, N);
            py::dict out;
            out["w_plus"] = r.w_plus;
            out["w_minus"] = r.w_minus;
            out["tail_error"] = r.tail_error;
            return out;
        },
        py::arg("model"), py::arg("z"), py::arg("N"),
        "Log averages of the decaying and growing half-line solutions.");

    mod.def(
        "check_identities",
        [](const std::string& model, const std::vector<std::complex<double>>& z_grid,
           const std::vector<int>& N_seq) {
            std::vector<IdentityRow> rows =
                check_identities(io::parse_model(model), z_grid, N_seq);
            py::list out;
            for (const IdentityRow& r : rows) {
                py::dict d;
                d["z"] = r.z;
                d["N"] = r.N;
                d["wsum_residual"] = r.wsum_residual;
                d["deriv_residual"] = r.deriv_residual;
                d["moment_residual"] = r.moment_residual;
                out.append(d);
            }
            return out;
        },
        py::arg("model"), py::arg("z_grid"), py::arg("N_seq"),
        "Residual table for the sum, derivative, and moment identities.");

    mod.def(
        "check_dap_gamma",
        [](const std::string& model, double x, int N, double resolution) {
            DapReport r = check_dap_gamma(io::parse_model(model), x, N, resolution);
            py::dict out;
            out["has_derivative"] = r.has_derivative;
            out["d_ap"] = r.d_ap;
            out["neg_re_g"] = r.neg_re_g;
            out["difference"] = r.difference;
            return out;
        },
        py::arg("model"), py::arg("x"), py::arg("N"), py::arg("resolution") = 0.0,
        "Approximate derivative of the growth rate against -Re of the Green "
        "average.");

    // --- potential theory -------------------------------------------------
    mod.def(
        "capacity", [](const IntervalList& E) { return capacity(to_set(E)); },
        py::arg("set"), "Logarithmic capacity of a union of closed intervals.");

    mod.def(
        "equilibrium",
        [](const IntervalList& E, int nodes) {
            SetUnion s = to_set(E);
            EquilibriumResult r = equilibrium(s, nodes);
            py::dict out;
            out["robin"] = r.robin;
            out["capacity"] = std::exp(r.robin);
            out["residual"] = r.residual;
            out["frostman"] = frostman_residual(r, s, 100);
            out["omega"] = measure_dict(r.omega);
            return out;
        },
        py::arg("set"), py::arg("nodes") = 48,
        "Equilibrium measure, Robin constant, and Frostman residual.");

    mod.def(
        "check_dos_equilibrium",
        [](const std::string& model, int N, const IntervalList& support, double tol) {
            DosEquilibriumReport r =
                check_dos_equilibrium(dos_measure(io::parse_model(model), N),
                                      to_set(support), tol);
            py::dict out;
            out["kolmogorov"] = r.kolmogorov;
            out["alpha"] = r.alpha;
            out["max_gamma_dev"] = r.max_gamma_dev;
            out["cap"] = r.cap;
            out["pass"] = r.pass;
            return out;
        },
        py::arg("model"), py::arg("N"), py::arg("support"), py::arg("tol") = 0.05,
        "Counting measure against the equilibrium measure of its support.");

    mod.def(
        "check_capacity_bounds",
        [](const std::string& model, int N, const IntervalList& inner,
           const IntervalList& outer) {
            CapacityBoundsReport r = check_capacity_bounds(
                dos_measure(io::parse_model(model), N), to_set(inner), to_set(outer));
            py::dict out;
            out["cap_inner"] = r.cap_inner;
            out["A"] = r.A;
            out["cap_outer"] = r.cap_outer;
            out["inner_length"] = r.inner_length;
            out["four_A"] = r.four_A;
            out["pass"] = r.pass;
            return out;
        },
        py::arg("model"), py::arg("N"), py::arg("inner"), py::arg("outer"),
        "cap(inner) <= A <= cap(outer) and |inner| <= 4A for the N-site mean.");

    // --- Herglotz boundary behaviour --------------------------------------
    mod.def(
        "krein_eval",
        [](const std::vector<double>& breaks, const std::vector<double>& values,
           double c, std::complex<double> z) { return from_krein(to_krein(breaks, values), c)(z); },
        py::arg("breaks"), py::arg("values"), py::arg("c"), py::arg("z"),
        "Evaluate exp of the phase representation at z (Im z > 0).");

    mod.def(
        "boundary_phase",
        [](const std::vector<double>& breaks, const std::vector<double>& values,
           double c, double x) {
            XiReport r = krein_xi(from_krein(to_krein(breaks, values), c), x);
            py::dict out;
            out["xi"] = r.xi;
            out["converged"] = r.status == LimitStatus::Converged;
            return out;
        },
        py::arg("breaks"), py::arg("values"), py::arg("c"), py::arg("x"),
        "Recover the boundary phase of the represented function at x.");

    mod.def(
        "point_mass",
        [](const std::vector<double>& breaks, const std::vector<double>& values,
           double c, double x) {
            RealLimit r = point_mass(from_krein(to_krein(breaks, values), c), x);
            py::dict out;
            out["value"] = r.value;
            out["converged"] = r.ok();
            return out;
        },
        py::arg("breaks"), py::arg("values"), py::arg("c"), py::arg("x"),
        "Boundary-measure mass at x: lim y Im F(x+iy).");

    mod.def(
        "atom_constructor",
        [](const IntervalList& E, double x) {
            KreinFn xi = atom_constructor(to_set(E), x);
            return py::make_tuple(xi.breaks(), xi.values());
        },
        py::arg("set"), py::arg("x"),
        "Phase function reflectionless on the set with an atom at x.");

    mod.def(
        "pointmass_possible",
        [](const IntervalList& E, double x) { return pointmass_possible(to_set(E), x); },
        py::arg("set"), py::arg("x"),
        "Whether a measure reflectionless on the set can put mass at x.");

    mod.def(
        "is_reflectionless",
        [](const std::vector<double>& breaks, const std::vector<double>& values,
           double c, const IntervalList& E, int per_interval, double tol) {
            ReflectionlessReport r = is_reflectionless(
                from_krein(to_krein(breaks, values), c), to_set(E), per_interval, tol);
            py::dict out;
            out["max_abs_re"] = r.max_abs_re;
            out["worst_point"] = r.worst_point;
            out["tested"] = r.tested;
            out["pass"] = r.pass;
            return out;
        },
        py::arg("breaks"), py::arg("values"), py::arg("c"), py::arg("set"),
        py::arg("per_interval") = 64, py::arg("tol") = 1e-6,
        "Check Re F = 0 on the interior of the set from boundary limits.");

    mod.def(
        "xi_naught",
        [](const std::vector<double>& breaks, const std::vector<double>& values,
           const IntervalList& E) {
            KreinFn out = xi_naught(to_krein(breaks, values), to_set(E));
            return py::make_tuple(out.breaks(), out.values());
        },
        py::arg("breaks"), py::arg("values"), py::arg("set"),
        "Rearranged phase: gap mass pushed to the left end of every gap.");

    mod.def(
        "gap_integral",
        [](const std::vector<double>& breaks, const std::vector<double>& values,
           double a, double b, double x) { return I_x(to_krein(breaks, values), a, b, x); },
        py::arg("breaks"), py::arg("values"), py::arg("a"), py::arg("b"), py::arg("x"),
        "int_a^b xi(t)/(t-x) dt for x outside [a,b].");

    // --- sets and formats --------------------------------------------------
    mod.def(
        "parse_set", [](const std::string& text) { return from_set(io::parse_set(text)); },
        py::arg("text"), "Parse \"[lo,hi],[lo,hi],...\" into interval tuples.");

    mod.def(
        "free_m", [](std::complex<double> z) { return m_free(z); }, py::arg("z"),
        "Closed-form free half-line m-function.");
}
