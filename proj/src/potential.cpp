#include "specpot/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "specpot/chebyshev.hpp"

namespace specpot {

namespace {

constexpr double pi = 3.14159265358979323846;

// Dense LU with partial pivoting; a is row-major n x n, consumed in place.
std::vector<double> lu_solve(std::vector<double> a, std::vector<double> b) {
    int n = static_cast<int>(b.size());
    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::abs(v));
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(a[col * n + col]);
        for (int r = col + 1; r < n; ++r) {
            double v = std::abs(a[r * n + col]);
            if (v > best) { best = v; piv = r; }
        }
        if (best <= 1e-13 * (scale + 1.0))
            throw std::runtime_error("equilibrium collocation system is singular");
        if (piv != col) {
            for (int k = col; k < n; ++k) std::swap(a[col * n + k], a[piv * n + k]);
            std::swap(b[col], b[piv]);
        }
        double d = a[col * n + col];
        for (int r = col + 1; r < n; ++r) {
            double f = a[r * n + col] / d;
            if (f == 0.0) continue;
            for (int k = col + 1; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
            b[r] -= f * b[col];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int k = r + 1; k < n; ++k) s -= a[r * n + k] * b[k];
        b[r] = s / a[r * n + r];
    }
    return b;
}

struct Solved {
    std::vector<std::vector<double>> c;  // smooth-factor coefficients per interval
    double robin = 0.0;
};

// Collocation rows: the log potential, expanded in per-interval Chebyshev
// modes against the edge weight, equals the Robin constant at every node;
// the final row fixes total mass pi * sum_j c_j[0] = 1.
Solved solve_system(const std::vector<Interval>& parts, int n) {
    int nparts = static_cast<int>(parts.size());
    int m = nparts * n + 1;
    std::vector<double> a(static_cast<std::size_t>(m) * m, 0.0), rhs(m, 0.0);
    std::vector<double> zeta = cheb::nodes(n);

    int row = 0;
    for (int i = 0; i < nparts; ++i) {
        for (int q = 0; q < n; ++q, ++row) {
            double x = parts[i].mid() + parts[i].half() * zeta[q];
            for (int j = 0; j < nparts; ++j) {
                cxd zj((x - parts[j].mid()) / parts[j].half(), 0.0);
                std::vector<double> modes = cheb::log_kernel_modes(n, zj);
                double* dst = &a[static_cast<std::size_t>(row) * m + j * n];
                for (int k = 0; k < n; ++k) dst[k] = modes[k];
                dst[0] += pi * std::log(parts[j].half());
            }
            a[static_cast<std::size_t>(row) * m + (m - 1)] = -1.0;
        }
    }
    for (int j = 0; j < nparts; ++j) a[static_cast<std::size_t>(row) * m + j * n] = pi;
    rhs[row] = 1.0;

    std::vector<double> sol = lu_solve(std::move(a), std::move(rhs));
    Solved out;
    out.c.resize(nparts);
    for (int j = 0; j < nparts; ++j)
        out.c[j].assign(sol.begin() + j * n, sol.begin() + (j + 1) * n);
    out.robin = sol[m - 1];
    return out;
}

} // namespace

EquilibriumResult equilibrium(const SetUnion& E, int nodes_per_interval) {
    if (E.empty()) throw std::domain_error("equilibrium of empty set");
    for (const Interval& iv : E.parts())
        if (iv.degenerate())
            throw std::domain_error("equilibrium requires nondegenerate intervals");
    if (nodes_per_interval < 2)
        throw std::domain_error("equilibrium needs at least 2 nodes per interval");

    const std::vector<Interval>& parts = E.parts();
    int n = nodes_per_interval;
    for (int attempt = 0;; ++attempt) {
        Solved s = solve_system(parts, n);

        std::vector<double> zeta = cheb::nodes(n);
        double worst = 0.0;
        for (const std::vector<double>& cj : s.c)
            for (double z : zeta) worst = std::min(worst, cheb::eval(cj, z));
        if (worst < -1e-10) {
            // The true density is strictly positive inside each component;
            // a clear negative means the resolution is too coarse.
            if (attempt == 0) { n *= 2; continue; }
            throw std::runtime_error("equilibrium density negative after refinement");
        }

        EquilibriumResult out;
        out.robin = s.robin;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            std::vector<double> vals(n);
            for (int q = 0; q < n; ++q)
                vals[q] = std::max(0.0, cheb::eval(s.c[j], zeta[q]));
            out.omega.add_piece_values(parts[j], vals, /*edge_singular=*/true);
        }

        // Probe between the nodes (Chebyshev extrema are never first-kind
        // points) to get an honest discretization residual.
        double res = 0.0;
        for (const Interval& iv : parts)
            for (int q = 1; q < n; ++q) {
                double t = iv.mid() + iv.half() * std::cos(q * pi / n);
                res = std::max(res, std::abs(measures::log_potential(out.omega, t) - s.robin));
            }
        out.residual = res;
        return out;
    }
}

double capacity(const SetUnion& E) {
    if (E.empty()) throw std::domain_error("capacity of empty set");
    const std::vector<Interval>& parts = E.parts();
    if (parts.size() == 1) return parts[0].length() / 4.0;
    return std::exp(equilibrium(E).robin);
}

double frostman_residual(const EquilibriumResult& r, const SetUnion& E,
                         int probes_per_interval) {
    if (probes_per_interval < 1)
        throw std::domain_error("frostman_residual needs at least one probe");
    constexpr double golden = 0.61803398874989484820;
    double worst = 0.0;
    for (const Interval& iv : E.parts())
        for (int i = 0; i < probes_per_interval; ++i) {
            double t = iv.lo + iv.length() * ((i + golden) / probes_per_interval);
            worst = std::max(worst, std::abs(measures::log_potential(r.omega, t) - r.robin));
        }
    return worst;
}

DosEquilibriumReport check_dos_equilibrium(const DosResult& d, const SetUnion& support,
                                           double tol) {
    EquilibriumResult eq = equilibrium(support);

    DosEquilibriumReport rep;
    rep.cap = std::exp(eq.robin);
    rep.alpha = eq.robin - std::log(d.A);
    rep.kolmogorov = measures::kolmogorov(d.dk, eq.omega);

    const auto& atoms = d.dk.atoms();
    constexpr double snap = 1e-5;   // gamma dips logarithmically at eigenvalues
    constexpr int grid_per_interval = 64;
    double dev = 0.0;
    for (const Interval& iv : support.parts()) {
        double margin = 0.025 * iv.length();
        double lo = iv.lo + margin, hi = iv.hi - margin;
        for (int q = 0; q < grid_per_interval; ++q) {
            double t = lo + (hi - lo) * q / (grid_per_interval - 1);
            auto it = std::lower_bound(
                atoms.begin(), atoms.end(), t,
                [](const std::pair<double, double>& p, double v) { return p.first < v; });
            double at = 0.0, dist = std::numeric_limits<double>::infinity();
            if (it != atoms.end()) { dist = std::abs(it->first - t); at = it->first; }
            if (it != atoms.begin() && std::abs(std::prev(it)->first - t) < dist) {
                dist = std::abs(std::prev(it)->first - t);
                at = std::prev(it)->first;
            }
            if (dist < snap) t = at + (t >= at ? snap : -snap);
            double gamma = thouless_rhs(d, cxd(t, 0.0));
            dev = std::max(dev, std::abs(gamma - rep.alpha));
        }
    }
    rep.max_gamma_dev = dev;
    rep.pass = rep.kolmogorov <= tol && rep.max_gamma_dev <= tol;
    return rep;
}

CapacityBoundsReport check_capacity_bounds(const DosResult& d, const SetUnion& inner,
                                           const SetUnion& outer, double tol) {
    CapacityBoundsReport r;
    r.cap_inner = capacity(inner);
    r.cap_outer = capacity(outer);
    r.A = d.A;
    r.inner_length = inner.total_length();
    r.four_A = 4.0 * d.A;
    r.inner_le_A = r.cap_inner <= r.A * (1.0 + tol);
    r.A_le_outer = r.A <= r.cap_outer * (1.0 + tol);
    r.length_le_4A = r.inner_length <= r.four_A * (1.0 + tol);
    r.pass = r.inner_le_A && r.A_le_outer && r.length_le_4A;
    return r;
}

} // namespace specpot
