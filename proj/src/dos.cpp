#include "specpot/dos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "specpot/herglotz.hpp"

namespace specpot {

namespace {

constexpr double kPi = std::numbers::pi;

double median_of(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("median of an empty set");
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// (1/N) tr J^n exactly, one banded local propagation per start site.
double trace_power_avg(const Tridiagonal& J, int n) {
    auto N = static_cast<int>(J.diag.size());
    if (n == 0) return 1.0;
    double tr = 0.0;
    std::vector<double> cur(2 * static_cast<std::size_t>(n) + 1);
    std::vector<double> nxt(cur.size());
    for (int i = 0; i < N; ++i) {
        std::fill(cur.begin(), cur.end(), 0.0);
        cur[static_cast<std::size_t>(n)] = 1.0;
        for (int s = 0; s < n; ++s) {
            std::fill(nxt.begin(), nxt.end(), 0.0);
            for (int j = -s; j <= s; ++j) {
                double vj = cur[static_cast<std::size_t>(j + n)];
                if (vj == 0.0) continue;
                int gi = i + j;
                if (gi < 0 || gi >= N) continue;
                nxt[static_cast<std::size_t>(j + n)] += J.diag[static_cast<std::size_t>(gi)] * vj;
                if (gi + 1 < N) nxt[static_cast<std::size_t>(j + 1 + n)] += J.offdiag[static_cast<std::size_t>(gi)] * vj;
                if (gi - 1 >= 0) nxt[static_cast<std::size_t>(j - 1 + n)] += J.offdiag[static_cast<std::size_t>(gi) - 1] * vj;
            }
            std::swap(cur, nxt);
        }
        tr += cur[static_cast<std::size_t>(n)];
    }
    return tr / static_cast<double>(N);
}

} // namespace

DosResult dos_measure(const CoeffModel& m, int N) {
    if (N < 1) throw std::invalid_argument("truncation size must be >= 1");
    std::vector<double> ev = eigenvalues(truncate(m, N));
    std::vector<std::pair<double, double>> atoms;
    atoms.reserve(ev.size());
    double w = 1.0 / static_cast<double>(N);
    for (double t : ev) atoms.emplace_back(t, w);
    DosResult out;
    out.dk = Measure::from_atoms(atoms);
    out.N = N;
    double s = 0.0;
    for (int n = 1; n <= N; ++n) s += std::log(coeffs(m, n).a);
    out.A = std::exp(s / static_cast<double>(N));
    return out;
}

double lyapunov(const CoeffModel& m, cxd z, int N) {
    if (z.imag() == 0.0) return lyapunov(m, z.real(), N);
    SolutionTrace<cxd> tr = fminus(m, z, N);
    return tr.log_abs(static_cast<std::size_t>(N) + 1) / static_cast<double>(N);
}

double lyapunov(const CoeffModel& m, double t, int N) {
    SolutionTrace<double> tr = fminus(m, t, N);
    return tr.log_abs(static_cast<std::size_t>(N) + 1) / static_cast<double>(N);
}

double thouless_rhs(const DosResult& d, cxd z) {
    return measures::log_potential(d.dk, z) - std::log(d.A);
}

WPair w_pair(const CoeffModel& m, cxd z, int N, int M) {
    if (!(z.imag() > 0.0)) throw std::domain_error("w pair needs Im z > 0");
    if (N < 1) throw std::invalid_argument("average length must be >= 1");
    MSweep sweep = m_plus_sites(m, z, N + 1, M);

    auto w_plus_of = [&](const std::vector<cxd>& mv) {
        cxd acc(0.0, 0.0);
        for (int n = 1; n <= N; ++n) {
            cxd term = std::log(coeffs(m, n).a * mv[static_cast<std::size_t>(n)]);
            if (!(term.imag() > 0.0 && term.imag() < kPi))
                throw std::logic_error("site m-function lost the Herglotz property");
            acc += term;
        }
        return acc / static_cast<double>(N);
    };

    WPair out;
    out.z = z;
    out.w_plus = w_plus_of(sweep.m);
    out.tail_error = sweep.alt.empty() ? 0.0 : std::abs(out.w_plus - w_plus_of(sweep.alt));

    PruferTrace pt = prufer_minus(m, z, N);
    out.w_minus = cxd(pt.log_r[static_cast<std::size_t>(N)], pt.phi[static_cast<std::size_t>(N)]) /
                  static_cast<double>(N);
    return out;
}

std::vector<IdentityRow> check_identities(const CoeffModel& m,
                                          const std::vector<cxd>& z_grid,
                                          const std::vector<int>& N_seq) {
    for (cxd z : z_grid)
        if (!(z.imag() >= 0.5)) throw std::domain_error("identity grid needs Im z >= 0.5");
    constexpr double kH = 1e-3;
    constexpr int kMaxMomentOrder = 8;
    std::vector<IdentityRow> rows;
    rows.reserve(z_grid.size() * N_seq.size());
    for (int N : N_seq) {
        DosResult d = dos_measure(m, N);
        Tridiagonal J = truncate(m, N);
        double moment_res = 0.0;
        for (int n = 0; n <= kMaxMomentOrder; ++n)
            moment_res = std::max(moment_res,
                                  std::abs(measures::moment(d.dk, n) - trace_power_avg(J, n)));
        for (cxd z : z_grid) {
            IdentityRow row;
            row.z = z;
            row.N = N;
            WPair wp = w_pair(m, z, N);
            row.wsum_residual = std::abs(wp.w_plus + wp.w_minus - cxd(0.0, kPi));
            cxd g = green_avg(m, z, N).value;
            cxd dw = (w_pair(m, z + kH, N).w_plus - w_pair(m, z - kH, N).w_plus) / (2.0 * kH);
            row.deriv_residual = std::abs(g - dw);
            row.moment_residual = moment_res;
            rows.push_back(row);
        }
    }
    return rows;
}

std::optional<double> approx_derivative(const GridFn& f, double x,
                                        const std::vector<double>& eps_list,
                                        const std::vector<double>& h_schedule) {
    if (!(f.dx > 0.0) || f.v.size() < 2) throw std::invalid_argument("grid function is degenerate");
    if (eps_list.empty() || h_schedule.empty())
        throw std::invalid_argument("eps list and window schedule must be nonempty");
    for (double e : eps_list)
        if (!(e > 0.0)) throw std::invalid_argument("eps values must be positive");
    double h_min = std::numeric_limits<double>::infinity(), h_max = 0.0;
    for (double h : h_schedule) {
        if (!(h > 0.0)) throw std::invalid_argument("window sizes must be positive");
        h_min = std::min(h_min, h);
        h_max = std::max(h_max, h);
    }
    if (f.dx > h_min / 16.0 * (1.0 + 1e-12))
        throw std::invalid_argument("grid spacing must be at most the smallest window over 16");
    auto k = static_cast<long>(std::llround((x - f.x0) / f.dx));
    if (k < 0 || k >= static_cast<long>(f.v.size()) ||
        std::abs(x - f.x_at(static_cast<std::size_t>(k))) > f.dx * 1e-6)
        throw std::invalid_argument("x must lie on the grid");
    if (x - h_max < f.x0 - f.dx * 1e-9 || x + h_max > f.x_end() + f.dx * 1e-9)
        throw std::invalid_argument("grid does not cover the largest window");

    auto kc = static_cast<std::size_t>(k);
    double fx = f.v[kc];

    // difference quotients inside (x-h, x+h), indexed by offset from x
    auto quotients = [&](double h) {
        std::vector<double> q;
        auto r = static_cast<long>(std::ceil(h / f.dx)) - 1;  // strict interior
        for (long j = -r; j <= r; ++j) {
            if (j == 0) continue;
            long i = k + j;
            if (i < 0 || i >= static_cast<long>(f.v.size())) continue;
            double t = f.x_at(static_cast<std::size_t>(i));
            q.push_back((f.v[static_cast<std::size_t>(i)] - fx) / (t - x));
        }
        return q;
    };

    double d = median_of(quotients(h_min));

    std::vector<double> sorted_h = h_schedule;
    std::sort(sorted_h.begin(), sorted_h.end());
    std::size_t take = std::min<std::size_t>(3, sorted_h.size());
    for (double eps : eps_list) {
        for (std::size_t s = 0; s < take; ++s) {
            double h = sorted_h[s];
            std::vector<double> q = quotients(h);
            std::size_t bad = 0;
            for (double qv : q)
                if (std::abs(qv - d) >= eps) ++bad;
            double density = static_cast<double>(bad) * f.dx / (2.0 * h);
            if (!(density < 0.1)) return std::nullopt;
        }
    }
    return d;
}

DapReport check_dap_gamma(const CoeffModel& m, double x, int N, double resolution) {
    if (N < 1) throw std::invalid_argument("truncation size must be >= 1");
    const std::vector<double> h_sched{0.4, 0.2, 0.1};
    const std::vector<double> eps{0.1, 0.06};
    double dx = resolution > 0.0 ? resolution : 0.1 / 16.0;
    auto half = static_cast<long>(std::ceil(0.4 / dx)) + 2;
    GridFn g;
    g.x0 = x - static_cast<double>(half) * dx;
    g.dx = dx;
    g.v.resize(2 * static_cast<std::size_t>(half) + 1);
    for (std::size_t i = 0; i < g.v.size(); ++i) g.v[i] = lyapunov(m, g.x_at(i), N);

    std::optional<double> d = approx_derivative(g, x, eps, h_sched);

    HerglotzEval F([m, N](cxd z) { return green_avg(m, z, N).value; });
    LimitSchedule sched;
    sched.y_floor = 1e-3;
    sched.tol = 1e-7;
    Extrapolated bv = boundary_value(F, x, sched);

    DapReport r;
    r.has_derivative = d.has_value();
    r.d_ap = d.value_or(std::numeric_limits<double>::quiet_NaN());
    r.neg_re_g = -bv.value.real();
    r.difference = d ? std::abs(*d - r.neg_re_g) : std::numeric_limits<double>::quiet_NaN();
    return r;
}

RegularityReport regularity_profiles(const DosResult& d, const GridFn& gamma, double x,
                                     double eps, const std::vector<double>& h_list) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    for (std::size_t i = 0; i < h_list.size(); ++i) {
        if (!(h_list[i] > 0.0 && h_list[i] <= 0.5))
            throw std::invalid_argument("window sizes must lie in (0, 1/2]");
        if (i > 0 && !(h_list[i] < h_list[i - 1]))
            throw std::invalid_argument("window sizes must be decreasing");
    }
    if (gamma.v.empty() || !(gamma.dx > 0.0))
        throw std::invalid_argument("gamma grid is degenerate");
    auto kx = static_cast<long>(std::llround((x - gamma.x0) / gamma.dx));
    if (kx < 0 || kx >= static_cast<long>(gamma.v.size()))
        throw std::invalid_argument("x must lie inside the gamma grid");
    double gx = gamma.v[static_cast<std::size_t>(kx)];

    std::vector<std::pair<double, double>> atoms = d.dk.atoms();
    std::sort(atoms.begin(), atoms.end());

    RegularityReport rep;
    for (double h : h_list) {
        rep.h.push_back(h);

        // sup_t mu([t, t+h]) over atom-anchored windows, exact for atomic mu
        double best = 0.0, sum = 0.0;
        std::size_t j = 0;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (j < i) {
                j = i;
                sum = 0.0;
            }
            while (j < atoms.size() && atoms[j].first <= atoms[i].first + h) {
                sum += atoms[j].second;
                ++j;
            }
            best = std::max(best, sum);
            sum -= atoms[i].second;
        }
        rep.holder_product.push_back(best * (-std::log(h)));

        auto r = static_cast<long>(std::ceil(h / gamma.dx)) - 1;
        std::size_t bad = 0;
        for (long off = -r; off <= r; ++off) {
            if (off == 0) continue;
            long i = kx + off;
            if (i < 0 || i >= static_cast<long>(gamma.v.size()))
                throw std::invalid_argument("gamma grid does not cover the window");
            if (std::abs(gamma.v[static_cast<std::size_t>(i)] - gx) >= eps) ++bad;
        }
        rep.deviation_ratio.push_back(static_cast<double>(bad) * gamma.dx / (2.0 * h));
    }
    return rep;
}

} // namespace specpot
