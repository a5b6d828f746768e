#include "specpot/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace specpot {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double uniform01(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t v = mix64(seed + k * 0x9E3779B97F4A7C15ull);
    return static_cast<double>(v >> 11) * 0x1.0p-53;
}

struct DoubleDouble {
    double hi, lo;
};

// (sqrt(5)-1)/2 to roughly double-double accuracy; the halving and the
// subtraction are exact, the Newton term carries sqrt(5)'s rounding error.
DoubleDouble golden_alpha() {
    double s = std::sqrt(5.0);
    double r = std::fma(s, s, -5.0);
    double slo = -r / (2.0 * s);
    return {(s - 1.0) * 0.5, slo * 0.5};
}

double frac_orbit(const DoubleDouble& alpha, std::int64_t n, double theta) {
    double nd = static_cast<double>(n);
    double p = alpha.hi * nd;
    double e = std::fma(alpha.hi, nd, -p);
    double low = alpha.lo * nd + e + theta;
    double x = p + low;
    double f1 = std::floor(x);
    double y = (p - f1) + low;  // p - f1 is exact: nearby same-scale doubles
    y -= std::floor(y);
    return y;
}

double plain_frac(double x) {
    double y = x - std::floor(x);
    return y < 1.0 ? y : 0.0;
}

double mag_of(double x) { return std::abs(x); }
double mag_of(cxd x) { return std::max(std::abs(x.real()), std::abs(x.imag())); }

double scale2(double v, int e) { return std::ldexp(v, e); }
cxd scale2(cxd v, int e) { return {std::ldexp(v.real(), e), std::ldexp(v.imag(), e)}; }

template <class T>
SolutionTrace<T> run_fminus(const CoeffModel& m, T z, int N) {
    if (N < 1) throw std::invalid_argument("trace length must be >= 1");
    SolutionTrace<T> tr;
    tr.f.resize(static_cast<std::size_t>(N) + 2);
    tr.expo2.assign(static_cast<std::size_t>(N) + 2, 0);
    T fp = T(0), fc = T(1);
    long s = 0;
    tr.f[0] = fp;
    tr.f[1] = fc;
    double a_prev = 1.0;
    for (int n = 1; n <= N; ++n) {
        Coeff c = coeffs(m, n);
        T fn = ((z - c.b) * fc - a_prev * fp) / c.a;
        fp = fc;
        fc = fn;
        double mag = std::max(mag_of(fp), mag_of(fc));
        if (mag > 0x1.0p512) {
            fp = scale2(fp, -512);
            fc = scale2(fc, -512);
            s += 512;
        } else if (mag > 0.0 && mag < 0x1.0p-512) {
            fp = scale2(fp, 512);
            fc = scale2(fc, 512);
            s -= 512;
        }
        tr.f[static_cast<std::size_t>(n) + 1] = fc;
        tr.expo2[static_cast<std::size_t>(n) + 1] = s;
        a_prev = c.a;
    }
    return tr;
}

} // namespace

Coeff coeffs(const CoeffModel& m, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("coefficient index must be >= 0");
    if (n == 0) return {1.0, 0.0};
    return std::visit(
        overloaded{
            [](const FreeModel&) { return Coeff{1.0, 0.0}; },
            [n](const PeriodicModel& p) {
                if (p.a.empty() || p.a.size() != p.b.size())
                    throw std::invalid_argument("periodic model needs equal nonempty tables");
                std::size_t i = static_cast<std::size_t>((n - 1) % static_cast<std::int64_t>(p.a.size()));
                if (!(p.a[i] > 0.0)) throw std::invalid_argument("off-diagonal entries must be positive");
                return Coeff{p.a[i], p.b[i]};
            },
            [n](const QuasiPeriodicModel& q) {
                static const DoubleDouble golden = golden_alpha();
                double y = q.golden_alpha ? frac_orbit(golden, n, q.theta)
                                          : plain_frac(q.alpha * static_cast<double>(n) + q.theta);
                return Coeff{1.0, 2.0 * q.lambda * std::cos(kTwoPi * y)};
            },
            [n](const RandomModel& r) {
                if (!(r.a_lo > 0.0) || r.a_hi < r.a_lo || r.b_hi < r.b_lo)
                    throw std::invalid_argument("random model ranges are invalid");
                auto k = static_cast<std::uint64_t>(n);
                double ua = uniform01(r.seed, 2 * k);
                double ub = uniform01(r.seed, 2 * k + 1);
                return Coeff{r.a_lo + (r.a_hi - r.a_lo) * ua, r.b_lo + (r.b_hi - r.b_lo) * ub};
            },
            [n](const TableModel& t) {
                if (t.a.size() != t.b.size())
                    throw std::invalid_argument("table model needs equal-length tables");
                auto i = static_cast<std::size_t>(n - 1);
                if (i >= t.a.size()) return Coeff{1.0, 0.0};
                if (!(t.a[i] > 0.0)) throw std::invalid_argument("off-diagonal entries must be positive");
                return Coeff{t.a[i], t.b[i]};
            }},
        m);
}

double coeff_bound(const CoeffModel& m) {
    auto from_tables = [](const std::vector<double>& a, const std::vector<double>& b) {
        double c = 0.0;
        for (double v : b) c = std::max(c, std::abs(v));
        for (double v : a) {
            c = std::max(c, v - 1.0);
            c = std::max(c, 1.0 / v - 1.0);
        }
        return c;
    };
    return std::visit(
        overloaded{[](const FreeModel&) { return 0.0; },
                   [&](const PeriodicModel& p) { return from_tables(p.a, p.b); },
                   [](const QuasiPeriodicModel& q) { return 2.0 * std::abs(q.lambda); },
                   [](const RandomModel& r) {
                       double c = std::max(std::abs(r.b_lo), std::abs(r.b_hi));
                       c = std::max(c, r.a_hi - 1.0);
                       c = std::max(c, 1.0 / r.a_lo - 1.0);
                       return std::max(c, 0.0);
                   },
                   [&](const TableModel& t) { return from_tables(t.a, t.b); }},
        m);
}

template <class T>
double SolutionTrace<T>::log_abs(std::size_t n) const {
    return std::log(std::abs(f[n])) + static_cast<double>(expo2[n]) * kLn2;
}

template <class T>
T SolutionTrace<T>::value(std::size_t n) const {
    long e = std::clamp(expo2[n], -100000L, 100000L);
    return scale2(f[n], static_cast<int>(e));
}

template struct SolutionTrace<double>;
template struct SolutionTrace<cxd>;

SolutionTrace<double> fminus(const CoeffModel& m, double t, int N) {
    return run_fminus<double>(m, t, N);
}

SolutionTrace<cxd> fminus(const CoeffModel& m, cxd z, int N) {
    return run_fminus<cxd>(m, z, N);
}

PruferTrace prufer_minus(const CoeffModel& m, cxd z, int N) {
    if (!(z.imag() > 0.0)) throw std::domain_error("polar trace requires Im z > 0");
    SolutionTrace<cxd> tr = fminus(m, z, N);
    PruferTrace out;
    out.log_r.resize(static_cast<std::size_t>(N) + 1);
    out.phi.resize(static_cast<std::size_t>(N) + 1);
    out.log_r[0] = 0.0;
    out.phi[0] = 0.0;
    for (int n = 1; n <= N; ++n) {
        auto i = static_cast<std::size_t>(n);
        double dphi = std::arg(tr.f[i + 1] / tr.f[i]);
        if (!(dphi > 0.0 && dphi < std::numbers::pi))
            throw std::logic_error("phase increment left (0, pi): branch fault");
        out.phi[i] = out.phi[i - 1] + dphi;
        out.log_r[i] = tr.log_abs(i + 1);
    }
    return out;
}

cxd m_free(cxd z) { return 0.5 * (-z + std::sqrt(z - 2.0) * std::sqrt(z + 2.0)); }

namespace {

// m at `site` for an exactly periodic model: fixed point of the composed
// Mobius step m(n) -> 1/(b(n) - z - a(n)^2 m(n+1)) over one period.
cxd periodic_m_at(const PeriodicModel& p, cxd z, std::int64_t site) {
    if (p.a.empty() || p.a.size() != p.b.size())
        throw std::invalid_argument("periodic model needs equal nonempty tables");
    cxd m00 = 1.0, m01 = 0.0, m10 = 0.0, m11 = 1.0;
    auto per = static_cast<std::int64_t>(p.a.size());
    for (std::int64_t j = 0; j < per; ++j) {
        auto i = static_cast<std::size_t>((site + j - 1) % per);
        Coeff c{p.a[i], p.b[i]};
        cxd t10 = -c.a * c.a, t11 = c.b - z;
        // M = M * T with T = [[0,1],[t10,t11]]
        cxd n00 = m01 * t10, n01 = m00 + m01 * t11;
        cxd n10 = m11 * t10, n11 = m10 + m11 * t11;
        m00 = n00;
        m01 = n01;
        m10 = n10;
        m11 = n11;
    }
    // fixed point of m = (m00 m + m01)/(m10 m + m11)
    if (std::abs(m10) < 1e-300) {
        cxd den = m11 - m00;
        if (std::abs(den) < 1e-300) throw std::logic_error("degenerate period map");
        return m01 / den;
    }
    cxd beta = m00 - m11;
    cxd s = std::sqrt(beta * beta + 4.0 * m01 * m10);
    cxd n1 = beta + s, n2 = beta - s;
    cxd big = std::abs(n1) >= std::abs(n2) ? n1 : n2;
    cxd r1 = big / (2.0 * m10);
    cxd r2 = -m01 / (m10 * r1);  // root product = -m01/m10
    cxd root = r1.imag() > r2.imag() ? r1 : r2;
    if (!(root.imag() > 0.0)) throw std::logic_error("period fixed point lost the Herglotz branch");
    return root;
}

cxd tail_seed(const CoeffModel& m, cxd z, int top_site, bool& exact) {
    exact = true;
    if (std::holds_alternative<FreeModel>(m)) return m_free(z);
    if (const auto* p = std::get_if<PeriodicModel>(&m)) {
        cxd zz = z.imag() > 0.0 ? z : z + cxd(0.0, 1e-9);
        return periodic_m_at(*p, zz, top_site);
    }
    if (std::holds_alternative<TableModel>(m)) return m_free(z);
    exact = false;
    return cxd(0.0, 0.0);
}

} // namespace

MPlusResult m_plus(const CoeffModel& m, cxd z, int M) {
    if (z.imag() < 0.0) throw std::domain_error("m-function requires Im z >= 0");
    if (M < 1) throw std::invalid_argument("tail depth must be >= 1");
    MPlusResult out{cxd(0.0, 0.0), 0.0};
    if (std::holds_alternative<FreeModel>(m)) {
        out.value = m_free(z);
    } else if (const auto* p = std::get_if<PeriodicModel>(&m)) {
        cxd zz = z.imag() > 0.0 ? z : z + cxd(0.0, 1e-9);
        out.value = periodic_m_at(*p, zz, 1);
    } else if (const auto* t = std::get_if<TableModel>(&m)) {
        auto len = static_cast<int>(t->a.size());
        cxd cur = m_free(z);
        for (int n = len; n >= 1; --n) {
            Coeff c = coeffs(m, n);
            cxd den = c.b - z - c.a * c.a * cur;
            if (std::abs(den) == 0.0) throw std::domain_error("resolvent pole on the evaluation path");
            cur = 1.0 / den;
        }
        out.value = cur;
    } else {
        if (!(z.imag() > 0.0))
            throw std::domain_error("truncated tail evaluation needs Im z > 0");
        cxd cur(0.0, 0.0);
        for (int n = M; n >= 1; --n) {
            Coeff c = coeffs(m, n);
            cur = 1.0 / (c.b - z - c.a * c.a * cur);
        }
        out.value = cur;
        double cb = coeff_bound(m) + 1.0;
        out.tail_error = cb * cb / (z.imag() * static_cast<double>(M));
    }
    if (z.imag() > 0.0 && out.value.imag() < -1e-12 * (1.0 + std::abs(out.value)))
        throw std::logic_error("m-function lost the Herglotz property");
    return out;
}

MSweep m_plus_sites(const CoeffModel& m, cxd z, int K, int M) {
    if (!(z.imag() > 0.0)) throw std::domain_error("site m-functions need Im z > 0");
    if (K < 1) throw std::invalid_argument("site count must be >= 1");
    double y = z.imag();
    if (M < K) {
        double buffer = std::min(2e5, std::max(500.0, std::ceil(12.0 / y)));
        M = K + static_cast<int>(buffer);
    }
    if (const auto* t = std::get_if<TableModel>(&m))
        M = std::max(M, static_cast<int>(t->a.size()) + 1);

    bool exact = true;
    cxd seed = tail_seed(m, z, M + 1, exact);

    auto sweep = [&](cxd top) {
        std::vector<cxd> mv(static_cast<std::size_t>(K));
        cxd cur = top;
        for (int k = M; k >= 1; --k) {
            Coeff c = coeffs(m, k);
            cur = 1.0 / (c.b - z - c.a * c.a * cur);
            if (k <= K) mv[static_cast<std::size_t>(k) - 1] = cur;
        }
        return mv;
    };

    MSweep out;
    out.M = M;
    out.m = sweep(seed);
    out.tail_error = 0.0;
    if (!exact) {
        out.alt = sweep(cxd(0.0, 1.0));
        for (std::size_t i = 0; i < out.m.size(); ++i)
            out.tail_error = std::max(out.tail_error, std::abs(out.m[i] - out.alt[i]));
    }
    return out;
}

GreenAvg green_avg(const CoeffModel& m, cxd z, int N, int M) {
    if (!(z.imag() > 0.0)) throw std::domain_error("resolvent averages need Im z > 0");
    if (N < 1) throw std::invalid_argument("average length must be >= 1");
    MSweep sweep = m_plus_sites(m, z, N + 1, M);

    auto average = [&](const std::vector<cxd>& mp) {
        cxd acc(0.0, 0.0);
        cxd mleft(0.0, 0.0);  // Dirichlet wall left of site 1
        double a_prev = 1.0;
        for (int n = 1; n <= N; ++n) {
            Coeff c = coeffs(m, n);
            cxd den = c.b - z - a_prev * a_prev * mleft - c.a * c.a * mp[static_cast<std::size_t>(n)];
            acc += 1.0 / den;
            mleft = 1.0 / (c.b - z - a_prev * a_prev * mleft);
            a_prev = c.a;
        }
        return acc / static_cast<double>(N);
    };

    GreenAvg out;
    out.M = sweep.M;
    out.value = average(sweep.m);
    out.tail_error = sweep.alt.empty() ? 0.0 : std::abs(out.value - average(sweep.alt));
    if (!(out.value.imag() > 0.0))
        throw std::logic_error("resolvent average lost the Herglotz property");
    return out;
}

Tridiagonal truncate(const CoeffModel& m, int N) {
    if (N < 1) throw std::invalid_argument("truncation size must be >= 1");
    Tridiagonal J;
    J.diag.resize(static_cast<std::size_t>(N));
    J.offdiag.resize(static_cast<std::size_t>(N) - 1);
    for (int n = 1; n <= N; ++n) {
        Coeff c = coeffs(m, n);
        J.diag[static_cast<std::size_t>(n) - 1] = c.b;
        if (n < N) J.offdiag[static_cast<std::size_t>(n) - 1] = c.a;
    }
    return J;
}

int sturm_count(const Tridiagonal& J, double t) {
    if (J.diag.empty() || J.offdiag.size() + 1 != J.diag.size())
        throw std::invalid_argument("tridiagonal sizes are inconsistent");
    int cnt = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < J.diag.size(); ++i) {
        double sq = i > 0 ? J.offdiag[i - 1] * J.offdiag[i - 1] : 0.0;
        double di = (J.diag[i] - t) - sq / d;
        if (di == 0.0) di = 1e-14 * (std::abs(J.diag[i] - t) + sq + 1.0);
        if (di < 0.0) ++cnt;
        d = di;
    }
    return cnt;
}

namespace {

void block_eigenvalues(const Tridiagonal& B, double tol, std::vector<double>& out) {
    auto n = static_cast<int>(B.diag.size());
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int i = 0; i < n; ++i) {
        double r = (i > 0 ? std::abs(B.offdiag[static_cast<std::size_t>(i) - 1]) : 0.0) +
                   (i + 1 < n ? std::abs(B.offdiag[static_cast<std::size_t>(i)]) : 0.0);
        lo = std::min(lo, B.diag[static_cast<std::size_t>(i)] - r);
        hi = std::max(hi, B.diag[static_cast<std::size_t>(i)] + r);
    }
    double pad = std::max(tol, 1e-12 * (hi - lo + 1.0));
    lo -= pad;
    hi += pad;
    struct Task {
        double lo, hi;
        int clo, chi;
    };
    std::vector<Task> stack{{lo, hi, 0, n}};
    while (!stack.empty()) {
        Task t = stack.back();
        stack.pop_back();
        if (t.chi == t.clo) continue;
        double mid = 0.5 * (t.lo + t.hi);
        if (t.hi - t.lo <= tol || mid <= t.lo || mid >= t.hi) {
            for (int i = t.clo; i < t.chi; ++i) out.push_back(mid);
            continue;
        }
        int cm = std::clamp(sturm_count(B, mid), t.clo, t.chi);
        stack.push_back({t.lo, mid, t.clo, cm});
        stack.push_back({mid, t.hi, cm, t.chi});
    }
}

} // namespace

std::vector<double> eigenvalues(const Tridiagonal& J, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (J.diag.empty() || J.offdiag.size() + 1 != J.diag.size())
        throw std::invalid_argument("tridiagonal sizes are inconsistent");
    std::vector<double> out;
    out.reserve(J.diag.size());
    std::size_t start = 0;
    for (std::size_t end = 0; end < J.diag.size(); ++end) {
        bool cut = end + 1 == J.diag.size() || J.offdiag[end] == 0.0;
        if (!cut) continue;
        Tridiagonal blk;
        blk.diag.assign(J.diag.begin() + static_cast<std::ptrdiff_t>(start),
                        J.diag.begin() + static_cast<std::ptrdiff_t>(end) + 1);
        if (end > start)
            blk.offdiag.assign(J.offdiag.begin() + static_cast<std::ptrdiff_t>(start),
                               J.offdiag.begin() + static_cast<std::ptrdiff_t>(end));
        block_eigenvalues(blk, tol, out);
        start = end + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace specpot
