#pragma once

// Independent oracles for the test suite. Everything here is derived from
// closed forms or brute-force numerics that share no code with the library:
// root selection instead of branch-tracked square roots, trapezoid sums
// instead of Chebyshev quadrature, long-double transfer products instead of
// the rescaled three-term recursion.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracles {

using cxd = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

// Fixed-point style root pick: m solves m^2 + z m + 1 = 0 and the half-line
// resolvent is the root with |m| < 1 (the contraction of m -> -1/(z+m)).
inline cxd free_m(cxd z) {
    cxd disc = std::sqrt(z * z - 4.0);
    cxd r1 = 0.5 * (-z + disc), r2 = 0.5 * (-z - disc);
    return std::abs(r1) < std::abs(r2) ? r1 : r2;
}

// Growth rate of the free transfer cocycle: log of the larger root of
// w^2 - z w + 1 = 0; zero on the essential spectrum.
inline double free_gamma(cxd z) {
    cxd disc = std::sqrt(z * z - 4.0);
    cxd w1 = 0.5 * (z + disc), w2 = 0.5 * (z - disc);
    return std::log(std::max(std::abs(w1), std::abs(w2)));
}

// Diagonal Green function of the full-line free operator, Im z > 0.
inline cxd free_green(cxd z) {
    cxd s = std::sqrt(z - 2.0) * std::sqrt(z + 2.0);
    return -1.0 / s;
}

// Arcsine log potential on [-2, 2] by brute trapezoid in the angle variable.
inline double arcsine_log_potential(cxd z, int n = 200000) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        double th = kPi * (i + 0.5) / n;
        s += std::log(std::abs(z - 2.0 * std::cos(th)));
    }
    return s / n;
}

inline double cap_interval(double lo, double hi) { return (hi - lo) / 4.0; }

// Capacity of { t : t^2 in [c, d] } (a symmetric two-interval set) via the
// square map: cap(E)^2 = cap([c, d]).
inline double cap_symmetric_pair(double c, double d) {
    return std::sqrt(cap_interval(c, d));
}

// Catalan numbers: even moments of the semicircle density sqrt(4-t^2)/(2 pi).
inline double catalan(int k) {
    double v = 1.0;
    for (int i = 0; i < k; ++i) v = v * 2.0 * (2 * i + 1) / (i + 2);
    return v;
}

// Exponential representation of an indicator phase xi = chi_(a,b): the
// integral is elementary, G(z) = e^c (b - z)/(a - z) sqrt((1+a^2)/(1+b^2)).
inline cxd indicator_exp_rep(double a, double b, double c, cxd z) {
    return std::exp(c) * (cxd(b) - z) / (cxd(a) - z) *
           std::sqrt((1.0 + a * a) / (1.0 + b * b));
}

// Transfer-matrix product in long double for the solution with f(0) = 0,
// f(1) = 1: independent check of the rescaled recursion. Small N only.
inline std::complex<long double> transfer_fminus(const std::vector<double>& a,
                                                 const std::vector<double>& b, cxd z, int n) {
    using cld = std::complex<long double>;
    cld f0 = 0.0L, f1 = 1.0L;
    long double ap = 1.0L;
    cld zz(static_cast<long double>(z.real()), static_cast<long double>(z.imag()));
    for (int k = 1; k < n; ++k) {
        cld f2 = ((zz - static_cast<long double>(b[k - 1])) * f1 - ap * f0) /
                 static_cast<long double>(a[k - 1]);
        f0 = f1;
        f1 = f2;
        ap = static_cast<long double>(a[k - 1]);
    }
    return f1;
}

// Characteristic polynomial det(z I - J_n) by the standard three-term
// determinant recursion, in long double.
inline std::complex<long double> charpoly(const std::vector<double>& a,
                                          const std::vector<double>& b, cxd z, int n) {
    using cld = std::complex<long double>;
    cld p0 = 1.0L, p1 = 0.0L;
    cxd zz = z;
    cld zl(static_cast<long double>(zz.real()), static_cast<long double>(zz.imag()));
    for (int k = 1; k <= n; ++k) {
        long double ak1 = k >= 2 ? static_cast<long double>(a[k - 2]) : 0.0L;
        cld p2 = (zl - static_cast<long double>(b[k - 1])) * p0 - ak1 * ak1 * p1;
        p1 = p0;
        p0 = p2;
    }
    return p0;
}

// Brute-force eigenvalues for tiny matrices via characteristic-polynomial
// sign bisection (pure long double, no Sturm shortcut).
inline std::vector<double> tiny_eigs(const std::vector<double>& a, const std::vector<double>& b,
                                     int n, double lo, double hi, int grid = 200000) {
    auto p = [&](double t) {
        long double p0 = 1.0L, p1 = 0.0L;
        for (int k = 1; k <= n; ++k) {
            long double ak1 = k >= 2 ? static_cast<long double>(a[k - 2]) : 0.0L;
            long double p2 = (static_cast<long double>(t) - static_cast<long double>(b[k - 1])) * p0 -
                             ak1 * ak1 * p1;
            p1 = p0;
            p0 = p2;
        }
        return p0;
    };
    std::vector<double> out;
    long double prev = p(lo);
    for (int i = 1; i <= grid; ++i) {
        double t = lo + (hi - lo) * i / grid;
        long double cur = p(t);
        if ((prev < 0) != (cur < 0)) {
            double left = lo + (hi - lo) * (i - 1) / grid, right = t;
            for (int it = 0; it < 80; ++it) {
                double mid = 0.5 * (left + right);
                if ((p(left) < 0) != (p(mid) < 0)) right = mid;
                else left = mid;
            }
            out.push_back(0.5 * (left + right));
        }
        prev = cur;
    }
    return out;
}

// splitmix64 stream, kept here verbatim so tests can predict the random
// model's coefficient sequence without touching library internals: site n
// draws u(2n) for the off-diagonal and u(2n+1) for the diagonal.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline double uniform01(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t v = mix64(seed + k * 0x9E3779B97F4A7C15ull);
    return static_cast<double>(v >> 11) * 0x1.0p-53;
}

} // namespace oracles
