#pragma once

#include <complex>
#include <cstdint>
#include <variant>
#include <vector>

namespace specpot {

using cxd = std::complex<double>;

// Coefficient models for half-line operators with a(0) = 1 by convention.
struct FreeModel {};

struct PeriodicModel {
    std::vector<double> a;  // period entries a(1..p), all > 0
    std::vector<double> b;  // b(1..p)
};

// b(n) = 2*lambda*cos(2*pi*(alpha*n + theta)), a = 1. The golden alpha is kept
// as a double-double so alpha*n mod 1 stays accurate over long orbits.
struct QuasiPeriodicModel {
    double lambda = 0.0;
    double theta = 0.0;
    bool golden_alpha = true;
    double alpha = 0.0;  // used when golden_alpha is false
};

// Independent uniforms a(n) in [a_lo, a_hi], b(n) in [b_lo, b_hi], produced by
// a per-index stateless hash of the seed: same seed, same coefficients,
// random access allowed.
struct RandomModel {
    std::uint64_t seed = 1;
    double a_lo = 1.0, a_hi = 1.0;
    double b_lo = -1.0, b_hi = 1.0;
};

// Explicit head a(1..L), b(1..L) with a free tail beyond.
struct TableModel {
    std::vector<double> a;
    std::vector<double> b;
};

using CoeffModel = std::variant<FreeModel, PeriodicModel, QuasiPeriodicModel,
                                RandomModel, TableModel>;

struct Coeff {
    double a;
    double b;
};

Coeff coeffs(const CoeffModel& m, std::int64_t n);  // n >= 1; n = 0 gives (1, 0)

// Smallest C with (C+1)^-1 <= a(n) <= C+1 and |b(n)| <= C for all n.
double coeff_bound(const CoeffModel& m);

// Transfer trace f(0..N+1) with f(0)=0, f(1)=1, kept in scaled form: the true
// value at index n is f[n] * 2^expo2[n]. The pair rescaling keeps the working
// values inside [2^-512, 2^512] while the exponents carry the growth.
template <class T>
struct SolutionTrace {
    std::vector<T> f;
    std::vector<long> expo2;

    double log_abs(std::size_t n) const;  // ln |f(n)|; -inf at an exact zero
    T value(std::size_t n) const;         // true value; may overflow for display
};

SolutionTrace<double> fminus(const CoeffModel& m, double t, int N);
SolutionTrace<cxd> fminus(const CoeffModel& m, cxd z, int N);

// Polar trace of f(.) for Im z > 0: f(n) = R(n) e^{i phi(n)}, R(1) = 1,
// phi(1) = 0, each increment inside (0, pi). Index i holds n = i + 1.
struct PruferTrace {
    std::vector<double> log_r;
    std::vector<double> phi;
};

PruferTrace prufer_minus(const CoeffModel& m, cxd z, int N);

// Free half-line m-function (-z + sqrt(z-2)sqrt(z+2))/2, the branch mapping
// the upper half plane into itself; also valid for real z off [-2,2].
cxd m_free(cxd z);

struct MPlusResult {
    cxd value;
    double tail_error;  // 0 for exact free/periodic/table tails
};

// <delta_1, (J-z)^-1 delta_1> by the backward continued fraction
// m(n) = 1/(b(n) - z - a(n)^2 m(n+1)), seeded by the exact tail m-function
// when the model has one, else by a depth-M cutoff with the error reported.
MPlusResult m_plus(const CoeffModel& m, cxd z, int M = 4000);

// Site m-functions m(k) = <delta_k, (J_k - z)^-1 delta_k> of the restrictions
// to [k, inf), for k = 1..K, from one backward sweep of depth M. When the tail
// is cut off (random / quasi-periodic models), alt holds a second sweep from a
// different seed and tail_error the largest resulting discrepancy.
struct MSweep {
    std::vector<cxd> m;    // m[k-1] is the site-k value
    std::vector<cxd> alt;  // empty when the tail seed is exact
    double tail_error;
    int M;
};

MSweep m_plus_sites(const CoeffModel& m, cxd z, int K, int M = 0);

struct GreenAvg {
    cxd value;
    double tail_error;
    int M;  // depth actually used
};

// (1/N) sum of diagonal resolvent entries, via left/right m-function sweeps.
// M = 0 picks N plus a buffer that grows like 1/Im z.
GreenAvg green_avg(const CoeffModel& m, cxd z, int N, int M = 0);

struct Tridiagonal {
    std::vector<double> diag;     // b(1..N)
    std::vector<double> offdiag;  // a(1..N-1)
};

Tridiagonal truncate(const CoeffModel& m, int N);

// Number of eigenvalues strictly below t (shifted-pivot sign count).
int sturm_count(const Tridiagonal& J, double t);

// All eigenvalues, ascending, by bisection on sturm_count to absolute tol.
std::vector<double> eigenvalues(const Tridiagonal& J, double tol = 1e-12);

} // namespace specpot
