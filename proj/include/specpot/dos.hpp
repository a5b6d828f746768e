#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "specpot/jacobi.hpp"
#include "specpot/measure.hpp"

namespace specpot {

using measures::Measure;

// Eigenvalue counting measure of the N-site truncation: N atoms of weight 1/N
// plus the geometric mean A of a(1..N).
struct DosResult {
    Measure dk;
    double A = 1.0;
    int N = 0;
};

DosResult dos_measure(const CoeffModel& m, int N);

// Finite-volume Lyapunov exponent (1/N) ln |f_-(N+1, z)|. A real z hitting an
// exact eigenvalue of the truncation gives -infinity (measure-zero event).
double lyapunov(const CoeffModel& m, cxd z, int N);
double lyapunov(const CoeffModel& m, double t, int N);

// -ln A + \int ln|t - z| dk(t). Agrees with lyapunov at the same N exactly:
// a(1)...a(N) f_-(N+1, z) is the characteristic polynomial of the truncation.
double thouless_rhs(const DosResult& d, cxd z);

struct WPair {
    cxd w_plus;
    cxd w_minus;
    cxd z;
    double tail_error = 0.0;  // 0 when the tail m-function is exact
};

// w_- = (ln R(N+1) + i phi(N+1)) / N from the polar trace; w_+ is the average
// of Ln(a(n) m(n+1)) over the site m-functions from a depth-M backward sweep.
// Both imaginary parts lie in (0, pi), and w_+ + w_- -> i pi as N grows.
WPair w_pair(const CoeffModel& m, cxd z, int N, int M = 0);

struct IdentityRow {
    cxd z;
    int N = 0;
    double wsum_residual = 0.0;    // |w_+ + w_- - i pi|
    double deriv_residual = 0.0;   // |g_N - dw_+/dz| (central difference)
    double moment_residual = 0.0;  // max over n <= 8 of |moment(dk, n) - (1/N) tr J^n|
};

// One row per (N, z); requires Im z >= 0.5 on the whole grid. The moment
// column compares against exact traces of matrix powers and stays at
// eigensolver accuracy; the first two columns decay like 1/N.
std::vector<IdentityRow> check_identities(const CoeffModel& m,
                                          const std::vector<cxd>& z_grid,
                                          const std::vector<int>& N_seq);

// Samples of a function on the uniform grid x0 + i*dx.
struct GridFn {
    double x0 = 0.0;
    double dx = 1.0;
    std::vector<double> v;

    double x_at(std::size_t i) const { return x0 + dx * static_cast<double>(i); }
    double x_end() const { return v.empty() ? x0 : x_at(v.size() - 1); }
};

// Approximate derivative at a grid point x: the candidate is the median
// difference quotient inside the smallest window, and it is accepted only if,
// for every eps, the measured density of quotients deviating by at least eps
// stays below 0.1 at the three smallest windows of the schedule. Returns
// nothing when the density test fails. Requires dx <= min(h)/16 and x on the
// grid with every window covered.
std::optional<double> approx_derivative(const GridFn& f, double x,
                                        const std::vector<double>& eps_list,
                                        const std::vector<double>& h_schedule);

struct DapReport {
    bool has_derivative = false;
    double d_ap = 0.0;        // meaningful only when has_derivative
    double neg_re_g = 0.0;    // -Re g(x), extrapolated from the upper half plane
    double difference = 0.0;  // |d_ap - neg_re_g|; NaN when no derivative
};

// Compares the approximate derivative of the finite-volume Lyapunov exponent
// at x against -Re of the averaged diagonal resolvent. The gamma grid spans
// windows {0.4, 0.2, 0.1} with eps {0.1, 0.06}; resolution <= 0 picks the
// coarsest admissible spacing (0.1/16).
DapReport check_dap_gamma(const CoeffModel& m, double x, int N, double resolution = 0.0);

struct RegularityReport {
    std::vector<double> h;
    std::vector<double> holder_product;   // sup_t (k(t+h) - k(t)) * (-ln h)
    std::vector<double> deviation_ratio;  // |{t in (x-h,x+h): |gamma(t)-gamma(x)| >= eps}| / (2h)
};

// Continuity-modulus diagnostics: the log-Holder products should stay bounded,
// and the deviation ratios should fall toward 0 when gamma is continuous at x.
// h values must be decreasing in (0, 1/2].
RegularityReport regularity_profiles(const DosResult& d, const GridFn& gamma, double x,
                                     double eps, const std::vector<double>& h_list);

} // namespace specpot
