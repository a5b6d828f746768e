#pragma once

#include <complex>
#include <vector>

namespace specpot::cheb {

using cxd = std::complex<double>;

/// First-kind Chebyshev points cos((2j+1)pi/2n), returned ascending in [-1,1].
std::vector<double> nodes(int n);

/// Coefficients a_k with f(x) = sum_k a_k T_k(x) interpolating the given
/// values at nodes(n) (ascending order, matching nodes()).
std::vector<double> coeffs(const std::vector<double>& values_ascending);

/// Clenshaw evaluation of sum a_k T_k(x); works for real and complex x.
double eval(const std::vector<double>& a, double x);
cxd eval(const std::vector<double>& a, cxd x);

/// Coefficients of the antiderivative F with F(-1) = 0 (same basis).
std::vector<double> antiderivative(const std::vector<double>& a);

/// Coefficients of the derivative.
std::vector<double> derivative(const std::vector<double>& a);

/// Joukowski preimage w of zeta = (w + 1/w)/2 with |w| >= 1.
cxd joukowski_out(cxd zeta);

/// sum_k a_k * I_k(zeta) with I_k = integral of T_k(x) log|x - zeta| / sqrt(1-x^2) dx
/// over [-1,1]. Closed forms: interior -pi log2 / -pi T_k(zeta)/k, exterior via
/// the Joukowski map. zeta may be real inside [-1,1] or anywhere off it.
double log_kernel_sum(const std::vector<double>& a, cxd zeta);

/// The individual mode integrals I_0..I_{n-1} from log_kernel_sum.
std::vector<double> log_kernel_modes(int n, cxd zeta);

/// sum_k a_k * J_k(zeta) with J_k = integral of T_k(x) / ((x - zeta) sqrt(1-x^2)) dx.
/// Requires zeta off [-1,1].
cxd cauchy_kernel_sum(const std::vector<double>& a, cxd zeta);

/// integral over x in [-1, xi] of (sum_k a_k T_k(x)) / sqrt(1-x^2) dx, xi in [-1,1].
double lower_weighted_integral(const std::vector<double>& a, double xi);

} // namespace specpot::cheb
