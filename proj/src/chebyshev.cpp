#include "specpot/chebyshev.hpp"

#include <cmath>
#include <stdexcept>

namespace specpot::cheb {

static const double pi = 3.14159265358979323846;

std::vector<double> nodes(int n) {
    if (n < 1) throw std::invalid_argument("cheb::nodes requires n >= 1");
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j) {
        double theta = (2.0 * j + 1.0) * pi / (2.0 * n);
        x[n - 1 - j] = std::cos(theta); // ascending
    }
    return x;
}

std::vector<double> coeffs(const std::vector<double>& v) {
    int n = static_cast<int>(v.size());
    if (n < 1) throw std::invalid_argument("cheb::coeffs on empty values");
    std::vector<double> a(n, 0.0);
    for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            double theta = (2.0 * j + 1.0) * pi / (2.0 * n);
            s += v[n - 1 - j] * std::cos(k * theta);
        }
        a[k] = s * (k == 0 ? 1.0 : 2.0) / n;
    }
    return a;
}

template <class T>
static T clenshaw(const std::vector<double>& a, T x) {
    T b1{}, b2{};
    for (int k = static_cast<int>(a.size()) - 1; k >= 1; --k) {
        T b0 = 2.0 * x * b1 - b2 + a[k];
        b2 = b1;
        b1 = b0;
    }
    return x * b1 - b2 + a[0];
}

double eval(const std::vector<double>& a, double x) { return clenshaw(a, x); }
cxd eval(const std::vector<double>& a, cxd x) { return clenshaw(a, x); }

std::vector<double> antiderivative(const std::vector<double>& a) {
    int n = static_cast<int>(a.size());
    std::vector<double> b(n + 1, 0.0);
    auto coef = [&](int k) { return (k >= 0 && k < n) ? a[k] : 0.0; };
    b[1] = coef(0) - 0.5 * coef(2);
    for (int k = 2; k <= n; ++k) b[k] = (coef(k - 1) - coef(k + 1)) / (2.0 * k);
    double at_m1 = 0.0;
    for (int k = 1; k <= n; ++k) at_m1 += b[k] * (k % 2 == 0 ? 1.0 : -1.0);
    b[0] = -at_m1;
    return b;
}

std::vector<double> derivative(const std::vector<double>& a) {
    int n = static_cast<int>(a.size());
    if (n <= 1) return {0.0};
    std::vector<double> d(n - 1, 0.0);
    double dkp1 = 0.0, dkp2 = 0.0; // d[k+1], d[k+2] during downward sweep
    for (int k = n - 2; k >= 0; --k) {
        double dk = dkp2 + 2.0 * (k + 1) * a[k + 1];
        d[k] = dk;
        dkp2 = dkp1;
        dkp1 = dk;
    }
    d[0] *= 0.5;
    return d;
}

cxd joukowski_out(cxd zeta) {
    cxd s = std::sqrt(zeta - 1.0) * std::sqrt(zeta + 1.0);
    cxd w1 = zeta + s, w2 = zeta - s;
    return std::abs(w1) >= std::abs(w2) ? w1 : w2;
}

double log_kernel_sum(const std::vector<double>& a, cxd zeta) {
    int n = static_cast<int>(a.size());
    if (zeta.imag() == 0.0 && std::abs(zeta.real()) <= 1.0) {
        double theta = std::acos(zeta.real());
        double s = a[0] * (-pi * std::log(2.0));
        for (int k = 1; k < n; ++k) s -= a[k] * pi * std::cos(k * theta) / k;
        return s;
    }
    cxd w = joukowski_out(zeta);
    cxd winv = 1.0 / w;
    double s = a[0] * pi * std::log(0.5 * std::abs(w));
    cxd p = 1.0;
    for (int k = 1; k < n; ++k) {
        p *= winv;
        s -= a[k] * pi * p.real() / k;
    }
    return s;
}

std::vector<double> log_kernel_modes(int n, cxd zeta) {
    std::vector<double> out(n);
    if (zeta.imag() == 0.0 && std::abs(zeta.real()) <= 1.0) {
        double theta = std::acos(zeta.real());
        out[0] = -pi * std::log(2.0);
        for (int k = 1; k < n; ++k) out[k] = -pi * std::cos(k * theta) / k;
        return out;
    }
    cxd w = joukowski_out(zeta);
    cxd winv = 1.0 / w;
    out[0] = pi * std::log(0.5 * std::abs(w));
    cxd p = 1.0;
    for (int k = 1; k < n; ++k) {
        p *= winv;
        out[k] = -pi * p.real() / k;
    }
    return out;
}

cxd cauchy_kernel_sum(const std::vector<double>& a, cxd zeta) {
    if (zeta.imag() == 0.0 && std::abs(zeta.real()) <= 1.0)
        throw std::domain_error("cauchy_kernel_sum: zeta on [-1,1]");
    cxd w = joukowski_out(zeta);
    cxd winv = 1.0 / w;
    cxd denom = w - winv;
    cxd s = 0.0;
    cxd p = 1.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        s += a[k] * p;
        p *= winv;
    }
    return -2.0 * pi * s / denom;
}

double lower_weighted_integral(const std::vector<double>& a, double xi) {
    double c = std::min(1.0, std::max(-1.0, xi));
    double theta = std::acos(c);
    double s = a[0] * (pi - theta);
    for (std::size_t k = 1; k < a.size(); ++k)
        s -= a[k] * std::sin(k * theta) / static_cast<double>(k);
    return s;
}

} // namespace specpot::cheb
