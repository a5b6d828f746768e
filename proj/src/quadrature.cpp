#include "specpot/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace specpot::quad {

static Rule make_gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre requires n >= 1");
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre P_n(x) and derivative by recurrence.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    return r;
}

const Rule& gauss_legendre(int n) {
    static std::map<int, Rule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
    return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n) {
    const Rule& r = gauss_legendre(n);
    double m = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += r.w[i] * f(m + h * r.x[i]);
    return s * h;
}

double integrate_graded(const std::function<double(double)>& f, double a, double b,
                        int levels, double ratio, int n) {
    // Segments shrink geometrically towards both endpoints, so integrable
    // endpoint singularities (log, inverse square root) cost only the
    // innermost sliver's contribution in accuracy.
    if (!(b > a)) return 0.0;
    double m = 0.5 * (a + b);
    double s = 0.0;
    double prev = a;
    for (int k = levels - 1; k >= 0; --k) {
        double cut = a + (m - a) * std::pow(ratio, k);
        s += integrate_gl(f, prev, cut, n);
        prev = cut;
    }
    prev = b;
    for (int k = levels - 1; k >= 0; --k) {
        double cut = b - (b - m) * std::pow(ratio, k);
        s += integrate_gl(f, cut, prev, n);
        prev = cut;
    }
    return s;
}

} // namespace specpot::quad
