#pragma once

#include <functional>
#include <vector>

namespace specpot::quad {

/// Gauss-Legendre rule on [-1, 1].
struct Rule {
    std::vector<double> x;
    std::vector<double> w;
};

/// Cached n-point Gauss-Legendre rule (Newton on the Legendre recurrence).
const Rule& gauss_legendre(int n);

/// Integrate f over [a, b] with an n-point Gauss-Legendre rule.
double integrate_gl(const std::function<double(double)>& f, double a, double b, int n);

/// Integrate f over [a, b] on a mesh graded geometrically towards both
/// endpoints (handles integrable endpoint singularities such as log).
double integrate_graded(const std::function<double(double)>& f, double a, double b,
                        int levels = 18, double ratio = 0.25, int n = 16);

} // namespace specpot::quad
