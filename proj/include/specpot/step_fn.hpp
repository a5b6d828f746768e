#pragma once

#include <vector>

#include "specpot/extrapolate.hpp"
#include "specpot/interval.hpp"

namespace specpot {

// Right-continuous piecewise-constant function on the whole line: values[i] on
// (breaks[i-1], breaks[i]), with values.front()/values.back() extending to
// -inf/+inf. breaks strictly increasing; values has one more entry.
class StepFunction {
public:
    StepFunction(std::vector<double> breaks, std::vector<double> values);

    static StepFunction constant(double v);
    static StepFunction indicator(const Interval& iv);
    static StepFunction indicator(const SetUnion& E);

    const std::vector<double>& breaks() const { return breaks_; }
    const std::vector<double>& values() const { return values_; }

    double operator()(double t) const;
    double integral(double lo, double hi) const;  // requires lo <= hi, both finite

    // Drops breaks between equal-valued neighbours.
    StepFunction compressed() const;

private:
    std::vector<double> breaks_;
    std::vector<double> values_;
};

// Pointwise product; breakpoints merge, then equal neighbours compress.
StepFunction product(const StepFunction& f, const StepFunction& g);

// Bounded multiplier for the truncated transforms: |theta| <= 1 everywhere and
// theta = 0 outside a bounded set.
class BoundedFn {
public:
    explicit BoundedFn(StepFunction f);

    static BoundedFn constant_on(const Interval& support, double v);
    static BoundedFn one_on(const SetUnion& E);
    static BoundedFn sign_about(double x, const Interval& support);

    const StepFunction& fn() const { return f_; }

private:
    StepFunction f_;
};

// \int over {|t-x| > y} of theta(t) chi_E(t) / (t-x) dt, in closed form.
// The window is the exterior of the y-ball only; E bounded keeps it finite.
double truncated_hilbert(const SetUnion& E, const BoundedFn& theta, double x, double y);

// Regularized transform lim_{y->0+} \int_E ((t-x)/((t-x)^2+y^2) - t/(t^2+1))
// theta(t) dt, evaluated in closed form per y and extrapolated along the
// schedule. Divergence is a reported status, not an error.
RealLimit tilde_hilbert(const SetUnion& E, const BoundedFn& theta, double x,
                        const LimitSchedule& sched = {});

} // namespace specpot
