#include "specpot/step_fn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specpot {

namespace {

bool strictly_increasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i - 1] < v[i])) return false;
    return true;
}

} // namespace

StepFunction::StepFunction(std::vector<double> breaks, std::vector<double> values)
    : breaks_(std::move(breaks)), values_(std::move(values)) {
    if (values_.size() != breaks_.size() + 1)
        throw std::invalid_argument("step function needs one value per piece");
    if (!strictly_increasing(breaks_))
        throw std::invalid_argument("step function breaks must strictly increase");
    for (double b : breaks_)
        if (!std::isfinite(b)) throw std::invalid_argument("step function breaks must be finite");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("step function values must be finite");
}

StepFunction StepFunction::constant(double v) { return StepFunction({}, {v}); }

StepFunction StepFunction::indicator(const Interval& iv) {
    if (iv.degenerate()) return constant(0.0);
    return StepFunction({iv.lo, iv.hi}, {0.0, 1.0, 0.0});
}

StepFunction StepFunction::indicator(const SetUnion& E) {
    std::vector<double> brk;
    std::vector<double> val{0.0};
    for (const Interval& iv : E.parts()) {
        if (iv.degenerate()) continue;
        brk.push_back(iv.lo);
        val.push_back(1.0);
        brk.push_back(iv.hi);
        val.push_back(0.0);
    }
    return StepFunction(std::move(brk), std::move(val));
}

double StepFunction::operator()(double t) const {
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    return values_[static_cast<std::size_t>(it - breaks_.begin())];
}

double StepFunction::integral(double lo, double hi) const {
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw std::domain_error("step function integral needs finite lo <= hi");
    double s = 0.0;
    for (std::size_t j = 0; j < values_.size(); ++j) {
        double p = j == 0 ? lo : std::max(lo, breaks_[j - 1]);
        double q = j == breaks_.size() ? hi : std::min(hi, breaks_[j]);
        if (q > p) s += values_[j] * (q - p);
    }
    return s;
}

StepFunction StepFunction::compressed() const {
    std::vector<double> brk;
    std::vector<double> val{values_[0]};
    for (std::size_t j = 0; j < breaks_.size(); ++j) {
        if (values_[j + 1] != val.back()) {
            brk.push_back(breaks_[j]);
            val.push_back(values_[j + 1]);
        }
    }
    return StepFunction(std::move(brk), std::move(val));
}

StepFunction product(const StepFunction& f, const StepFunction& g) {
    std::vector<double> brk(f.breaks());
    brk.insert(brk.end(), g.breaks().begin(), g.breaks().end());
    std::sort(brk.begin(), brk.end());
    brk.erase(std::unique(brk.begin(), brk.end()), brk.end());
    std::vector<double> val;
    val.reserve(brk.size() + 1);
    val.push_back(f.values().front() * g.values().front());
    for (double b : brk) {
        // Value just right of b; both factors are right-continuous.
        val.push_back(f(b) * g(b));
    }
    return StepFunction(std::move(brk), std::move(val)).compressed();
}

BoundedFn::BoundedFn(StepFunction f) : f_(std::move(f)) {
    if (f_.values().front() != 0.0 || f_.values().back() != 0.0)
        throw std::invalid_argument("bounded multiplier must vanish off a bounded set");
    for (double v : f_.values())
        if (std::abs(v) > 1.0) throw std::invalid_argument("bounded multiplier needs |values| <= 1");
}

BoundedFn BoundedFn::constant_on(const Interval& support, double v) {
    if (std::abs(v) > 1.0) throw std::invalid_argument("bounded multiplier needs |values| <= 1");
    if (support.degenerate() || v == 0.0) return BoundedFn(StepFunction::constant(0.0));
    return BoundedFn(StepFunction({support.lo, support.hi}, {0.0, v, 0.0}));
}

BoundedFn BoundedFn::one_on(const SetUnion& E) {
    return BoundedFn(StepFunction::indicator(E));
}

BoundedFn BoundedFn::sign_about(double x, const Interval& support) {
    if (support.degenerate()) return BoundedFn(StepFunction::constant(0.0));
    if (x <= support.lo) return constant_on(support, 1.0);
    if (x >= support.hi) return constant_on(support, -1.0);
    return BoundedFn(StepFunction({support.lo, x, support.hi}, {0.0, -1.0, 1.0, 0.0}));
}

double truncated_hilbert(const SetUnion& E, const BoundedFn& theta, double x, double y) {
    if (!(y > 0.0) || y > 1.0)
        throw std::domain_error("truncation radius must lie in (0, 1]");
    StepFunction h = product(theta.fn(), StepFunction::indicator(E));
    const auto& brk = h.breaks();
    const auto& val = h.values();
    double s = 0.0;
    auto piece = [&](double p, double q, double v) {
        if (v == 0.0) return;
        // Left of the window: (p, q) clipped to t < x - y.
        double ql = std::min(q, x - y);
        if (ql > p) s += v * std::log((x - ql) / (x - p));
        // Right of the window: t > x + y.
        double pr = std::max(p, x + y);
        if (q > pr) s += v * std::log((q - x) / (pr - x));
    };
    for (std::size_t j = 1; j + 1 <= brk.size(); ++j) piece(brk[j - 1], brk[j], val[j]);
    return s;
}

RealLimit tilde_hilbert(const SetUnion& E, const BoundedFn& theta, double x,
                        const LimitSchedule& sched) {
    StepFunction h = product(theta.fn(), StepFunction::indicator(E));
    struct Term {
        double p, q, v, fixed;
    };
    std::vector<Term> terms;
    const auto& brk = h.breaks();
    const auto& val = h.values();
    for (std::size_t j = 1; j + 1 <= brk.size(); ++j) {
        double p = brk[j - 1], q = brk[j], v = val[j];
        if (v == 0.0) continue;
        terms.push_back({p, q, v, -0.5 * std::log((q * q + 1.0) / (p * p + 1.0))});
    }
    auto at = [&terms, x](double y) {
        double s = 0.0;
        double y2 = y * y;
        for (const Term& t : terms) {
            double dp = t.p - x, dq = t.q - x;
            s += t.v * (0.5 * std::log((dq * dq + y2) / (dp * dp + y2)) + t.fixed);
        }
        return s;
    };
    return extrapolate_to_zero_real(at, sched);
}

} // namespace specpot
