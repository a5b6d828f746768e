#include "specpot/interval.hpp"

#include <algorithm>
#include <cmath>

namespace specpot {

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("interval endpoints must be finite");
    if (lo > hi)
        throw std::invalid_argument("interval requires lo <= hi");
}

SetUnion::SetUnion(std::vector<Interval> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (const Interval& iv : parts_) {
        if (!merged.empty() && iv.lo <= merged.back().hi) {
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        } else {
            merged.push_back(iv);
        }
    }
    parts_ = std::move(merged);
}

bool SetUnion::contains(double x) const {
    for (const Interval& iv : parts_)
        if (iv.contains(x)) return true;
    return false;
}

double SetUnion::total_length() const {
    double s = 0.0;
    for (const Interval& iv : parts_) s += iv.length();
    return s;
}

Interval SetUnion::hull() const {
    if (parts_.empty()) throw std::domain_error("hull of empty set");
    return Interval(parts_.front().lo, parts_.back().hi);
}

double SetUnion::overlap_length(double a, double b) const {
    if (b < a) std::swap(a, b);
    double s = 0.0;
    for (const Interval& iv : parts_) {
        double lo = std::max(a, iv.lo), hi = std::min(b, iv.hi);
        if (hi > lo) s += hi - lo;
    }
    return s;
}

std::vector<Interval> SetUnion::gaps() const {
    std::vector<Interval> g;
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i].lo > parts_[i - 1].hi)
            g.emplace_back(parts_[i - 1].hi, parts_[i].lo);
    return g;
}

double lebesgue_density(const SetUnion& E, double x, double h) {
    if (!(h > 0)) throw std::domain_error("lebesgue_density requires h > 0");
    return E.overlap_length(x - h, x + h) / (2.0 * h);
}

} // namespace specpot
