#pragma once

#include <stdexcept>
#include <vector>

namespace specpot {

/// Closed bounded interval [lo, hi]. Degenerate (lo == hi) is allowed and
/// carries zero length; lo > hi or non-finite endpoints are rejected.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double lo_, double hi_);

    double length() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    double half() const { return 0.5 * (hi - lo); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool degenerate() const { return lo == hi; }
};

/// Finite union of pairwise disjoint closed intervals, kept sorted by lo.
/// Intervals whose closures touch are merged on construction.
class SetUnion {
public:
    SetUnion() = default;
    explicit SetUnion(std::vector<Interval> parts);

    static SetUnion single(double lo, double hi) { return SetUnion({Interval(lo, hi)}); }

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }

    bool contains(double x) const;
    /// Total Lebesgue measure.
    double total_length() const;
    /// Smallest interval containing the union; throws if empty.
    Interval hull() const;
    /// Lebesgue measure of the intersection with [a, b].
    double overlap_length(double a, double b) const;

    /// Bounded components of the complement within the hull (the gaps).
    std::vector<Interval> gaps() const;

private:
    std::vector<Interval> parts_;
};

/// |E n (x-h, x+h)| / (2h), exact interval arithmetic.
double lebesgue_density(const SetUnion& E, double x, double h);

} // namespace specpot
