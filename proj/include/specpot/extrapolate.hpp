#pragma once

#include <complex>
#include <functional>

namespace specpot {

enum class LimitStatus { Converged, NotConverged, Divergent };

// Geometric approach schedule y_k = 2^-k for boundary limits y -> 0+.
struct LimitSchedule {
    int k_min = 1;
    int k_max = 40;
    double tol = 1e-8;              // successive-extrapolant agreement target
    double divergence_bound = 1e8;  // |f(y)| beyond this flags divergence
    double y_floor = 0.0;           // truncates the schedule for expensive evaluators

    double y(int k) const;
};

struct Extrapolated {
    std::complex<double> value{0.0, 0.0};  // best extrapolant (last raw value if divergent)
    LimitStatus status = LimitStatus::NotConverged;
    double last_diff = 0.0;  // |e_k - e_{k-1}| at exit
    double final_y = 0.0;
    int evals = 0;

    bool ok() const { return status == LimitStatus::Converged; }
};

struct RealLimit {
    double value = 0.0;
    LimitStatus status = LimitStatus::NotConverged;
    double last_diff = 0.0;
    double final_y = 0.0;
    int evals = 0;

    bool ok() const { return status == LimitStatus::Converged; }
};

// Two-point Richardson in y: e_k = 2 f(y_{k+1}) - f(y_k) removes the O(y) term.
// Converged once three successive extrapolants agree below tol. Divergent when
// |f| exceeds the bound, or when the raw differences fail to decay through the
// whole schedule (logarithmic blow-up has constant differences).
Extrapolated extrapolate_to_zero(const std::function<std::complex<double>(double)>& f,
                                 const LimitSchedule& sched = {});

RealLimit extrapolate_to_zero_real(const std::function<double(double)>& f,
                                   const LimitSchedule& sched = {});

} // namespace specpot
