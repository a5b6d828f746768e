#include "specpot/extrapolate.hpp"

#include <cmath>
#include <vector>

namespace specpot {

double LimitSchedule::y(int k) const { return std::max(std::ldexp(1.0, -k), y_floor); }

Extrapolated extrapolate_to_zero(const std::function<std::complex<double>(double)>& f,
                                 const LimitSchedule& s) {
    Extrapolated out;
    double y0 = s.y(s.k_min);
    std::complex<double> prev_raw = f(y0);
    out.evals = 1;
    out.final_y = y0;
    out.value = prev_raw;
    if (std::abs(prev_raw) > s.divergence_bound) {
        out.status = LimitStatus::Divergent;
        return out;
    }
    std::complex<double> prev_ext;
    bool have_ext = false;
    int agree = 0;
    std::vector<double> raw_diffs;
    for (int k = s.k_min + 1; k <= s.k_max; ++k) {
        double yk = s.y(k);
        std::complex<double> raw = f(yk);
        ++out.evals;
        out.final_y = yk;
        if (std::abs(raw) > s.divergence_bound) {
            out.status = LimitStatus::Divergent;
            out.value = raw;
            return out;
        }
        raw_diffs.push_back(std::abs(raw - prev_raw));
        std::complex<double> ext = 2.0 * raw - prev_raw;
        if (have_ext) {
            out.last_diff = std::abs(ext - prev_ext);
            agree = out.last_diff < s.tol ? agree + 1 : 0;
            if (agree >= 3) {
                out.status = LimitStatus::Converged;
                out.value = ext;
                return out;
            }
        }
        prev_ext = ext;
        have_ext = true;
        prev_raw = raw;
        if (yk <= s.y_floor) break;
    }
    out.value = have_ext ? prev_ext : prev_raw;
    if (raw_diffs.size() >= 6) {
        double head = raw_diffs[raw_diffs.size() - 6];
        double tail = raw_diffs.back();
        if (tail > 100.0 * s.tol && tail > 0.5 * head) out.status = LimitStatus::Divergent;
    }
    return out;
}

RealLimit extrapolate_to_zero_real(const std::function<double(double)>& f,
                                   const LimitSchedule& s) {
    Extrapolated e = extrapolate_to_zero(
        [&f](double y) { return std::complex<double>(f(y), 0.0); }, s);
    return RealLimit{e.value.real(), e.status, e.last_diff, e.final_y, e.evals};
}

} // namespace specpot
