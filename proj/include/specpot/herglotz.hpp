#pragma once

#include <complex>
#include <functional>
#include <variant>
#include <vector>

#include "specpot/extrapolate.hpp"
#include "specpot/interval.hpp"
#include "specpot/measure.hpp"
#include "specpot/step_fn.hpp"

namespace specpot {

using cxd = std::complex<double>;
using measures::Measure;

// F(z) = a + b z + \int (1/(t-z) - t/(t^2+1)) dmu(t) with compactly supported
// finite mu; the canonical upper half-plane representation.
class HerglotzRep {
public:
    HerglotzRep(double a, double b, Measure mu);

    double a() const { return a_; }
    double b() const { return b_; }
    const Measure& mu() const { return mu_; }
    double correction() const { return correction_; }  // \int t/(t^2+1) dmu

private:
    double a_;
    double b_;
    Measure mu_;
    double correction_;
};

// Piecewise-constant phase function xi: R -> [0,1]. The tail values must each
// lie in {0,1} or agree with each other; that keeps the exponential
// representation integral of ln G convergent and unambiguous.
class KreinFn {
public:
    KreinFn(std::vector<double> breaks, std::vector<double> values);

    const std::vector<double>& breaks() const { return f_.breaks(); }
    const std::vector<double>& values() const { return f_.values(); }
    const StepFunction& step() const { return f_; }

    double operator()(double t) const { return f_(t); }
    double integral(double lo, double hi) const { return f_.integral(lo, hi); }

    // xi takes a single value 0 or 1, so exp of its representation is a real
    // constant rather than a genuinely Herglotz map.
    bool degenerate() const;

private:
    StepFunction f_;
};

// ln G(z) = c + \int (1/(t-z) - t/(t^2+1)) xi(t) dt, summed in closed form.
cxd krein_log_eval(const KreinFn& xi, double c, cxd z);

// Evaluable upper half-plane map: either a representation, exp of the phase
// integral of a KreinFn, or an arbitrary closed-form callable.
class HerglotzEval {
public:
    HerglotzEval(HerglotzRep rep);  // NOLINT: implicit by design
    HerglotzEval(KreinFn xi, double c);
    explicit HerglotzEval(std::function<cxd(cxd)> f);

    cxd operator()(cxd z) const;  // requires Im z > 0
    bool degenerate() const { return degenerate_; }
    const KreinFn* krein() const;  // non-null when built from a phase function

private:
    struct KreinExp {
        KreinFn xi;
        double c;
    };
    std::variant<HerglotzRep, KreinExp, std::function<cxd(cxd)>> impl_;
    bool degenerate_ = false;
};

cxd eval(const HerglotzRep& F, cxd z);
cxd eval(const HerglotzEval& F, cxd z);

HerglotzEval from_krein(const KreinFn& xi, double c = 0.0);

// Richardson limit of F(x + iy) for y -> 0+.
Extrapolated boundary_value(const HerglotzEval& F, double x, const LimitSchedule& sched = {});

struct XiReport {
    double xi = 0.0;  // in [0,1]
    LimitStatus status = LimitStatus::NotConverged;
    double last_diff = 0.0;
    bool clamped = false;    // tiny negative-phase noise pulled back into [0,1]
    bool excursion = false;  // phase left [0,1] by more than noise
};

// Boundary phase (1/pi) lim arg F(x+iy), extrapolated directly on the
// argument so poles and zeros of the boundary value stay harmless.
XiReport krein_xi(const HerglotzEval& F, double x, const LimitSchedule& sched = {});

struct ReflectionlessReport {
    double max_abs_re = 0.0;
    double worst_point = 0.0;
    int tested = 0;
    int unconverged = 0;
    double tol = 0.0;
    bool pass = false;
};

// Samples Re F on an interior grid of E; passes when the largest magnitude
// stays below tol and every boundary limit converged.
ReflectionlessReport is_reflectionless(const HerglotzEval& F, const SetUnion& E,
                                       int per_interval = 64, double tol = 1e-6,
                                       const LimitSchedule& sched = {});

// lim y * Im F(x+iy): the mass the boundary measure places at x. Clamped >= 0.
RealLimit point_mass(const HerglotzEval& F, double x, const LimitSchedule& sched = {});

// Whether some measure reflectionless on E can carry a point mass at x: false
// exactly when E has positive length adjacent to x (the local 1/|t-x| integral
// then diverges).
bool pointmass_possible(const SetUnion& E, double x);

// Phase function (1/2) chi_E + chi_{E^c, t > x}: reflectionless on E with an
// atom at x whenever pointmass_possible(E, x).
KreinFn atom_constructor(const SetUnion& E, double x);

// \int_a^b xi(t)/(t-x) dt for x outside [a,b], closed form.
double I_x(const KreinFn& xi, double a, double b, double x);

// Rearranged phase: 1/2 on E, mass of xi pushed to the left end of every
// bounded gap, 1 on the unbounded complement components.
KreinFn xi_naught(const KreinFn& xi, const SetUnion& E);

struct AtomCriterion {
    bool finite = false;
    double value = 0.0;  // +inf when not finite
};

// \int_{x-1}^{x+1} |xi(t) - chi_{(x,inf)}(t)| / |t-x| dt in closed form;
// finite exactly when xi is 0 just left of x and 1 just right of x.
AtomCriterion atom_criterion(const KreinFn& xi, double x);

} // namespace specpot
