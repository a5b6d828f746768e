#include "specpot/herglotz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace specpot {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<double> normalized_phase(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("phase function needs at least one value");
    for (double& x : v) {
        if (!(x > -1e-12) || !(x < 1.0 + 1e-12))
            throw std::invalid_argument("phase values must lie in [0,1]");
        x = std::clamp(x, 0.0, 1.0);
    }
    bool tails01 = (v.front() == 0.0 || v.front() == 1.0) &&
                   (v.back() == 0.0 || v.back() == 1.0);
    if (!tails01 && std::abs(v.front() - v.back()) > 1e-12)
        throw std::invalid_argument("phase tails must each be 0/1 or agree with each other");
    return v;
}

bool inside_positive_interval(const SetUnion& E, double t) {
    for (const Interval& iv : E.parts())
        if (!iv.degenerate() && t > iv.lo && t < iv.hi) return true;
    return false;
}

} // namespace

HerglotzRep::HerglotzRep(double a, double b, Measure mu)
    : a_(a), b_(b), mu_(std::move(mu)), correction_(0.0) {
    if (!std::isfinite(a) || !std::isfinite(b) || b < 0.0)
        throw std::invalid_argument("representation needs finite a and b >= 0");
    if (!mu_.empty())
        correction_ = mu_.integrate([](double t) { return t / (t * t + 1.0); });
}

KreinFn::KreinFn(std::vector<double> breaks, std::vector<double> values)
    : f_(std::move(breaks), normalized_phase(std::move(values))) {}

bool KreinFn::degenerate() const {
    double v0 = values().front();
    if (v0 != 0.0 && v0 != 1.0) return false;
    return std::all_of(values().begin(), values().end(),
                       [v0](double v) { return v == v0; });
}

cxd krein_log_eval(const KreinFn& xi, double c, cxd z) {
    if (!(z.imag() > 0.0)) throw std::domain_error("evaluation requires Im z > 0");
    auto phi = [z](double t) {
        return std::log(cxd(t, 0.0) - z) - 0.5 * std::log(t * t + 1.0);
    };
    const auto& brk = xi.breaks();
    const auto& val = xi.values();
    cxd acc(c, 0.0);
    cxd prev(0.0, -kPi);  // phi(-inf); phi(+inf) = 0
    for (std::size_t j = 0; j < val.size(); ++j) {
        cxd cur = j < brk.size() ? phi(brk[j]) : cxd(0.0, 0.0);
        acc += val[j] * (cur - prev);
        prev = cur;
    }
    return acc;
}

HerglotzEval::HerglotzEval(HerglotzRep rep) : impl_(std::move(rep)) {
    const auto& r = std::get<HerglotzRep>(impl_);
    degenerate_ = r.b() == 0.0 && r.mu().empty();
}

HerglotzEval::HerglotzEval(KreinFn xi, double c) : impl_(KreinExp{std::move(xi), c}) {
    degenerate_ = std::get<KreinExp>(impl_).xi.degenerate();
}

HerglotzEval::HerglotzEval(std::function<cxd(cxd)> f) : impl_(std::move(f)) {
    if (!std::get<std::function<cxd(cxd)>>(impl_))
        throw std::invalid_argument("evaluable map must not be empty");
}

cxd HerglotzEval::operator()(cxd z) const {
    if (!(z.imag() > 0.0)) throw std::domain_error("evaluation requires Im z > 0");
    return std::visit(
        overloaded{[&](const HerglotzRep& r) { return eval(r, z); },
                   [&](const KreinExp& k) { return std::exp(krein_log_eval(k.xi, k.c, z)); },
                   [&](const std::function<cxd(cxd)>& f) { return f(z); }},
        impl_);
}

const KreinFn* HerglotzEval::krein() const {
    if (const auto* k = std::get_if<KreinExp>(&impl_)) return &k->xi;
    return nullptr;
}

cxd eval(const HerglotzRep& F, cxd z) {
    if (!(z.imag() > 0.0)) throw std::domain_error("evaluation requires Im z > 0");
    cxd out = cxd(F.a(), 0.0) + F.b() * z;
    if (!F.mu().empty()) out += cauchy_transform(F.mu(), z) - F.correction();
    return out;
}

cxd eval(const HerglotzEval& F, cxd z) { return F(z); }

HerglotzEval from_krein(const KreinFn& xi, double c) { return HerglotzEval(xi, c); }

Extrapolated boundary_value(const HerglotzEval& F, double x, const LimitSchedule& sched) {
    return extrapolate_to_zero([&F, x](double y) { return F(cxd(x, y)); }, sched);
}

XiReport krein_xi(const HerglotzEval& F, double x, const LimitSchedule& sched) {
    XiReport r;
    auto phase = [&](double y) {
        cxd w = F(cxd(x, y));
        double im = w.imag();
        if (im < 0.0) {
            if (im < -1e-6 * std::abs(w))
                r.excursion = true;
            else
                r.clamped = true;
            im = 0.0;
        }
        return std::atan2(im, w.real()) / kPi;
    };
    RealLimit lim = extrapolate_to_zero_real(phase, sched);
    r.status = lim.status;
    r.last_diff = lim.last_diff;
    r.xi = std::clamp(lim.value, 0.0, 1.0);
    if (lim.value < -1e-6 || lim.value > 1.0 + 1e-6)
        r.excursion = true;
    else if (lim.value != r.xi)
        r.clamped = true;
    return r;
}

ReflectionlessReport is_reflectionless(const HerglotzEval& F, const SetUnion& E,
                                       int per_interval, double tol,
                                       const LimitSchedule& sched) {
    if (per_interval < 1) throw std::invalid_argument("grid needs at least one point per interval");
    ReflectionlessReport rep;
    rep.tol = tol;
    for (const Interval& iv : E.parts()) {
        if (iv.degenerate()) continue;
        for (int i = 0; i < per_interval; ++i) {
            double t = iv.lo + iv.length() * (i + 0.5) / per_interval;
            Extrapolated bv = boundary_value(F, t, sched);
            if (!bv.ok()) ++rep.unconverged;
            double re = std::abs(bv.value.real());
            if (re >= rep.max_abs_re) {
                rep.max_abs_re = re;
                rep.worst_point = t;
            }
            ++rep.tested;
        }
    }
    rep.pass = rep.max_abs_re <= tol && rep.unconverged == 0;
    return rep;
}

RealLimit point_mass(const HerglotzEval& F, double x, const LimitSchedule& sched) {
    RealLimit lim = extrapolate_to_zero_real(
        [&F, x](double y) { return y * F(cxd(x, y)).imag(); }, sched);
    if (lim.value < 0.0) lim.value = 0.0;
    return lim;
}

bool pointmass_possible(const SetUnion& E, double x) {
    for (const Interval& iv : E.parts())
        if (!iv.degenerate() && x >= iv.lo && x <= iv.hi) return false;
    return true;
}

KreinFn atom_constructor(const SetUnion& E, double x) {
    if (!pointmass_possible(E, x))
        throw std::domain_error("local phase integral diverges: no point mass possible at x");
    std::vector<double> brk;
    for (const Interval& iv : E.parts()) {
        if (iv.degenerate()) continue;
        brk.push_back(iv.lo);
        brk.push_back(iv.hi);
    }
    brk.push_back(x);
    std::sort(brk.begin(), brk.end());
    brk.erase(std::unique(brk.begin(), brk.end()), brk.end());
    std::vector<double> val;
    val.reserve(brk.size() + 1);
    for (std::size_t j = 0; j <= brk.size(); ++j) {
        double m;
        if (j == 0)
            m = brk.front() - 1.0;
        else if (j == brk.size())
            m = brk.back() + 1.0;
        else
            m = 0.5 * (brk[j - 1] + brk[j]);
        double v;
        if (inside_positive_interval(E, m))
            v = 0.5;
        else
            v = m > x ? 1.0 : 0.0;
        val.push_back(v);
    }
    StepFunction s = StepFunction(std::move(brk), std::move(val)).compressed();
    return KreinFn(s.breaks(), s.values());
}

double I_x(const KreinFn& xi, double a, double b, double x) {
    if (!(a < b)) throw std::invalid_argument("window needs a < b");
    if (x >= a && x <= b) throw std::domain_error("I_x requires x outside [a,b]");
    const auto& brk = xi.breaks();
    const auto& val = xi.values();
    double s = 0.0;
    for (std::size_t j = 0; j < val.size(); ++j) {
        double p = j == 0 ? a : std::max(a, brk[j - 1]);
        double q = j == brk.size() ? b : std::min(b, brk[j]);
        if (q <= p || val[j] == 0.0) continue;
        s += val[j] * std::log(std::abs((q - x) / (p - x)));
    }
    return s;
}

KreinFn xi_naught(const KreinFn& xi, const SetUnion& E) {
    std::vector<Interval> ivs;
    for (const Interval& iv : E.parts())
        if (!iv.degenerate()) ivs.push_back(iv);
    if (ivs.empty()) throw std::invalid_argument("rearrangement needs E of positive length");

    const double tol = 1e-9;
    const auto& brk = xi.breaks();
    const auto& val = xi.values();
    for (const Interval& iv : ivs) {
        for (std::size_t j = 0; j < val.size(); ++j) {
            double p = j == 0 ? iv.lo : std::max(iv.lo, brk[j - 1]);
            double q = j == brk.size() ? iv.hi : std::min(iv.hi, brk[j]);
            if (q > p && std::abs(val[j] - 0.5) > tol)
                throw std::invalid_argument("phase must equal 1/2 on E");
        }
    }

    std::vector<double> obrk;
    std::vector<double> oval{1.0};  // unbounded left component
    for (std::size_t i = 0; i < ivs.size(); ++i) {
        obrk.push_back(ivs[i].lo);
        oval.push_back(0.5);
        obrk.push_back(ivs[i].hi);
        if (i + 1 == ivs.size()) {
            oval.push_back(1.0);  // unbounded right component
            break;
        }
        double a = ivs[i].hi, b = ivs[i + 1].lo;
        double c = std::clamp(xi.integral(a, b), 0.0, b - a);
        if (a + c <= a) {
            oval.push_back(0.0);
        } else if (a + c >= b) {
            oval.push_back(1.0);
        } else {
            oval.push_back(1.0);
            obrk.push_back(a + c);
            oval.push_back(0.0);
        }
    }
    StepFunction s = StepFunction(std::move(obrk), std::move(oval)).compressed();
    return KreinFn(s.breaks(), s.values());
}

AtomCriterion atom_criterion(const KreinFn& xi, double x) {
    const double tol = 1e-12;
    const auto& brk = xi.breaks();
    const auto& val = xi.values();
    auto left_idx = std::lower_bound(brk.begin(), brk.end(), x) - brk.begin();
    auto right_idx = std::upper_bound(brk.begin(), brk.end(), x) - brk.begin();
    double v_left = val[static_cast<std::size_t>(left_idx)];
    double v_right = val[static_cast<std::size_t>(right_idx)];
    if (v_left > tol || v_right < 1.0 - tol)
        return {false, std::numeric_limits<double>::infinity()};

    double s = 0.0;
    auto add = [&](double p, double q, double vbar, bool left) {
        if (vbar <= tol || q <= p) return;
        s += vbar * (left ? std::log((x - p) / (x - q)) : std::log((q - x) / (p - x)));
    };
    for (std::size_t j = 0; j < val.size(); ++j) {
        double p = j == 0 ? x - 1.0 : std::max(x - 1.0, brk[j - 1]);
        double q = j == brk.size() ? x + 1.0 : std::min(x + 1.0, brk[j]);
        if (q <= p) continue;
        if (p < x) add(p, std::min(q, x), val[j], true);
        if (q > x) add(std::max(p, x), q, std::abs(val[j] - 1.0), false);
    }
    return {true, s};
}

} // namespace specpot
