#include "specpot/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "specpot/chebyshev.hpp"
#include "specpot/quadrature.hpp"

namespace specpot::measures {

static const double pi = 3.14159265358979323846;
static const double inf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Piece construction helpers

static std::vector<double> piece_nodes(const Interval& iv, int n, bool edge_singular) {
    std::vector<double> t(n);
    if (edge_singular) {
        std::vector<double> x = cheb::nodes(n);
        for (int j = 0; j < n; ++j) t[j] = iv.mid() + iv.half() * x[j];
    } else {
        const quad::Rule& r = quad::gauss_legendre(n);
        for (int j = 0; j < n; ++j) t[j] = iv.mid() + iv.half() * r.x[j];
    }
    return t;
}

// Interpolant of GL samples evaluated at the Chebyshev points, via the
// barycentric formula with the closed-form Gauss weights.
static std::vector<double> gl_values_at_cheb(const std::vector<double>& v) {
    int n = static_cast<int>(v.size());
    const quad::Rule& r = quad::gauss_legendre(n);
    std::vector<double> lam(n);
    for (int j = 0; j < n; ++j) {
        double l = std::sqrt((1.0 - r.x[j] * r.x[j]) * r.w[j]);
        lam[j] = (j % 2 == 0) ? l : -l;
    }
    std::vector<double> xc = cheb::nodes(n);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        double num = 0.0, den = 0.0;
        bool hit = false;
        for (int j = 0; j < n; ++j) {
            double d = xc[i] - r.x[j];
            if (d == 0.0) {
                out[i] = v[j];
                hit = true;
                break;
            }
            double q = lam[j] / d;
            num += q * v[j];
            den += q;
        }
        if (!hit) out[i] = num / den;
    }
    return out;
}

static Piece make_piece(Interval iv, std::vector<double> values, bool edge_singular) {
    if (iv.degenerate()) throw std::invalid_argument("piece interval must have positive length");
    int n = static_cast<int>(values.size());
    if (n < 2) throw std::invalid_argument("piece needs at least 2 nodes");
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("piece values must be finite");
    Piece p;
    p.iv = iv;
    p.edge_singular = edge_singular;
    p.values = std::move(values);
    p.nodes = piece_nodes(iv, n, edge_singular);
    p.cheb = edge_singular ? cheb::coeffs(p.values) : cheb::coeffs(gl_values_at_cheb(p.values));
    if (!edge_singular) p.chebP = cheb::antiderivative(p.cheb);
    return p;
}

double Piece::mass() const {
    if (edge_singular) return pi * cheb[0];
    const quad::Rule& r = quad::gauss_legendre(static_cast<int>(values.size()));
    double s = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j) s += r.w[j] * values[j];
    return s * iv.half();
}

double Piece::density(double t) const {
    double x = (t - iv.mid()) / iv.half();
    double v = cheb::eval(cheb, std::min(1.0, std::max(-1.0, x)));
    if (!edge_singular) return v;
    double q = (t - iv.lo) * (iv.hi - t);
    if (q <= 0.0) return inf;
    return v / std::sqrt(q);
}

// ---------------------------------------------------------------------------
// Measure construction

Measure Measure::atom(double pos, double weight) {
    Measure m;
    m.add_atom(pos, weight);
    return m;
}

Measure Measure::from_atoms(const std::vector<std::pair<double, double>>& atoms) {
    Measure m;
    for (auto& [p, w] : atoms) m.add_atom(p, w);
    return m;
}

Measure Measure::arcsine(Interval iv) {
    Measure m;
    m.add_density(iv, [](double) { return 1.0 / pi; }, 64, true);
    return m;
}

Measure Measure::uniform(Interval iv) {
    Measure m;
    double d = 1.0 / iv.length();
    m.add_density(iv, [d](double) { return d; }, 64, false);
    return m;
}

void Measure::add_atom(double pos, double weight) {
    if (!std::isfinite(pos) || !std::isfinite(weight) || weight <= 0.0)
        throw std::invalid_argument("atom requires finite position and weight > 0");
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), pos,
                               [](const std::pair<double, double>& a, double p) { return a.first < p; });
    if (it != atoms_.end() && std::abs(it->first - pos) <= kAtomTol) {
        it->second += weight;
        return;
    }
    if (it != atoms_.begin() && std::abs(std::prev(it)->first - pos) <= kAtomTol) {
        std::prev(it)->second += weight;
        return;
    }
    atoms_.insert(it, {pos, weight});
}

void Measure::validate_new_piece(const Interval& iv) const {
    for (const Piece& p : pieces_) {
        double lo = std::max(p.iv.lo, iv.lo), hi = std::min(p.iv.hi, iv.hi);
        if (hi > lo) throw std::invalid_argument("measure pieces must not overlap");
    }
}

void Measure::add_density(Interval iv, const std::function<double(double)>& f, int n,
                          bool edge_singular) {
    validate_new_piece(iv);
    std::vector<double> nodes = piece_nodes(iv, n, edge_singular);
    std::vector<double> values(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) values[j] = f(nodes[j]);
    pieces_.push_back(make_piece(iv, std::move(values), edge_singular));
    std::sort(pieces_.begin(), pieces_.end(),
              [](const Piece& a, const Piece& b) { return a.iv.lo < b.iv.lo; });
}

void Measure::add_piece_values(Interval iv, const std::vector<double>& values, bool edge_singular) {
    validate_new_piece(iv);
    pieces_.push_back(make_piece(iv, values, edge_singular));
    std::sort(pieces_.begin(), pieces_.end(),
              [](const Piece& a, const Piece& b) { return a.iv.lo < b.iv.lo; });
}

double Measure::total_mass() const {
    double s = 0.0;
    for (auto& [p, w] : atoms_) s += w;
    for (const Piece& p : pieces_) s += p.mass();
    return s;
}

double Measure::atom_weight_at(double x) const {
    for (auto& [p, w] : atoms_)
        if (std::abs(p - x) <= kAtomTol) return w;
    return 0.0;
}

double Measure::integrate(const std::function<double(double)>& f) const {
    double s = 0.0;
    for (auto& [p, w] : atoms_) s += w * f(p);
    for (const Piece& p : pieces_) {
        int n = static_cast<int>(p.nodes.size());
        if (p.edge_singular) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += p.values[j] * f(p.nodes[j]);
            s += acc * pi / n;
        } else {
            const quad::Rule& r = quad::gauss_legendre(n);
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += r.w[j] * p.values[j] * f(p.nodes[j]);
            s += acc * p.iv.half();
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Piece kernels

// Relative distance from z to the piece, in units of its half-length.
static double rel_dist(const Piece& p, cxd z) {
    double dx = 0.0;
    if (z.real() < p.iv.lo) dx = p.iv.lo - z.real();
    else if (z.real() > p.iv.hi) dx = z.real() - p.iv.hi;
    return std::hypot(dx, z.imag()) / p.iv.half();
}

static cxd piece_cauchy(const Piece& p, cxd z) {
    cxd zeta = (z - p.iv.mid()) / p.iv.half();
    if (p.edge_singular) return cheb::cauchy_kernel_sum(p.cheb, zeta) / p.iv.half();

    int n = static_cast<int>(p.nodes.size());
    const quad::Rule& r = quad::gauss_legendre(n);
    if (rel_dist(p, z) > 0.04) {
        cxd s = 0.0;
        for (int j = 0; j < n; ++j) s += r.w[j] * p.values[j] / (p.nodes[j] - z);
        return s * p.iv.half();
    }
    // Near field: subtract the interpolant's value at z so the remaining
    // integrand is a polynomial, integrated exactly.
    cxd rho_z = cheb::eval(p.cheb, zeta);
    int m = n / 2 + 2;
    const quad::Rule& rm = quad::gauss_legendre(m);
    cxd acc = 0.0;
    std::vector<double> dcheb = cheb::derivative(p.cheb);
    for (int i = 0; i < m; ++i) {
        double t = p.iv.mid() + p.iv.half() * rm.x[i];
        cxd d = t - z;
        cxd q;
        if (std::abs(d) < 1e-11 * p.iv.half())
            q = cheb::eval(dcheb, rm.x[i]) / p.iv.half();
        else
            q = (cheb::eval(p.cheb, cxd(rm.x[i], 0.0)) - rho_z) / d;
        acc += rm.w[i] * q;
    }
    acc *= p.iv.half();
    cxd la = std::log(cxd(p.iv.lo) - z), lb = std::log(cxd(p.iv.hi) - z);
    return acc + rho_z * (lb - la);
}

static double piece_log_potential(const Piece& p, cxd z) {
    double half = p.iv.half();
    cxd zeta = (z - p.iv.mid()) / half;
    if (p.edge_singular) {
        double massf = pi * p.cheb[0];
        return massf * std::log(half) + cheb::log_kernel_sum(p.cheb, zeta);
    }

    int n = static_cast<int>(p.nodes.size());
    if (rel_dist(p, z) > 0.04) {
        const quad::Rule& r = quad::gauss_legendre(n);
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += r.w[j] * p.values[j] * std::log(std::abs(p.nodes[j] - z));
        return s * half;
    }
    // Integration by parts against the interpolant's antiderivative P:
    //   int rho log|t-z| = Re[ (P(b)-P(z)) Log(b-z) + P(z) Log(a-z) - int Q ],
    //   Q(t) = (P(t)-P(z))/(t-z)  (a polynomial, integrated exactly).
    cxd Pz = half * cheb::eval(p.chebP, zeta);
    double Pb = half * cheb::eval(p.chebP, 1.0);
    int m = n / 2 + 2;
    const quad::Rule& rm = quad::gauss_legendre(m);
    cxd acc = 0.0;
    for (int i = 0; i < m; ++i) {
        double t = p.iv.mid() + half * rm.x[i];
        cxd d = t - z;
        cxd q;
        if (std::abs(d) < 1e-11 * half)
            q = cheb::eval(p.cheb, rm.x[i]);
        else
            q = (half * cheb::eval(p.chebP, cxd(rm.x[i], 0.0)) - Pz) / d;
        acc += rm.w[i] * q;
    }
    acc *= half;
    auto term = [](cxd c, cxd u) { return (c == 0.0 || u == 0.0) ? cxd(0.0) : c * std::log(u); };
    cxd total = term(cxd(Pb) - Pz, cxd(p.iv.hi) - z) + term(Pz, cxd(p.iv.lo) - z) - acc;
    return total.real();
}

// ---------------------------------------------------------------------------
// Transforms

cxd cauchy_transform(const Measure& mu, cxd z) {
    if (!(z.imag() > 0.0)) throw std::domain_error("cauchy_transform requires Im z > 0");
    if (mu.empty()) throw std::domain_error("cauchy_transform of empty measure");
    cxd s = 0.0;
    for (auto& [p, w] : mu.atoms()) s += w / (p - z);
    for (const Piece& p : mu.pieces()) s += piece_cauchy(p, z);
    return s;
}

double log_potential(const Measure& mu, cxd z) {
    if (mu.empty()) throw std::domain_error("log_potential of empty measure");
    double s = 0.0;
    for (auto& [p, w] : mu.atoms()) {
        if (z.imag() == 0.0 && std::abs(p - z.real()) <= kAtomTol) return -inf;
        s += w * std::log(std::abs(p - z));
    }
    for (const Piece& p : mu.pieces()) s += piece_log_potential(p, z);
    return s;
}

double log_potential(const Measure& mu, double x) { return log_potential(mu, cxd(x, 0.0)); }

double energy(const Measure& mu) {
    if (mu.empty()) throw std::domain_error("energy of empty measure");
    if (!mu.atoms().empty()) return -inf;
    double s = 0.0;
    for (const Piece& p : mu.pieces()) {
        auto U = [&](double t) { return log_potential(mu, t); };
        if (p.edge_singular) {
            int n = static_cast<int>(p.nodes.size());
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += p.values[j] * U(p.nodes[j]);
            s += acc * pi / n;
        } else {
            s += quad::integrate_graded([&](double t) { return p.density(t) * U(t); },
                                        p.iv.lo, p.iv.hi);
        }
    }
    return s;
}

double moment(const Measure& mu, int n) {
    if (n < 0 || n > kMaxMoment) throw std::domain_error("moment order out of range");
    if (mu.empty()) throw std::domain_error("moment of empty measure");
    return mu.integrate([n](double t) { return std::pow(t, n); });
}

double cdf(const Measure& mu, double t) {
    double s = 0.0;
    for (auto& [p, w] : mu.atoms())
        if (p <= t) s += w;
    for (const Piece& p : mu.pieces()) {
        if (t <= p.iv.lo) continue;
        if (t >= p.iv.hi) {
            s += p.mass();
            continue;
        }
        double x = (t - p.iv.mid()) / p.iv.half();
        if (p.edge_singular)
            s += cheb::lower_weighted_integral(p.cheb, x);
        else
            s += p.iv.half() * cheb::eval(p.chebP, x);
    }
    return s;
}

double cdf_left(const Measure& mu, double t) { return cdf(mu, t) - mu.atom_weight_at(t); }

namespace {

// Distribution function with the atom part prefix-summed for bulk evaluation.
struct CdfCache {
    const Measure* m;
    std::vector<double> pos, cum;

    explicit CdfCache(const Measure& mu) : m(&mu) {
        pos.reserve(mu.atoms().size());
        cum.reserve(mu.atoms().size());
        double s = 0.0;
        for (auto& [p, w] : mu.atoms()) {
            pos.push_back(p);
            s += w;
            cum.push_back(s);
        }
    }

    double at(double t, bool left) const {
        double s = 0.0;
        auto it = left ? std::lower_bound(pos.begin(), pos.end(), t)
                       : std::upper_bound(pos.begin(), pos.end(), t);
        if (it != pos.begin()) s = cum[static_cast<std::size_t>(it - pos.begin()) - 1];
        for (const Piece& p : m->pieces()) {
            if (t <= p.iv.lo) continue;
            if (t >= p.iv.hi) {
                s += p.mass();
                continue;
            }
            double x = (t - p.iv.mid()) / p.iv.half();
            if (p.edge_singular)
                s += cheb::lower_weighted_integral(p.cheb, x);
            else
                s += p.iv.half() * cheb::eval(p.chebP, x);
        }
        return s;
    }
};

} // namespace

double kolmogorov(const Measure& a, const Measure& b) {
    std::set<double> cand;
    auto add_measure = [&](const Measure& m) {
        for (auto& [p, w] : m.atoms()) cand.insert(p);
        for (const Piece& p : m.pieces()) {
            cand.insert(p.iv.lo);
            cand.insert(p.iv.hi);
        }
    };
    add_measure(a);
    add_measure(b);
    if (cand.empty()) return 0.0;
    double lo = *cand.begin(), hi = *cand.rbegin();
    double pad = 0.01 * std::max(1.0, hi - lo);
    const int grid = 10000;
    for (int i = 0; i <= grid; ++i)
        cand.insert(lo - pad + (hi - lo + 2 * pad) * i / grid);
    CdfCache fa(a), fb(b);
    double d = 0.0;
    for (double t : cand) {
        d = std::max(d, std::abs(fa.at(t, false) - fb.at(t, false)));
        d = std::max(d, std::abs(fa.at(t, true) - fb.at(t, true)));
    }
    return d;
}

} // namespace specpot::measures
