#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "specpot/interval.hpp"

namespace specpot::measures {

using cxd = std::complex<double>;
using specpot::Interval;

/// Atoms whose positions differ by no more than this are merged on insert,
/// and a point within this distance of an atom counts as hitting it.
inline constexpr double kAtomTol = 1e-12;

/// Largest admissible moment order.
inline constexpr int kMaxMoment = 20;

/// One absolutely continuous component of a Measure. The density on [lo, hi]
/// is values interpolated at nodes; when edge_singular is set, the stored
/// values are the smooth factor v in density v(t)/sqrt((t-lo)(hi-t)) and the
/// nodes are Gauss-Chebyshev points, otherwise the density itself is sampled
/// at Gauss-Legendre points.
struct Piece {
    Interval iv;
    bool edge_singular = false;
    std::vector<double> nodes;  // ascending
    std::vector<double> values; // matching nodes

    // Derived representations, built on construction.
    std::vector<double> cheb;  // Chebyshev coefficients of the smooth factor / density
    std::vector<double> chebP; // antiderivative coefficients (smooth pieces only)

    double mass() const;
    /// Density value at t in [lo, hi] (includes the edge-singular weight).
    double density(double t) const;
};

/// Positive finite Borel measure: finitely many atoms plus finitely many
/// absolutely continuous pieces on disjoint intervals.
class Measure {
public:
    Measure() = default;

    static Measure atom(double pos, double weight);
    static Measure from_atoms(const std::vector<std::pair<double, double>>& atoms);
    /// Equilibrium measure of a single interval (mass 1).
    static Measure arcsine(Interval iv);
    /// Uniform probability measure on an interval.
    static Measure uniform(Interval iv);

    void add_atom(double pos, double weight);
    /// Sample a density on iv. For edge_singular pieces f is the smooth factor
    /// v with density v(t)/sqrt((t-lo)(hi-t)); otherwise f is the density.
    void add_density(Interval iv, const std::function<double(double)>& f, int n = 64,
                     bool edge_singular = false);
    /// Rebuild a piece from stored node values (canonical grid of size values.size()).
    void add_piece_values(Interval iv, const std::vector<double>& values, bool edge_singular);

    const std::vector<std::pair<double, double>>& atoms() const { return atoms_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    bool empty() const { return atoms_.empty() && pieces_.empty(); }
    double total_mass() const;

    /// Weight of the atom at x (tolerance kAtomTol), 0 if none.
    double atom_weight_at(double x) const;

    /// Integral of f against the measure (f sampled at quadrature nodes).
    double integrate(const std::function<double(double)>& f) const;

private:
    std::vector<std::pair<double, double>> atoms_;
    std::vector<Piece> pieces_;
    void validate_new_piece(const Interval& iv) const;
};

/// Cauchy transform int dmu(t) / (t - z); requires Im z > 0.
cxd cauchy_transform(const Measure& mu, cxd z);

/// Logarithmic potential int log|t - z| dmu(t). Finite for any z not equal to
/// an atom position; returns -infinity when z hits an atom (tolerance kAtomTol).
double log_potential(const Measure& mu, cxd z);
double log_potential(const Measure& mu, double x);

/// Logarithmic energy int int log|s - t| dmu(s) dmu(t); -infinity when the
/// measure has atoms.
double energy(const Measure& mu);

/// n-th moment int t^n dmu(t), 0 <= n <= kMaxMoment.
double moment(const Measure& mu, int n);

/// Distribution function mu((-inf, t]) and its left limit mu((-inf, t)).
double cdf(const Measure& mu, double t);
double cdf_left(const Measure& mu, double t);

/// Kolmogorov (sup) distance between distribution functions.
double kolmogorov(const Measure& a, const Measure& b);

} // namespace specpot::measures
