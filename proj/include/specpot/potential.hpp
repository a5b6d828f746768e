#pragma once

#include "dos.hpp"
#include "interval.hpp"
#include "measure.hpp"

namespace specpot {

/// Equilibrium measure of a finite union of closed intervals.
///
/// On each component the density is a polynomial smooth factor against the
/// edge weight 1/sqrt((t-lo)(hi-t)); the factors and the Robin constant
/// solve a collocation system enforcing a constant log potential on the set
/// and total mass one.
struct EquilibriumResult {
    Measure omega;            ///< probability measure supported on the set
    double robin = 0.0;       ///< value of the log potential on the set
    double residual = 0.0;    ///< max |potential - robin| at off-node probes
};

/// Solve for the equilibrium measure. The density must come out nonnegative
/// at the collocation nodes; one automatic refinement is attempted before
/// giving up. Throws on empty or degenerate sets and singular systems.
EquilibriumResult equilibrium(const SetUnion& E, int nodes_per_interval = 48);

/// Logarithmic capacity exp(robin). A single interval uses the closed form
/// length/4; unions go through the collocation solve.
double capacity(const SetUnion& E);

/// max |log_potential(omega, t) - robin| over golden-offset probes interior
/// to each component of E (never collocation nodes).
double frostman_residual(const EquilibriumResult& r, const SetUnion& E,
                         int probes_per_interval = 100);

/// Comparison of a finite-volume density of states against the equilibrium
/// measure of its presumed essential support, together with the predicted
/// Lyapunov plateau alpha = ln(cap/A).
struct DosEquilibriumReport {
    double kolmogorov = 0.0;     ///< sup-distance between the two cdfs
    double alpha = 0.0;          ///< predicted plateau ln(capacity / A)
    double max_gamma_dev = 0.0;  ///< max |gamma - alpha| on the interior grid
    double cap = 0.0;            ///< capacity of the support set
    bool pass = false;           ///< both deviations within tol
};

/// Evaluate gamma via the finite-N potential identity on a grid kept a
/// small margin inside each component (points are nudged off eigenvalues,
/// where gamma dips logarithmically).
DosEquilibriumReport check_dos_equilibrium(const DosResult& d, const SetUnion& support,
                                           double tol = 0.05);

/// Capacity bounds tying the mean Szego factor A to an inner set (ac
/// spectrum or band union) and an outer set (support hull):
/// cap(inner) <= A <= cap(outer) and |inner| <= 4A.
struct CapacityBoundsReport {
    double cap_inner = 0.0;
    double A = 0.0;
    double cap_outer = 0.0;
    double inner_length = 0.0;
    double four_A = 0.0;
    bool inner_le_A = false;
    bool A_le_outer = false;
    bool length_le_4A = false;
    bool pass = false;
};

CapacityBoundsReport check_capacity_bounds(const DosResult& d, const SetUnion& inner,
                                           const SetUnion& outer, double tol = 1e-9);

} // namespace specpot
