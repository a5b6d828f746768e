#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "specpot/interval.hpp"
#include "specpot/measure.hpp"
#include "specpot/step_fn.hpp"

using namespace specpot;
using namespace specpot::measures;

namespace {
const double kE = std::exp(1.0);
const Interval kBand{-2.0, 2.0};
} // namespace

TEST_CASE("atoms: transform, cdf, potential, moments") {
    Measure d0 = Measure::atom(0.0, 1.0);

    cxd v = cauchy_transform(d0, cxd(0.0, 1.0));
    CHECK(std::abs(v - cxd(0.0, 1.0)) < 1e-15);

    CHECK(cdf(d0, -1.0) == 0.0);
    CHECK(cdf(d0, 0.0) == 1.0);
    CHECK(cdf_left(d0, 0.0) == 0.0);

    CHECK(log_potential(d0, kE) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(log_potential(d0, 0.0) == -std::numeric_limits<double>::infinity());
    CHECK(std::isinf(energy(d0)));

    CHECK(moment(d0, 0) == doctest::Approx(1.0));
    CHECK(moment(d0, 7) == doctest::Approx(0.0));

    Measure pair = Measure::from_atoms({{-1.0, 0.5}, {1.0, 0.5}});
    cxd g = cauchy_transform(pair, cxd(0.0, 1.0));
    CHECK(std::abs(g - cxd(0.0, 0.5)) < 1e-15);
}

TEST_CASE("atom positions within tolerance merge") {
    Measure m = Measure::atom(0.0, 1.0);
    m.add_atom(5e-13, 2.0);
    REQUIRE(m.atoms().size() == 1);
    CHECK(m.atoms()[0].second == doctest::Approx(3.0));
    CHECK(m.atom_weight_at(0.0) == doctest::Approx(3.0));
}

TEST_CASE("arcsine law: closed-form transform, potential, energy") {
    Measure w = Measure::arcsine(kBand);
    CHECK(w.total_mass() == doctest::Approx(1.0).epsilon(1e-13));

    // transform equals the resolvent branch -1/sqrt(z^2-4)
    for (cxd z : {cxd(0.0, 1.0), cxd(1.3, 0.4), cxd(-2.5, 0.1), cxd(0.2, 3.0)}) {
        cxd got = cauchy_transform(w, z);
        CHECK(std::abs(got - oracles::free_green(z)) < 1e-12);
        CHECK(got.imag() > 0.0);
    }
    cxd gi = cauchy_transform(w, cxd(0.0, 1.0));
    CHECK(gi.imag() == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-13));

    CHECK(cdf(w, 0.0) == doctest::Approx(0.5).epsilon(1e-12));

    // potential: ln((x + sqrt(x^2-4))/2) outside, 0 = ln cap on the interval
    CHECK(log_potential(w, 3.0) ==
          doctest::Approx(std::log((3.0 + std::sqrt(5.0)) / 2.0)).epsilon(1e-12));
    CHECK(std::abs(log_potential(w, 0.0)) < 1e-10);
    CHECK(std::abs(energy(w)) < 1e-10);

    CHECK(moment(w, 0) == doctest::Approx(1.0));
    CHECK(std::abs(moment(w, 1)) < 1e-14);
    CHECK(moment(w, 2) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(moment(w, 4) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("log potential against brute-force quadrature") {
    Measure w = Measure::arcsine(kBand);
    // interior real points: midpoint oracle is only O(1/n) near the log kink
    for (double x : {0.7, -1.3, 1.95}) {
        CHECK(std::abs(log_potential(w, x) - oracles::arcsine_log_potential(cxd(x, 0.0))) < 1e-3);
    }
    // off the support the integrand is smooth and the oracle is sharp
    for (cxd z : {cxd(3.7, 0.0), cxd(1.0, 0.5), cxd(0.0, 2.0)}) {
        CHECK(std::abs(log_potential(w, z) - oracles::arcsine_log_potential(z)) < 1e-9);
    }
}

TEST_CASE("semicircle moments are Catalan numbers") {
    Measure sc;
    sc.add_density(kBand, [](double t) { return (4.0 - t * t) / (2.0 * oracles::kPi); }, 64,
                   true);
    CHECK(sc.total_mass() == doctest::Approx(1.0).epsilon(1e-13));
    for (int k = 0; k <= 4; ++k) {
        CHECK(moment(sc, 2 * k) == doctest::Approx(oracles::catalan(k)).epsilon(1e-12));
        CHECK(moment(sc, 2 * k + 1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    }
}

TEST_CASE("uniform self-energy") {
    CHECK(energy(Measure::uniform(Interval(0.0, 1.0))) == doctest::Approx(-1.5).epsilon(1e-8));
}

TEST_CASE("cdf is a distribution function; kolmogorov distance") {
    Measure w = Measure::arcsine(kBand);
    double prev = 0.0;
    for (int i = 0; i <= 100; ++i) {
        double t = -2.5 + 5.0 * i / 100.0;
        double c = cdf(w, t);
        CHECK(c >= prev - 1e-14);
        prev = c;
    }
    CHECK(prev == doctest::Approx(w.total_mass()).epsilon(1e-12));

    CHECK(kolmogorov(w, w) == doctest::Approx(0.0));
    CHECK(kolmogorov(Measure::atom(0.0, 1.0), Measure::atom(0.5, 1.0)) == doctest::Approx(1.0));
    Measure half = Measure::from_atoms({{0.0, 0.5}, {1.0, 0.5}});
    CHECK(kolmogorov(Measure::atom(0.0, 1.0), half) == doctest::Approx(0.5));
}

TEST_CASE("reflection symmetry for an even measure") {
    // mu invariant under t -> -t forces g(-conj z) = -conj g(z)
    Measure w = Measure::arcsine(kBand);
    Measure pair = Measure::from_atoms({{-1.5, 0.5}, {1.5, 0.5}});
    for (cxd z : {cxd(0.7, 0.9), cxd(-1.2, 0.3), cxd(2.4, 1.7)}) {
        for (const Measure* mu : {&w, &pair}) {
            cxd g = cauchy_transform(*mu, z);
            cxd gr = cauchy_transform(*mu, -std::conj(z));
            CHECK(std::abs(gr + std::conj(g)) < 1e-12);
        }
    }
}

TEST_CASE("transform is Herglotz and differentiates the potential") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        Measure mu;
        mu.add_atom(u(rng), 0.3 + 0.2 * (u(rng) + 1.0));
        double lo = u(rng) - 1.5, hi = lo + 1.0 + u(rng) * 0.5;
        mu.add_density(Interval(lo, hi), [&](double t) { return 1.0 + 0.5 * std::sin(3.0 * t); },
                       32, false);

        cxd z(u(rng), 0.2 + 0.8 * (u(rng) + 1.0));
        cxd g = cauchy_transform(mu, z);
        CHECK(g.imag() > 0.0);

        // off the support: d/dx int ln|t-x| dmu = -Re transform near the axis
        double x = hi + 2.0 + (u(rng) + 1.0);
        double h = 1e-4;
        double diff = (log_potential(mu, x + h) - log_potential(mu, x - h)) / (2.0 * h);
        cxd bv = cauchy_transform(mu, cxd(x, 1e-8));
        CHECK(diff == doctest::Approx(-bv.real()).epsilon(1e-6));
    }
}

TEST_CASE("lebesgue density of interval unions") {
    SetUnion e1 = SetUnion::single(0.0, 1.0);
    CHECK(lebesgue_density(e1, 0.0, 0.5) == doctest::Approx(0.5));
    CHECK(lebesgue_density(e1, 0.5, 0.1) == doctest::Approx(1.0));

    SetUnion e2({Interval(-2.0, -1.0), Interval(1.0, 2.0)});
    CHECK(lebesgue_density(e2, 0.0, 0.5) == doctest::Approx(0.0));
    CHECK(lebesgue_density(e2, 0.0, 1.5) == doctest::Approx(0.5 / 1.5));
}

TEST_CASE("truncated transform in closed form") {
    SetUnion sym = SetUnion::single(-1.0, 1.0);
    BoundedFn one = BoundedFn::one_on(sym);
    CHECK(truncated_hilbert(sym, one, 0.0, 0.3) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));

    SetUnion right = SetUnion::single(0.0, 1.0);
    CHECK(truncated_hilbert(right, BoundedFn::one_on(right), 0.0, 0.1) ==
          doctest::Approx(-std::log(0.1)).epsilon(1e-14));

    SetUnion pair({Interval(-2.0, -1.0), Interval(1.0, 2.0)});
    BoundedFn sgn = BoundedFn::sign_about(0.0, Interval(-3.0, 3.0));
    CHECK(truncated_hilbert(pair, sgn, 0.0, 0.5) ==
          doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));

    // antisymmetry: reflecting E and theta about x flips the sign
    SetUnion refl({Interval(-2.0, -1.0)});
    SetUnion orig({Interval(1.0, 2.0)});
    double a = truncated_hilbert(orig, BoundedFn::one_on(orig), 0.0, 0.2);
    double b = truncated_hilbert(refl, BoundedFn::one_on(refl), 0.0, 0.2);
    CHECK(a == doctest::Approx(-b).epsilon(1e-14));
}

TEST_CASE("regularized transform: symmetric limit, one-sided divergence") {
    SetUnion sym = SetUnion::single(-1.0, 1.0);
    RealLimit r = tilde_hilbert(sym, BoundedFn::one_on(sym), 0.0);
    CHECK(r.status == LimitStatus::Converged);
    CHECK(r.value == doctest::Approx(0.0).scale(1.0).epsilon(1e-7));

    SetUnion right = SetUnion::single(0.0, 1.0);
    RealLimit d = tilde_hilbert(right, BoundedFn::one_on(right), 0.0);
    CHECK(d.status == LimitStatus::Divergent);

    RealLimit z = tilde_hilbert(SetUnion(std::vector<Interval>{}),
                                BoundedFn::one_on(sym), 0.0);
    CHECK(z.status == LimitStatus::Converged);
    CHECK(z.value == doctest::Approx(0.0));
}
