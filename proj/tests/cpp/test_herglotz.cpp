#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "specpot/herglotz.hpp"

using namespace specpot;
using measures::Measure;

namespace {

const SetUnion kPair({Interval(-2.0, -1.0), Interval(1.0, 2.0)});

HerglotzEval arcsine_transform() {
    return HerglotzEval(HerglotzRep(0.0, 0.0, Measure::arcsine(Interval(-2.0, 2.0))));
}

// Random phase function on (a, b) with zero tails, plus its constant c.
struct RandomXi {
    KreinFn xi;
    double c;
};

RandomXi random_xi(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int pieces = 2 + static_cast<int>(u(rng) * 4.0);
    std::vector<double> brk;
    double t = -2.0 + 2.0 * u(rng);
    for (int i = 0; i <= pieces; ++i) {
        brk.push_back(t);
        t += 0.2 + u(rng);
    }
    std::vector<double> val(brk.size() + 1, 0.0);
    for (std::size_t i = 1; i + 1 < val.size(); ++i) val[i] = u(rng);
    return {KreinFn(brk, val), -1.0 + 2.0 * u(rng)};
}

} // namespace

TEST_CASE("representation evaluation") {
    HerglotzRep pole(0.0, 0.0, Measure::atom(0.0, 1.0));
    CHECK(std::abs(eval(pole, cxd(0.0, 1.0)) - cxd(0.0, 1.0)) < 1e-15);

    HerglotzRep line(0.0, 1.0, Measure());
    CHECK(std::abs(eval(line, cxd(2.0, 1.0)) - cxd(2.0, 1.0)) < 1e-15);

    CHECK_THROWS_AS(eval(pole, cxd(0.0, -1.0)), std::domain_error);
}

TEST_CASE("boundary values with diagnostics") {
    HerglotzEval pole{HerglotzRep(0.0, 0.0, Measure::atom(0.0, 1.0))};

    Extrapolated at1 = boundary_value(pole, 1.0);
    CHECK(at1.status == LimitStatus::Converged);
    CHECK(std::abs(at1.value - cxd(-1.0, 0.0)) < 1e-8);

    Extrapolated at0 = boundary_value(pole, 0.0);
    CHECK(at0.status == LimitStatus::Divergent);

    Extrapolated mid = boundary_value(arcsine_transform(), 0.0);
    CHECK(mid.status == LimitStatus::Converged);
    CHECK(std::abs(mid.value - cxd(0.0, 0.5)) < 1e-7);
}

TEST_CASE("boundary phase") {
    HerglotzEval pole{HerglotzRep(0.0, 0.0, Measure::atom(0.0, 1.0))};
    XiReport right = krein_xi(pole, 1.0);
    CHECK(right.status == LimitStatus::Converged);
    CHECK(right.xi == doctest::Approx(1.0).epsilon(1e-7));

    XiReport left = krein_xi(pole, -1.0);
    CHECK(left.status == LimitStatus::Converged);
    CHECK(std::abs(left.xi) < 1e-7);

    XiReport mid = krein_xi(arcsine_transform(), 0.0);
    CHECK(mid.xi == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("exponential representation closed forms") {
    // xi = chi_(0,inf): G is a positive multiple of -1/z
    HerglotzEval g = from_krein(KreinFn({0.0}, {0.0, 1.0}));
    cxd gi = g(cxd(0.0, 1.0));
    CHECK(std::abs(gi.real()) < 1e-14);
    CHECK(gi.imag() > 0.0);

    // constant phase 1/2: G identically i e^c
    for (double c : {0.0, 1.3, -0.7}) {
        HerglotzEval h = from_krein(KreinFn({0.0}, {0.5, 0.5}), c);
        for (cxd z : {cxd(0.0, 1.0), cxd(5.0, 0.2), cxd(-3.0, 4.0)}) {
            CHECK(std::abs(h(z) - cxd(0.0, std::exp(c))) < 1e-12);
        }
    }

    // degenerate phase: flagged real constant
    HerglotzEval flat = from_krein(KreinFn({0.0}, {0.0, 0.0}));
    CHECK(flat.degenerate());
    CHECK(std::abs(flat(cxd(0.0, 1.0)) - cxd(1.0, 0.0)) < 1e-14);
}

TEST_CASE("indicator phase reproduces its elementary antiderivative") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        double a = u(rng);
        double b = a + 0.3 + std::abs(u(rng));
        double c = 0.5 * u(rng);
        HerglotzEval g = from_krein(KreinFn({a, b}, {0.0, 1.0, 0.0}), c);
        for (cxd z : {cxd(0.3, 0.9), cxd(-1.1, 0.1), cxd(4.0, 2.0)}) {
            cxd want = oracles::indicator_exp_rep(a, b, c, z);
            CHECK(std::abs(g(z) - want) < 1e-12 * std::abs(want));
        }
    }
}

TEST_CASE("phase round trip at continuity points") {
    std::mt19937 rng(23);
    int checked = 0;
    for (int trial = 0; trial < 25; ++trial) {
        RandomXi rx = random_xi(rng);
        HerglotzEval g = from_krein(rx.xi, rx.c);
        CHECK(g(cxd(0.0, 1.0)).imag() >= 0.0);
        const auto& brk = rx.xi.breaks();
        for (std::size_t i = 0; i + 1 < brk.size(); ++i) {
            double x = 0.5 * (brk[i] + brk[i + 1]);
            XiReport r = krein_xi(g, x);
            CHECK(r.status == LimitStatus::Converged);
            CHECK(std::abs(r.xi - rx.xi(x)) < 1e-4);
            ++checked;
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("reflectionless test on band interiors") {
    ReflectionlessReport arc = is_reflectionless(arcsine_transform(),
                                                 SetUnion::single(-1.9, 1.9));
    CHECK(arc.pass);
    CHECK(arc.max_abs_re <= 1e-6);
    CHECK(arc.unconverged == 0);

    HerglotzEval flat = from_krein(KreinFn({0.0}, {0.5, 0.5}));
    ReflectionlessReport ident = is_reflectionless(flat, kPair);
    CHECK(ident.pass);
    CHECK(ident.max_abs_re <= 1e-12);

    HerglotzEval pole{HerglotzRep(0.0, 0.0, Measure::atom(0.0, 1.0))};
    ReflectionlessReport bad = is_reflectionless(pole, SetUnion::single(1.0, 2.0));
    CHECK_FALSE(bad.pass);
    CHECK(bad.max_abs_re > 0.1);
}

TEST_CASE("point masses recovered from the boundary limit") {
    HerglotzEval pole{HerglotzRep(0.0, 0.0, Measure::atom(0.0, 1.0))};
    RealLimit unit = point_mass(pole, 0.0);
    CHECK(unit.ok());
    CHECK(unit.value == doctest::Approx(1.0).epsilon(1e-9));

    RealLimit none = point_mass(arcsine_transform(), 0.0);
    CHECK(none.ok());
    CHECK(std::abs(none.value) < 1e-8);
}

TEST_CASE("two-band construction carries an atom between the bands") {
    KreinFn xi = atom_constructor(kPair, 0.0);

    // the stated phase: 0 | 1/2 on [-2,-1] | 0 | 1 on (0,1) | 1/2 on [1,2] | 1
    CHECK(xi(-3.0) == doctest::Approx(0.0));
    CHECK(xi(-1.5) == doctest::Approx(0.5));
    CHECK(xi(-0.5) == doctest::Approx(0.0));
    CHECK(xi(0.5) == doctest::Approx(1.0));
    CHECK(xi(1.5) == doctest::Approx(0.5));
    CHECK(xi(3.0) == doctest::Approx(1.0));

    HerglotzEval g = from_krein(xi);
    ReflectionlessReport rep = is_reflectionless(g, kPair, 64, 1e-3);
    CHECK(rep.pass);

    // atom weight in closed form: removing the simple zero of the gap factor
    // (1-z)/(-z) and evaluating the remaining product at z = 0 leaves
    // exp((1/2) ln(5/8)) = sqrt(10)/4.
    RealLimit w = point_mass(g, 0.0);
    CHECK(w.ok());
    CHECK(w.value == doctest::Approx(std::sqrt(10.0) / 4.0).epsilon(1e-6));
    CHECK(w.value > 1e-3);

    AtomCriterion crit = atom_criterion(xi, 0.0);
    CHECK(crit.finite);

    // interior phase 1/2 forces a divergent criterion integral and no atom
    KreinFn half = atom_constructor(SetUnion::single(10.0, 12.0), 0.0);
    AtomCriterion far = atom_criterion(half, 11.0);
    CHECK_FALSE(far.finite);
}

TEST_CASE("where point masses are possible") {
    CHECK(pointmass_possible(kPair, 0.0));
    CHECK(pointmass_possible(kPair, 5.0));
    CHECK_FALSE(pointmass_possible(SetUnion::single(-2.0, 2.0), 0.0));
    CHECK_FALSE(pointmass_possible(SetUnion::single(0.0, 1.0), 0.0));
    CHECK_FALSE(pointmass_possible(kPair, 1.5));
    CHECK_FALSE(pointmass_possible(kPair, 2.0));

    CHECK_THROWS_AS(atom_constructor(SetUnion::single(-2.0, 2.0), 0.0), std::domain_error);

    KreinFn empty_case = atom_constructor(SetUnion(std::vector<Interval>{}), 0.0);
    CHECK(empty_case(-1.0) == doctest::Approx(0.0));
    CHECK(empty_case(1.0) == doctest::Approx(1.0));
}

TEST_CASE("gap integrals in closed form") {
    KreinFn one({0.0, 1.0}, {0.0, 1.0, 0.0});
    CHECK(I_x(one, 0.0, 1.0, -1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));

    KreinFn halfgap({0.0, 0.5}, {0.0, 1.0, 0.0});
    CHECK(I_x(halfgap, 0.0, 1.0, 2.0) ==
          doctest::Approx(-std::log(4.0 / 3.0)).epsilon(1e-14));

    KreinFn zero({0.0}, {0.0, 0.0});
    CHECK(I_x(zero, 0.0, 1.0, 2.0) == doctest::Approx(0.0));

    CHECK_THROWS_AS(I_x(one, 0.0, 1.0, 0.5), std::domain_error);
}

TEST_CASE("pushing gap mass left maximizes the gap integral") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        RandomXi rx = random_xi(rng);
        double a = rx.xi.breaks().front(), b = rx.xi.breaks().back();
        double c = rx.xi.integral(a, b);
        KreinFn ind({a, a + c}, {0.0, 1.0, 0.0});
        double x = a - 0.01 - 3.0 * u(rng);
        double slack = I_x(ind, a, b, x) - I_x(rx.xi, a, b, x);
        CHECK(slack >= -1e-12);
    }
}

TEST_CASE("rearranged phase on gaps") {
    SetUnion e({Interval(0.0, 1.0), Interval(2.0, 3.0)});
    KreinFn xi({0.0, 1.0, 2.0, 3.0}, {0.0, 0.5, 0.25, 0.5, 0.0});
    KreinFn x0 = xi_naught(xi, e);
    CHECK(x0(0.5) == doctest::Approx(0.5));
    CHECK(x0(2.5) == doctest::Approx(0.5));
    CHECK(x0(1.1) == doctest::Approx(1.0));
    CHECK(x0(1.35) == doctest::Approx(0.0));  // gap mass c = 0.25 ends at 1.25
    CHECK(x0(-1.0) == doctest::Approx(1.0));  // unbounded components carry 1
    CHECK(x0(4.0) == doctest::Approx(1.0));

    // already rearranged: idempotent on the gap
    KreinFn x00 = xi_naught(x0, e);
    CHECK(x00(1.1) == doctest::Approx(1.0));
    CHECK(x00(1.35) == doctest::Approx(0.0));

    // zero gap mass: gap phase identically 0
    KreinFn flat({0.0, 1.0, 2.0, 3.0}, {0.0, 0.5, 0.0, 0.5, 0.0});
    CHECK(xi_naught(flat, e)(1.5) == doctest::Approx(0.0));

    // phase must sit at 1/2 on E
    KreinFn off({0.0, 1.0, 2.0, 3.0}, {0.0, 0.4, 0.25, 0.5, 0.0});
    CHECK_THROWS_AS(xi_naught(off, e), std::invalid_argument);
}
