#include "doctest.h"

#include "bialg/rng.hpp"
#include "bialg/weierstrass.hpp"

using namespace bialg;

namespace {

PrecisionCfg cfg40() { return PrecisionCfg{}; }  // 40 digits

TauSpec tau_i() { return TauSpec::exact_quadratic(QuadElem(Rat(0), Rat(1), -1)); }
TauSpec tau_2i() { return TauSpec::exact_quadratic(QuadElem(Rat(0), Rat(2), -1)); }
TauSpec tau_7() { return TauSpec::exact_quadratic(QuadElem(Rat(1, 2), Rat(1, 2), -7)); }
TauSpec tau_zeta6() { return TauSpec::exact_quadratic(QuadElem(Rat(1, 2), Rat(1, 2), -3)); }

// A random point of the cell, at least the pole radius away from the lattice.
Cplx random_nonpolar(Rng& rng, const Lattice& lat, const Weierstrass& eng) {
    for (;;) {
        Real a(rng.uniform(-1.5, 1.5)), b(rng.uniform(-1.5, 1.5));
        Cplx z = a * lat.omega1 + b * lat.omega2;
        if (!eng.wp(z).is_pole) return z;
    }
}

// Direct truncated lattice sums for g2 and g3 over |m|,|n| <= N, with the
// closed-form integral of the summand beyond the box added back (the bare
// box converges like N^-2 for the weight-4 sum).
std::pair<Cplx, Cplx> direct_invariants(const Cplx& tau, int N) {
    Cplx s4(0), s6(0);
    for (int m = -N; m <= N; ++m) {
        for (int n = -N; n <= N; ++n) {
            if (m == 0 && n == 0) continue;
            Cplx w = Cplx(Real(m)) + Real(n) * tau;
            Cplx iw2 = inv(w * w);
            Cplx iw4 = iw2 * iw2;
            s4 += iw4;
            s6 += iw4 * iw2;
        }
    }
    // The mixed antiderivative of (x + tau y)^-p is F = w^{2-p}/(tau(1-p)(2-p));
    // over the region max(|x|,|y|) > a, a = N + 1/2, the eight rectangle
    // pieces collapse to 2 [F(a, -a) - F(a, a)].
    Real a = Real(N) + Real(0.5);
    auto tail = [&](int p) {
        auto F = [&](const Cplx& w) {
            Cplx wi = inv(w);
            Cplx acc(1);
            for (int i = 0; i < p - 2; ++i) acc = acc * wi;  // w^{2-p}
            return acc / (tau * Real((1 - p) * (2 - p)));
        };
        Cplx wa = Cplx(a) + a * tau;
        Cplx wb = Cplx(a) - a * tau;
        return Real(2) * (F(wb) - F(wa));
    };
    s4 += tail(4);
    s6 += tail(6);
    return {Real(60) * s4, Real(140) * s6};
}

} // namespace

TEST_CASE("differential equation residual at 100 random points") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    Real bound = cfg.tolerance();  // 10^{5-P}
    for (const TauSpec& spec : {tau_i(), tau_2i(), tau_7()}) {
        Lattice lat = Lattice::from_tau(spec);
        Weierstrass eng(lat, cfg);
        const auto& inv = eng.invariants();
        Rng rng(42);
        for (int i = 0; i < 100; ++i) {
            Cplx z = random_nonpolar(rng, lat, eng);
            auto [p, dp] = eng.wp_pair(z);
            Cplx lhs = dp.value * dp.value;
            Cplx rhs = Real(4) * p.value * p.value * p.value - inv.g2 * p.value - inv.g3;
            Real denom = 1 + abs(p.value) * abs(p.value) * abs(p.value);
            CHECK(abs(lhs - rhs) / denom < bound);
        }
    }
}

TEST_CASE("periodicity and evenness") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    Real bound = cfg.tolerance();
    TauSpec spec = TauSpec::numeric(0.37, 1.21, std::nullopt);  // evaluation needs no certificate
    Lattice lat = Lattice::from_tau(spec);
    Weierstrass eng(lat, cfg);
    Rng rng(7);
    for (int i = 0; i < 40; ++i) {
        Cplx z = random_nonpolar(rng, lat, eng);
        Cplx p = eng.wp(z).value;
        Real scale = 1 + abs(p);
        CHECK(abs(eng.wp(z + lat.omega1).value - p) / scale < bound);
        CHECK(abs(eng.wp(z + lat.omega2).value - p) / scale < bound);
        CHECK(abs(eng.wp(-z).value - p) / scale < bound);
        // wp' is odd
        Cplx dp = eng.wp_prime(z).value;
        CHECK(abs(eng.wp_prime(-z).value + dp) / (1 + abs(dp)) < bound);
    }
}

TEST_CASE("lattice symmetries force g3(i) = 0 and g2(zeta6) = 0") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    {
        Weierstrass eng(Lattice::from_tau(tau_i()), cfg);
        CHECK(abs(eng.invariants().g3) < pow10(-30));
        CHECK(eng.invariants().g2.re > 0);
        CHECK(abs(eng.invariants().g2.im) < pow10(-30));
        CHECK(abs(eng.invariants().j - Cplx(1728)) < pow10(-25));
    }
    {
        Weierstrass eng(Lattice::from_tau(tau_zeta6()), cfg);
        CHECK(abs(eng.invariants().g2) < pow10(-30));
        CHECK(abs(eng.invariants().j) < pow10(-25));
    }
}

TEST_CASE("direct summation oracle at tau = 2i") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    Weierstrass eng(Lattice::from_tau(tau_2i()), cfg);
    auto [g2d, g3d] = direct_invariants(Cplx(0, 2), 60);  // small box keeps the unit test fast
    CHECK(abs(eng.invariants().g2 - g2d) < pow10(-7));
    CHECK(abs(eng.invariants().g3 - g3d) < pow10(-7));
    CHECK(abs(eng.invariants().g2.im) < pow10(-30));
    CHECK(abs(eng.invariants().g3.im) < pow10(-30));
}

TEST_CASE("half-period values are the cubic roots") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    for (const TauSpec& spec : {tau_i(), tau_2i(), tau_7()}) {
        Lattice lat = Lattice::from_tau(spec);
        Weierstrass eng(lat, cfg);
        const auto& inv = eng.invariants();
        Real bound = cfg.tolerance();
        CHECK(abs(inv.roots[0] + inv.roots[1] + inv.roots[2]) < bound);
        for (const Cplx& e : inv.roots) {
            Cplx res = Real(4) * e * e * e - inv.g2 * e - inv.g3;
            CHECK(abs(res) / (1 + abs(e * e * e)) < bound);
        }
        // wp' vanishes at half periods
        CHECK(abs(eng.wp_prime(lat.omega1 / Real(2)).value) < pow10(-30));
    }
    // tau = i: wp(1/2) = e1 real positive, wp'(1/2) ~ 0
    Weierstrass eng(Lattice::from_tau(tau_i()), cfg);
    WpValue e1 = eng.wp(Cplx(Real(0.5)));
    CHECK(e1.value.re > 0);
    CHECK(abs(e1.value.im) < pow10(-30));
}

TEST_CASE("conjugation identity conj(wp_L(z)) = wp_conj(L)(conj z)") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    Real bound = cfg.tolerance();
    for (const TauSpec& spec : {tau_7(), TauSpec::numeric(0.37, 1.21, std::nullopt)}) {
        Lattice lat = Lattice::from_tau(spec);
        Weierstrass eng(lat, cfg);
        Weierstrass eng_conj(lat.conjugate(), cfg);
        Rng rng(11);
        for (int i = 0; i < 30; ++i) {
            Cplx z = random_nonpolar(rng, lat, eng);
            Cplx lhs = conj(eng.wp(z).value);
            Cplx rhs = eng_conj.wp(conj(z)).value;
            CHECK(abs(lhs - rhs) / (1 + abs(rhs)) < bound);
        }
    }
}

TEST_CASE("homogeneity under lattice rescaling") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    Real bound = cfg.tolerance();
    Lattice lat = Lattice::from_tau(tau_i());
    CHECK(homogeneity_check(Cplx(Real(0.31), Real(0.17)), Cplx(1), lat, cfg) == 0);
    CHECK(homogeneity_check(Cplx(Real(0.31), Real(0.17)), Cplx(2), lat, cfg) < bound);
    CHECK(homogeneity_check(Cplx(Real(-0.4), Real(0.9)), Cplx(Real(1), Real(1)), lat, cfg) < bound);
    // g2/g3 homogeneity weights -4 and -6
    Cplx lam(Real(1.5), Real(0.5));
    Weierstrass scaled(lat.scaled(lam), cfg);
    Weierstrass base(lat, cfg);
    Cplx l2 = lam * lam, l4 = l2 * l2, l6 = l4 * l2;
    CHECK(abs(scaled.invariants().g2 * l4 - base.invariants().g2) /
              (1 + abs(base.invariants().g2)) < bound);
    CHECK(abs(scaled.invariants().g3 * l6 - base.invariants().g3) /
              (1 + abs(base.invariants().g3)) < bound);
}

TEST_CASE("p_map real image on self-conjugate lattices and poles") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    Real bound = cfg.tolerance();
    Weierstrass eng(Lattice::from_tau(tau_2i()), cfg);
    // y = 0, x not an integer: image on the X-axis
    auto v = eng.p_map(Real(0.3), Real(0));
    REQUIRE(v.has_value());
    CHECK(abs((*v)[1]) < bound);
    // x = 0, y generic: also real by evenness
    auto w = eng.p_map(Real(0), Real(0.7));
    REQUIRE(w.has_value());
    CHECK(abs((*w)[1]) < bound);
    // pole inputs
    CHECK_FALSE(eng.p_map(Real(0), Real(0)).has_value());
    CHECK_FALSE(eng.p_map(Real(1) + pow10(-30), Real(0)).has_value());
    CHECK(eng.wp(Cplx(Real(3), Real(10))).is_pole);  // 3 + 5*omega2
}

TEST_CASE("self-conjugate lattices have real g2, g3") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    for (const TauSpec& spec : {tau_2i(), tau_7()}) {  // x = 0 and x = 1/2
        Weierstrass eng(Lattice::from_tau(spec), cfg);
        CHECK(abs(eng.invariants().g2.im) < pow10(-30));
        CHECK(abs(eng.invariants().g3.im) < pow10(-30));
    }
}

TEST_CASE("precision scaling: residuals track the digit count") {
    for (int digits : {20, 60}) {
        PrecisionCfg cfg;
        cfg.digits = digits;
        ScopedPrecision sp(cfg.working_digits());
        Lattice lat = Lattice::from_tau(tau_7());
        Weierstrass eng(lat, cfg);
        Rng rng(3);
        Real bound = cfg.tolerance();
        for (int i = 0; i < 10; ++i) {
            Cplx z = random_nonpolar(rng, lat, eng);
            auto [p, dp] = eng.wp_pair(z);
            Cplx lhs = dp.value * dp.value;
            Cplx rhs = Real(4) * p.value * p.value * p.value - eng.invariants().g2 * p.value -
                       eng.invariants().g3;
            CHECK(abs(lhs - rhs) / (1 + abs(p.value * p.value * p.value)) < bound);
        }
    }
}

TEST_CASE("general basis evaluation matches the normalized lattice") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    // <2, 2i> = 2 <1, i>, so wp_{2L}(2z) = wp_L(z)/4
    Lattice big = Lattice::from_basis(Cplx(2), Cplx(0, 2));
    Lattice unit = Lattice::from_tau(tau_i());
    Weierstrass eb(big, cfg), eu(unit, cfg);
    Cplx z(Real(0.62), Real(0.35));
    Cplx lhs = eb.wp(Real(2) * z).value;
    Cplx rhs = eu.wp(z).value / Real(4);
    CHECK(abs(lhs - rhs) / (1 + abs(rhs)) < cfg.tolerance());
}

TEST_CASE("invalid inputs") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    PrecisionCfg bad = cfg;
    bad.digits = 5;
    CHECK_THROWS_AS(Weierstrass(Lattice::from_tau(tau_i()), bad), std::invalid_argument);
    CHECK_THROWS_AS(Lattice::from_basis(Cplx(1), Cplx(2)), std::invalid_argument);
    Weierstrass eng(Lattice::from_tau(tau_i()), cfg);
    Real inf = Real(1) / Real(0);
    CHECK_THROWS_AS(eng.wp(Cplx(inf, Real(0))), std::invalid_argument);
}
