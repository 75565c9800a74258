#include "doctest.h"

#include <cmath>

#include "bialg/rng.hpp"
#include "bialg/verify.hpp"

using namespace bialg;

namespace {

PrecisionCfg cfg40() { return PrecisionCfg{}; }

TauSpec tau_i() { return TauSpec::exact_quadratic(QuadElem(Rat(0), Rat(1), -1)); }
TauSpec cbrt2_rect() { return TauSpec::geodesic(0, 0, 1, 1.2599210498948732, true); }

VerifyOptions fast_opts() {
    VerifyOptions o;
    o.samples = 320;
    o.max_deg = 6;
    return o;
}

} // namespace

TEST_CASE("f and g are mutually inverse and close the diagram") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    Real bound = cfg.tolerance();
    CHECK(abs(f_map(Cplx(1), Cplx(0)).first - Cplx(1)) < bound);
    CHECK(abs(f_map(Cplx(1), Cplx(0)).second - Cplx(1)) < bound);

    Rng rng(2);
    for (int i = 0; i < 50; ++i) {
        Cplx v(Real(rng.uniform(-3, 3)), Real(rng.uniform(-3, 3)));
        Cplx w(Real(rng.uniform(-3, 3)), Real(rng.uniform(-3, 3)));
        auto [a, b] = f_map(v, w);
        auto [v2, w2] = g_map(a, b);
        CHECK(abs(v2 - v) < bound);
        CHECK(abs(w2 - w) < bound);
    }

    // f(P(z)) = (wp_L(z), wp_conj(L)(conj z)) at random non-polar z
    TauSpec spec = TauSpec::numeric(0.37, 1.21, std::nullopt);
    Lattice lat = Lattice::from_tau(spec);
    Weierstrass eng(lat, cfg);
    Weierstrass eng_conj(lat.conjugate(), cfg);
    for (int i = 0; i < 30; ++i) {
        Cplx z(Real(rng.uniform(-1.5, 1.5)), Real(rng.uniform(-1.5, 1.5)));
        WpValue p = eng.wp(z);
        if (p.is_pole) continue;
        auto [a, b] = f_map(Cplx(p.value.re), Cplx(p.value.im));
        CHECK(abs(a - p.value) / (1 + abs(p.value)) < bound);
        Cplx rhs = eng_conj.wp(conj(z)).value;
        CHECK(abs(b - rhs) / (1 + abs(rhs)) < bound);
    }
}

TEST_CASE("sample_line basics") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    Weierstrass eng(Lattice::from_tau(tau_i()), cfg);
    RealLine axis = line_from_rho(Cplx(1));
    SampleSet set = sample_line(axis, 64, eng, 9);
    CHECK(set.images.size() >= 50);
    for (const auto& im : set.images) CHECK(std::abs(im[1]) < 1e-20);  // real image
    CHECK_THROWS_AS(sample_line(axis, 0, eng, 9), std::invalid_argument);
}

TEST_CASE("verify_line on the cube-root rectangular lattice (two-line family)") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    TauSpec spec = cbrt2_rect();
    VerifyOptions opts = fast_opts();

    // x-axis: predicted, vanishing at degree 1 with polynomial Y = 0
    LineVerdict x = verify_line(spec, line_from_rho(Cplx(1)), cfg, opts);
    CHECK(x.predicted);
    REQUIRE(x.fit.verdict == FitVerdict::Vanishing);
    CHECK(*x.fit.degree == 1);
    REQUIRE(x.fit.exact.has_value());
    CHECK(*x.fit.exact == std::vector<long long>{0, 0, 1});  // Y
    CHECK(x.agree == true);

    // y-axis
    LineVerdict y = verify_line(spec, line_from_rho(Cplx(0, -1)), cfg, opts);
    CHECK(y.predicted);
    REQUIRE(y.fit.verdict == FitVerdict::Vanishing);
    CHECK(*y.fit.degree == 1);
    CHECK(*y.fit.exact == std::vector<long long>{0, 0, 1});

    // translate of the x-axis by half a period: still vanishing, Y = 0
    RealLine shifted = line_from_rho(Cplx(1), Cplx(Real(0), spec.y() / 2));
    LineVerdict t = verify_line(spec, shifted, cfg, opts);
    CHECK(t.predicted);
    REQUIRE(t.fit.verdict == FitVerdict::Vanishing);
    CHECK(*t.fit.degree == 1);
    CHECK(*t.fit.exact == std::vector<long long>{0, 0, 1});
    CHECK(t.agree == true);

    // the diagonal y = x is not in the family
    LineVerdict diag = verify_line(spec, line_from_rho(inv(Cplx(Real(1), Real(1)))), cfg, opts);
    CHECK_FALSE(diag.predicted);
    CHECK(diag.fit.verdict == FitVerdict::NoRelation);
    CHECK(diag.agree == true);
}

TEST_CASE("verify_line on the unit circle at theta = 1.9 (sqrt-gamma lines)") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    double theta = 1.9;
    TauSpec spec = TauSpec::geodesic(1, 1, 0, theta, true);
    VerifyOptions opts = fast_opts();
    Classification cls = classify(spec);
    REQUIRE(cls.branch == Branch::TwoLineFamily);

    for (const RealLine* line : {&*cls.line1, &*cls.line2}) {
        LineVerdict v = verify_line(spec, *line, cfg, opts);
        CHECK(v.predicted);
        REQUIRE(v.fit.verdict == FitVerdict::Vanishing);
        CHECK(*v.fit.degree == 1);
        // fitted image line direction = arg(gamma) = -theta (mod pi)
        REQUIRE(v.fit.coeffs.size() == 3);
        double a = v.fit.coeffs[1], b = v.fit.coeffs[2];
        double dir = std::atan2(a, -b);  // direction of {c0 + aX + bY = 0}
        double want = -theta;
        double diff = std::fmod(std::abs(dir - want), M_PI);
        diff = std::min(diff, M_PI - diff);
        CHECK(diff < 1e-6);
    }

    // the coordinate axes are not bialgebraic here
    for (const Cplx& rho : {Cplx(1), Cplx(0, -1)}) {
        LineVerdict v = verify_line(spec, line_from_rho(rho), cfg, opts);
        CHECK_FALSE(v.predicted);
        CHECK(v.fit.verdict == FitVerdict::NoRelation);
        CHECK(v.agree == true);
    }
}

TEST_CASE("verify_line on CM tau = i") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    TauSpec spec = tau_i();
    VerifyOptions opts = fast_opts();

    // direction 1 + i: image is purely imaginary, X = 0
    LineVerdict d11 = verify_line(spec, rho_from_lattice_direction(1, 1, spec), cfg, opts);
    CHECK(d11.predicted);
    REQUIRE(d11.fit.verdict == FitVerdict::Vanishing);
    CHECK(*d11.fit.degree == 1);
    CHECK(*d11.fit.exact == std::vector<long long>{0, 1, 0});  // X

    // direction 1: image on the X-axis
    LineVerdict d1 = verify_line(spec, rho_from_lattice_direction(1, 0, spec), cfg, opts);
    CHECK(d1.predicted);
    REQUIRE(d1.fit.verdict == FitVerdict::Vanishing);
    CHECK(*d1.fit.exact == std::vector<long long>{0, 0, 1});  // Y

    // irrational slope 1 + sqrt(2) i: dense image, no relation
    Cplx dir(Real(1), sqrt(Real(2)));
    LineVerdict irr = verify_line(spec, line_from_rho(inv(dir)), cfg, opts);
    CHECK_FALSE(irr.predicted);
    CHECK(irr.fit.verdict == FitVerdict::NoRelation);
}

TEST_CASE("verify_line translate covariance") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    TauSpec spec = tau_i();
    VerifyOptions opts = fast_opts();
    RealLine base = rho_from_lattice_direction(1, 1, spec);
    RealLine moved = base;
    moved.offset = Cplx(Real(0.21), Real(0.13));
    LineVerdict a = verify_line(spec, base, cfg, opts);
    LineVerdict b = verify_line(spec, moved, cfg, opts);
    CHECK(a.predicted == b.predicted);
    CHECK(a.fit.verdict == FitVerdict::Vanishing);
    CHECK(b.fit.verdict == FitVerdict::Vanishing);
}

TEST_CASE("verify_complex_line: W1, W2 and a random slope") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    TauSpec spec = tau_i();
    Lattice lat = Lattice::from_tau(spec);
    Real tol = pow10(-30);
    VerifyOptions opts = fast_opts();
    opts.max_deg = 4;

    ComplexLine w1 = complex_bialgebraic_line({Cplx(1), Cplx(1)}, {Cplx(0, 1), Cplx(0, 1)},
                                              {Cplx(0), Cplx(0)}, lat, tol);
    ComplexFitResult r1 = verify_complex_line(spec, w1, cfg, opts);
    REQUIRE(r1.verdict == FitVerdict::Vanishing);
    CHECK(*r1.degree == 1);
    CHECK(std::abs(r1.coeffs[1] + r1.coeffs[2]) < 1e-8);  // u - v = 0

    ComplexLine w2 = complex_bialgebraic_line({Cplx(-1), Cplx(1)}, {Cplx(0, -1), Cplx(0, 1)},
                                              {Cplx(0), Cplx(0)}, lat, tol);
    ComplexFitResult r2 = verify_complex_line(spec, w2, cfg, opts);
    REQUIRE(r2.verdict == FitVerdict::Vanishing);
    CHECK(*r2.degree == 1);  // wp is even, so u = v here as well

    // a non-lattice complex slope is a negative control
    ComplexLine bad;
    bad.w2 = {Cplx(1), Cplx(Real(1.31), Real(0.57))};
    bad.w1 = {Cplx(0, 1), Cplx(Real(-0.57), Real(1.31))};
    bad.sigma = {Cplx(0), Cplx(0)};
    bad.r = bad.w1[1] / bad.w1[0];
    bad.t = Cplx(0, 1);
    ComplexFitResult r3 = verify_complex_line(spec, bad, cfg, opts);
    CHECK(r3.verdict == FitVerdict::NoRelation);
}

TEST_CASE("density probe separates closed orbits from dense windings") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    TauSpec spec = tau_i();
    VerifyOptions opts = fast_opts();

    DensityReport closed =
        density_probe(spec, rho_from_lattice_direction(1, 1, spec), 16, 8192, cfg, opts);
    CHECK(closed.closed_orbit);
    CHECK(closed.coverage < 0.2);
    CHECK(closed.fit.verdict == FitVerdict::Vanishing);

    Cplx dir(Real(1), sqrt(Real(2)));
    DensityReport dense = density_probe(spec, line_from_rho(inv(dir)), 16, 8192, cfg, opts);
    CHECK_FALSE(dense.closed_orbit);
    CHECK(dense.coverage > 0.95);
    CHECK(dense.fit.verdict == FitVerdict::NoRelation);

    DensityReport none = density_probe(spec, line_from_rho(Cplx(1)), 16, 0, cfg, opts);
    CHECK(none.coverage == 0);
    CHECK_THROWS_AS(density_probe(spec, line_from_rho(Cplx(1)), 4, 10, cfg, opts),
                    std::invalid_argument);
}

TEST_CASE("halfline_check on rectangular lattices") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    {
        TauSpec spec = TauSpec::exact_quadratic(QuadElem(Rat(0), Rat(2), -1));  // tau = 2i
        HalflineReport rep = halfline_check(spec, cfg, 512);
        CHECK(rep.matches_e_root);
        CHECK(rep.bounded_below);
        CHECK(rep.is_half_line);
        Weierstrass eng(Lattice::from_tau(spec), cfg);
        CHECK(std::abs(rep.e_root - eng.invariants().roots[0].re.convert_to<double>()) < 1e-12);
    }
    {
        TauSpec spec = tau_i();
        HalflineReport rep = halfline_check(spec, cfg, 512);
        CHECK(rep.matches_e_root);
        CHECK(rep.e_root > 0);  // lemniscatic e1 = wp(1/2) > 0
    }
    {
        // offset by omega2/2: the image is the bounded interval [e3, e2]
        TauSpec spec = TauSpec::exact_quadratic(QuadElem(Rat(0), Rat(2), -1));
        Weierstrass eng(Lattice::from_tau(spec), cfg);
        HalflineReport rep = halfline_check(spec, cfg, 512, Cplx(Real(0), Real(1)));  // omega2/2 = i
        CHECK(rep.matches_e_root);
        CHECK_FALSE(rep.is_half_line);
        double e2 = eng.invariants().roots[1].re.convert_to<double>();
        double e3 = eng.invariants().roots[2].re.convert_to<double>();
        CHECK(std::abs(rep.min_x - e3) < 1e-6);
        CHECK(std::abs(rep.max_x - e2) < 1e-6);
    }
    // non-rectangular input is rejected
    CHECK_THROWS_AS(halfline_check(TauSpec::geodesic(1, 1, 0, 1.9, true), cfg, 64),
                    std::invalid_argument);
}

TEST_CASE("negative controls: random lines yield NO_RELATION") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    VerifyOptions opts = fast_opts();
    Rng rng(1234);
    for (const TauSpec& spec : {tau_i(), cbrt2_rect()}) {
        int ok = 0;
        const int trials = 6;  // the acceptance suite runs the full 20
        for (int i = 0; i < trials; ++i) {
            double ang = rng.uniform(0.07, M_PI - 0.07);
            RealLine line = line_from_rho(inv(polar(Real(1), Real(ang))),
                                          Cplx(Real(rng.uniform(-0.3, 0.3)),
                                               Real(rng.uniform(-0.3, 0.3))));
            LineVerdict v = verify_line(spec, line, cfg, opts);
            if (v.fit.verdict == FitVerdict::NoRelation && !v.predicted) ++ok;
        }
        CHECK(ok >= trials - 1);
    }
}

TEST_CASE("fit soundness: vanishing polynomial evaluates small on fresh samples") {
    PrecisionCfg cfg = cfg40();
    ScopedPrecision sp(cfg.working_digits());
    TauSpec spec = cbrt2_rect();
    VerifyOptions opts = fast_opts();
    LineVerdict v = verify_line(spec, line_from_rho(Cplx(1)), cfg, opts);
    REQUIRE(v.fit.verdict == FitVerdict::Vanishing);
    Weierstrass eng(Lattice::from_tau(spec), cfg);
    SampleSet fresh = sample_line(line_from_rho(Cplx(1)), 100, eng, opts.seed + 1);
    // normalize the fresh batch the way the fitter saw the data
    double scale = 0;
    for (const auto& im : fresh.images)
        scale = std::max({scale, std::abs(im[0]), std::abs(im[1])});
    for (const auto& im : fresh.images) {
        double q = eval_poly(v.fit.coeffs, im[0], im[1]);
        CHECK(std::abs(q) / (1 + scale) < opts.tol.tol_hold);
    }
}
