#include "bialg/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "bialg/rng.hpp"

namespace bialg {

std::pair<Cplx, Cplx> f_map(const Cplx& v, const Cplx& w) {
    const Cplx iw = Cplx(-w.im, w.re);
    return {v + iw, v - iw};
}

std::pair<Cplx, Cplx> g_map(const Cplx& a, const Cplx& b) {
    const Cplx s = a + b;
    const Cplx d = a - b;
    return {s / Real(2), Cplx(d.im / 2, -d.re / 2)};  // d / (2i)
}

namespace {

// Is the direction u parallel to some lattice direction m + n*tau?
// Exact when the line carries its (m, n) tag; otherwise u = p + q*tau with
// real p, q and the line meets the lattice iff p : q is rational.
bool in_cm_family(const RealLine& line, const TauSpec& spec, double dir_tol) {
    if (line.lattice_dir) return true;
    Cplx tau = spec.tau();
    Cplx u = line.direction();
    Real q = u.im / tau.im;
    Real p = u.re - q * tau.re;
    Real scale = abs(p) + abs(q);
    if (abs(q) < Real(dir_tol) * scale) return true;  // horizontal: (m, n) = (1, 0)
    if (abs(p) < Real(dir_tol) * scale) return true;  // (0, 1)
    return recognize_rational(p / q, Int(10000)).has_value();
}

} // namespace

LineVerdict verify_line(const TauSpec& spec, const RealLine& line,
                        const PrecisionCfg& cfg, const VerifyOptions& opts) {
    ScopedPrecision sp(cfg.working_digits());
    Classification cls = classify(spec);

    LineVerdict out;
    out.warnings = cls.warnings;
    switch (cls.branch) {
    case Branch::OnlySingletons:
        out.predicted = false;
        break;
    case Branch::TwoLineFamily: {
        Real tol(opts.dir_tol);
        Cplx u = line.direction();
        out.predicted = lines_parallel(u, cls.line1->direction(), tol) ||
                        lines_parallel(u, cls.line2->direction(), tol);
        break;
    }
    case Branch::CmFamily:
        out.predicted = in_cm_family(line, spec, opts.dir_tol);
        break;
    }

    Weierstrass eng(Lattice::from_tau(spec), cfg);
    out.samples = sample_line(line, opts.samples, eng, opts.seed);
    out.fit = fit_vanishing_poly(out.samples.images, opts.max_deg, opts.tol,
                                 opts.snap_height);
    if (out.fit.verdict != FitVerdict::Inconclusive)
        out.agree = (out.fit.verdict == FitVerdict::Vanishing) == out.predicted;
    return out;
}

ComplexFitResult verify_complex_line(const TauSpec& spec, const ComplexLine& cl,
                                     const PrecisionCfg& cfg, const VerifyOptions& opts) {
    ScopedPrecision sp(cfg.working_digits());
    const Lattice lat = Lattice::from_tau(spec);
    const Lattice lat_conj = lat.conjugate();
    Weierstrass eng(lat, cfg);
    Weierstrass eng_conj(lat_conj, cfg);

    // W = C * w2; sample complex parameters in a box wide enough for the
    // first coordinate to cross several cells
    Real denom = abs(cl.w2[0]) + abs(cl.w2[1]);
    double range =
        (Real(6) * (abs(lat.omega1) + abs(lat.omega2)) / denom).convert_to<double>();
    Rng rng(opts.seed);

    std::vector<std::array<std::complex<double>, 2>> pts;
    int budget = opts.samples;
    for (int i = 0; i < budget; ++i) {
        Cplx c(Real(rng.uniform(-range, range)), Real(rng.uniform(-range, range)));
        Cplx p1 = c * cl.w2[0] + cl.sigma[0];
        Cplx p2 = c * cl.w2[1] + cl.sigma[1];
        WpValue u = eng.wp(p1);
        WpValue v = eng_conj.wp(p2);
        if (u.is_pole || v.is_pole) continue;
        std::complex<double> ud(u.value.re.convert_to<double>(),
                                u.value.im.convert_to<double>());
        std::complex<double> vd(v.value.re.convert_to<double>(),
                                v.value.im.convert_to<double>());
        if (std::abs(ud) > 1e12 || std::abs(vd) > 1e12) continue;
        pts.push_back({ud, vd});
    }
    if (pts.empty())
        throw std::runtime_error("verify_complex_line: every sample fell on a pole");
    return fit_vanishing_poly_complex(pts, opts.max_deg, opts.tol);
}

DensityReport density_probe(const TauSpec& spec, const RealLine& line, int k, int n,
                            const PrecisionCfg& cfg, const VerifyOptions& opts) {
    if (k < 8) throw std::invalid_argument("density_probe: need k >= 8");
    if (n < 0) throw std::invalid_argument("density_probe: need n >= 0");

    DensityReport rep;
    if (n > 0) {
        // Torus coordinates in double precision; no wp evaluation is needed
        // for coverage.
        double tx, ty, ux, uy, ox, oy;
        {
            ScopedPrecision sp(cfg.working_digits());
            Cplx tau = spec.tau();
            Cplx u = line.direction();
            tx = tau.re.convert_to<double>();
            ty = tau.im.convert_to<double>();
            ux = u.re.convert_to<double>();
            uy = u.im.convert_to<double>();
            ox = line.offset.re.convert_to<double>();
            oy = line.offset.im.convert_to<double>();
        }
        double cell = 1.0 + std::hypot(tx, ty);
        double range = double(n) / (2.0 * k) * cell;  // ~n/k windings
        Rng rng(opts.seed);
        std::vector<char> hit(size_t(k) * k, 0), hit_half(size_t(k) * k, 0);
        auto frac = [](double v) { return v - std::floor(v); };
        for (int i = 0; i < n; ++i) {
            double t = rng.uniform(-range, range);
            double zx = ox + t * ux, zy = oy + t * uy;
            // coordinates in the (1, tau) basis
            double beta = zy / ty;
            double alpha = zx - beta * tx;
            int ci = std::min(k - 1, int(frac(alpha) * k));
            int cj = std::min(k - 1, int(frac(beta) * k));
            hit[size_t(ci) * k + cj] = 1;
            if (i < n / 2) hit_half[size_t(ci) * k + cj] = 1;
        }
        int cells = 0, cells_half = 0;
        for (size_t i = 0; i < hit.size(); ++i) {
            cells += hit[i];
            cells_half += hit_half[i];
        }
        rep.coverage = double(cells) / double(k * k);
        rep.coverage_half = double(cells_half) / double(k * k);
        rep.closed_orbit = rep.coverage <= 12.0 / k &&
                           rep.coverage <= 1.25 * rep.coverage_half + 1e-12;

        ScopedPrecision sp(cfg.working_digits());
        Weierstrass eng(Lattice::from_tau(spec), cfg);
        SampleSet set = sample_line(line, opts.samples, eng, opts.seed);
        rep.fit = fit_vanishing_poly(set.images, opts.max_deg, opts.tol, opts.snap_height);
    }
    return rep;
}

HalflineReport halfline_check(const TauSpec& spec, const PrecisionCfg& cfg, int n,
                              const Cplx& offset) {
    ScopedPrecision sp(cfg.working_digits());
    if (n < 2) throw std::invalid_argument("halfline_check: need n >= 2");
    Cplx tau = spec.tau();
    if (abs(tau.re) > pow10(-(cfg.digits - 10)))
        throw std::invalid_argument("halfline_check: lattice must be rectangular (tau = iy)");

    Weierstrass eng(Lattice::from_tau(spec), cfg);
    HalflineReport rep;

    // Critical points of wp along the horizontal line sit at t = 0 and
    // t = 1/2 mod 1 (wp' vanishes exactly at half-lattice points); the
    // analytic minimum of the image is the smallest non-pole critical value.
    bool have_crit = false;
    rep.is_half_line = false;
    for (double tc : {0.0, 0.5}) {
        WpValue v = eng.wp(offset + Cplx(Real(tc), Real(0)));
        if (v.is_pole) {
            rep.is_half_line = true;  // image is unbounded above
            continue;
        }
        double x = v.value.re.convert_to<double>();
        if (!have_crit || x < rep.e_root) rep.e_root = x;
        have_crit = true;
    }
    if (!have_crit) throw std::invalid_argument("halfline_check: line passes through poles only");

    bool have = false;
    double minx = 0, maxx = 0;
    bool bounded = true;
    for (int j = 0; j < n; ++j) {
        // equispaced over one period; the grid contains both critical points
        Real t = Real(j) / n;
        WpValue v = eng.wp(offset + Cplx(t, Real(0)));
        if (v.is_pole) continue;
        double x = v.value.re.convert_to<double>();
        if (!have || x < minx) minx = x;
        if (!have || x > maxx) maxx = x;
        have = true;
        if (x < rep.e_root - 1e-6) bounded = false;
    }
    if (!have) throw std::runtime_error("halfline_check: all grid points were poles");
    rep.min_x = minx;
    rep.max_x = maxx;
    rep.matches_e_root = std::abs(minx - rep.e_root) < 1e-6;
    rep.bounded_below = bounded;
    return rep;
}

} // namespace bialg
