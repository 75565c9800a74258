#ifndef BIALG_VERIFY_HPP
#define BIALG_VERIFY_HPP

#include "bialg/classify.hpp"
#include "bialg/fit.hpp"
#include "bialg/sample.hpp"

namespace bialg {

// Base-change maps of the commutative diagram relating the real map to
// wp x wp_conj: f(v, w) = (v + iw, v - iw), g its inverse.
std::pair<Cplx, Cplx> f_map(const Cplx& v, const Cplx& w);
std::pair<Cplx, Cplx> g_map(const Cplx& a, const Cplx& b);

struct VerifyOptions {
    int samples = 512;
    int max_deg = 8;
    FitTolerances tol;
    std::uint64_t seed = 20250810ull;
    int snap_height = 50;
    double dir_tol = 1e-10;  // direction matching for family membership
};

struct LineVerdict {
    bool predicted = false;            // line in the classified family, up to translate
    FitResult fit;
    std::optional<bool> agree;         // empty when the fit is inconclusive
    SampleSet samples;
    std::vector<std::string> warnings;
};

// Confronts the exact classification with the sampled evidence for one line.
LineVerdict verify_line(const TauSpec& spec, const RealLine& line,
                        const PrecisionCfg& cfg, const VerifyOptions& opts);

// Samples a validated complex line W + sigma, evaluates wp_Lambda x
// wp_conj(Lambda) on it and fits a complex polynomial relation.
ComplexFitResult verify_complex_line(const TauSpec& spec, const ComplexLine& cl,
                                     const PrecisionCfg& cfg, const VerifyOptions& opts);

struct DensityReport {
    double coverage = 0;      // fraction of k x k torus cells hit
    double coverage_half = 0; // same with the first n/2 samples
    bool closed_orbit = false;
    FitResult fit;
};

// Reduces n line samples mod Lambda and measures cell coverage; a closed
// orbit stabilizes at O(k) of the k^2 cells while an irrational winding
// fills the grid.
DensityReport density_probe(const TauSpec& spec, const RealLine& line, int k, int n,
                            const PrecisionCfg& cfg, const VerifyOptions& opts);

struct HalflineReport {
    double min_x = 0;
    double max_x = 0;
    double e_root = 0;           // smallest critical value on the line (a root e_i)
    bool matches_e_root = false;
    bool bounded_below = false;  // every image X >= e_root - 1e-6
    bool is_half_line = false;   // a pole on the line makes the image unbounded above
};

// For a rectangular self-conjugate lattice (tau = iy): the x-axis image is
// a closed half-line starting at wp(omega1/2).  The sample grid is
// equispaced and contains the half-period minimizer.
HalflineReport halfline_check(const TauSpec& spec, const PrecisionCfg& cfg,
                              int n = 512, const Cplx& offset = Cplx(0));

} // namespace bialg

#endif
